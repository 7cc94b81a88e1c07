//! Module categories over `V(G, α)`, twisted group algebras `k[H, ξ̃]`,
//! their modules, locality and the local-module category.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::abgroup::{coset_space, stabiliser, GSet, GroupElement, Subgroup, Subquotient};
use crate::braided::{
    centre_simples, induced_form, is_isotropic, orthogonal_complement, quadratic_check, trace_quadratic, AbelianCocycle,
    QuadraticForm,
};
use crate::check::{Check, Witness};
use crate::cochain::{Cochain, Domain, GSetCochain};
use crate::error::{Error, Result};
use crate::linalg::SparseSystem;
use crate::monoidal::PointedCategory;

/// `M(X, ξ)`: a G-set with a 2-cochain in `Map(X, ℤ/N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleCategoryData {
    category: PointedCategory,
    constraint: GSetCochain,
}

impl ModuleCategoryData {
    pub fn new(category: PointedCategory, constraint: GSetCochain) -> Result<Self> {
        if constraint.group() != category.group() {
            return Err(Error::InvalidGSet("G-set is over a different group".into()));
        }
        if constraint.degree() != 2 {
            return Err(Error::Precondition("module constraint must have degree 2".into()));
        }
        if constraint.modulus() != category.modulus() {
            return Err(Error::ModulusMismatch {
                left: category.modulus(),
                right: constraint.modulus(),
            });
        }
        Ok(ModuleCategoryData { category, constraint })
    }

    /// The least-effort `ξ` with `dξ = α` on the given G-set, if any.
    pub fn solve(category: &PointedCategory, gset: &GSet) -> Result<Option<Self>> {
        let target = GSetCochain::constant(category.associator(), gset)?;
        Ok(target.solve_coboundary()?.map(|constraint| ModuleCategoryData {
            category: category.clone(),
            constraint,
        }))
    }

    pub fn category(&self) -> &PointedCategory {
        &self.category
    }

    pub fn gset(&self) -> &GSet {
        self.constraint.gset()
    }

    pub fn constraint(&self) -> &GSetCochain {
        &self.constraint
    }
}

/// `dξ = α` with `Map(X, ℤ/N)` coefficients.
pub fn module_constraint_check(m: &ModuleCategoryData) -> Result<Check> {
    let lhs = m.constraint.coboundary()?;
    let rhs = GSetCochain::constant(m.category.associator(), m.gset())?;
    Ok(match lhs.first_difference(&rhs) {
        None => Check::pass(),
        Some((args, point)) => {
            let d = lhs.domain();
            let t: Vec<usize> = args.iter().map(|a| d.index_of(a).expect("group element")).collect();
            let n = m.category.modulus();
            let residual = (lhs.get(&t, point) + n - rhs.get(&t, point)) % n;
            Check {
                pass: false,
                witness: Some(Witness {
                    condition: "module associativity".into(),
                    args,
                    point: Some(point),
                    residual,
                }),
            }
        }
    })
}

/// `k[H, ξ̃]`: basis `a_h`, `a_h a_k = ξ̃(h,k) a_{h+k}`, unit `a_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedGroupAlgebra {
    subgroup: Subgroup,
    cocycle: Cochain,
}

impl TwistedGroupAlgebra {
    pub fn new(subgroup: Subgroup, cocycle: Cochain) -> Result<Self> {
        if cocycle.degree() != 2 {
            return Err(Error::Precondition("multiplication cocycle must have degree 2".into()));
        }
        if cocycle.domain().subgroup() != &subgroup {
            return Err(Error::Precondition("multiplication cocycle lives on a different subgroup".into()));
        }
        Ok(TwistedGroupAlgebra { subgroup, cocycle })
    }

    /// `ξ̃ = 0` on `H`.
    pub fn untwisted(subgroup: &Subgroup, modulus: u32) -> Result<Self> {
        let d = Domain::of_subgroup(subgroup);
        Self::new(subgroup.clone(), Cochain::zero(&d, 2, modulus)?)
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn cocycle(&self) -> &Cochain {
        &self.cocycle
    }

    pub fn modulus(&self) -> u32 {
        self.cocycle.modulus()
    }

    pub fn dimension(&self) -> usize {
        self.subgroup.order()
    }

    fn domain(&self) -> &Arc<Domain> {
        self.cocycle.domain()
    }

    /// `a_h a_k` as `(exponent, h + k)`.
    pub fn product(&self, h: &[u32], k: &[u32]) -> Result<(u32, GroupElement)> {
        let d = self.domain();
        let (i, j) = (local(d, h)?, local(d, k)?);
        Ok((self.cocycle.get(&[i, j]), d.member(d.add(i, j)).clone()))
    }
}

fn local(d: &Domain, x: &[u32]) -> Result<usize> {
    d.index_of(x).ok_or_else(|| Error::NotSubgroup(format!("{x:?} is not in the subgroup")))
}

fn args_of(d: &Domain, t: &[usize]) -> Vec<GroupElement> {
    t.iter().map(|&i| d.member(i).clone()).collect()
}

/// `ξ̃(g,h) + ξ̃(f,g+h) = α(f,g,h) + ξ̃(f,g) + ξ̃(f+g,h)` on `H`.
pub fn associativity_check(a: &TwistedGroupAlgebra, alpha: &Cochain) -> Result<Check> {
    let restricted = alpha.restrict(&a.subgroup)?;
    if restricted.modulus() != a.modulus() {
        return Err(Error::ModulusMismatch {
            left: restricted.modulus(),
            right: a.modulus(),
        });
    }
    let d = a.domain();
    let x = &a.cocycle;
    let n = a.modulus() as i64;
    for f in 0..d.len() {
        for g in 0..d.len() {
            for h in 0..d.len() {
                let lhs = x.get(&[g, h]) as i64 + x.get(&[f, d.add(g, h)]) as i64;
                let rhs = restricted.get(&[f, g, h]) as i64 + x.get(&[f, g]) as i64 + x.get(&[d.add(f, g), h]) as i64;
                let r = (lhs - rhs).rem_euclid(n);
                if r != 0 {
                    return Ok(Check::fail("algebra associativity", args_of(d, &[f, g, h]), r as u32));
                }
            }
        }
    }
    Ok(Check::pass())
}

/// `a_0 a_h = a_h = a_h a_0`.
pub fn unit_check(a: &TwistedGroupAlgebra) -> Check {
    let d = a.domain();
    for h in 0..d.len() {
        for v in [a.cocycle.get(&[0, h]), a.cocycle.get(&[h, 0])] {
            if v != 0 {
                return Check::fail("algebra unit", args_of(d, &[h]), v);
            }
        }
    }
    Check::pass()
}

/// Algebra structure on `⊕_{h∈H} I(h)` solving `dξ̃ = α|_H`; when
/// possible the solution also satisfies `ξ̃(h,k) = γ(h,k) + ξ̃(k,h)`. Among
/// the admissible solutions the least table is taken.
pub fn canonical_algebra(ac: &AbelianCocycle, h: &Subgroup) -> Result<Option<TwistedGroupAlgebra>> {
    if h.parent() != ac.group() {
        return Err(Error::NotSubgroup("subgroup of a different group".into()));
    }
    let d = Domain::of_subgroup(h);
    let n = ac.modulus();
    let alpha = ac.associator().restrict(h)?;
    let gamma = ac.braiding().restrict(h)?;
    let cols = Cochain::free_positions(&d, 2)?;
    let mut col_of = vec![usize::MAX; d.table_size(2)?];
    for (j, &p) in cols.iter().enumerate() {
        col_of[p] = j;
    }
    let var = |t: [usize; 2]| (t[0] != 0 && t[1] != 0).then(|| col_of[d.tuple_index(&t)]);
    let mut associative = SparseSystem::new(n, cols.len());
    let m = d.len();
    for f in 1..m {
        for g in 1..m {
            for k in 1..m {
                let terms = [
                    ([g, k], 1),
                    ([d.add(f, g), k], -1),
                    ([f, d.add(g, k)], 1),
                    ([f, g], -1),
                ];
                let row: Vec<(usize, i64)> = terms.iter().filter_map(|&(t, s)| var(t).map(|v| (v, s))).collect();
                associative.push(row, alpha.get(&[f, g, k]) as i64);
            }
        }
    }
    let mut joint = associative.clone();
    for x in 1..m {
        for y in 1..m {
            joint.push([(col_of[d.tuple_index(&[x, y])], 1), (col_of[d.tuple_index(&[y, x])], -1)], gamma.get(&[x, y]) as i64);
        }
    }
    let Some(sol) = joint.solve().or_else(|| associative.solve()) else { return Ok(None) };
    let mut entries = vec![0u32; d.table_size(2)?];
    for (j, &p) in cols.iter().enumerate() {
        entries[p] = sol[j];
    }
    let cocycle = Cochain::from_entries(&d, 2, n, entries)?;
    let a = TwistedGroupAlgebra::new(h.clone(), cocycle)?;
    debug_assert!(associativity_check(&a, ac.associator())?.pass);
    Ok(Some(a))
}

/// `μ c_{A,A} = μ` on basis elements: `ξ̃(h,k) = γ(h,k) + ξ̃(k,h)`.
pub fn commutativity_check(a: &TwistedGroupAlgebra, ac: &AbelianCocycle) -> Result<Check> {
    if a.subgroup.parent() != ac.group() || a.modulus() != ac.modulus() {
        return Err(Error::Precondition("algebra and braided category do not match".into()));
    }
    if let Some(w) = associativity_check(a, ac.associator())?.witness {
        return Err(Error::Precondition(format!("algebra is not associative at {:?}", w.args)));
    }
    let d = a.domain();
    let gamma = ac.braiding().restrict(&a.subgroup)?;
    let n = a.modulus() as i64;
    for h in 0..d.len() {
        for k in 0..d.len() {
            let r = (a.cocycle.get(&[h, k]) as i64 - gamma.get(&[h, k]) as i64 - a.cocycle.get(&[k, h]) as i64).rem_euclid(n);
            if r != 0 {
                return Ok(Check::fail("commutativity", args_of(d, &[h, k]), r as u32));
            }
        }
    }
    Ok(Check::pass())
}

/// The internal end of `I(x)`: `k[St(x), ξ̃]` with `ξ̃` read off at `x`.
pub fn internal_end(m: &ModuleCategoryData, x: usize) -> Result<TwistedGroupAlgebra> {
    if let Some(w) = module_constraint_check(m)?.witness {
        return Err(Error::Precondition(format!("module constraint fails at {:?}", w.args)));
    }
    let h = stabiliser(m.gset(), x)?;
    let a = TwistedGroupAlgebra::new(h, m.constraint.shapiro_restrict(x)?)?;
    if let Some(w) = associativity_check(&a, m.category.associator())?.witness {
        return Err(Error::Precondition(format!("restricted constraint is not associative at {:?}", w.args)));
    }
    Ok(a)
}

/// A right `A`-module graded by a union of `H`-cosets: `m_s · a_h = ν(s,h) m_{s+h}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleData {
    algebra: TwistedGroupAlgebra,
    support: Vec<GroupElement>,
    /// `ν` indexed by support position and local index in `H`.
    action: Vec<u32>,
}

impl ModuleData {
    /// Unlisted action exponents are zero.
    pub fn new(
        algebra: TwistedGroupAlgebra,
        mut support: Vec<GroupElement>,
        action: &BTreeMap<(GroupElement, GroupElement), u32>,
    ) -> Result<Self> {
        let g = algebra.subgroup.parent().clone();
        for s in &support {
            g.check(s)?;
        }
        support.sort();
        support.dedup();
        if support.is_empty() {
            return Err(Error::Precondition("a module needs a nonempty support".into()));
        }
        let h = algebra.subgroup.elements();
        for s in &support {
            for x in &h {
                if support.binary_search(&g.add(s, x)).is_err() {
                    return Err(Error::Precondition(format!("support is not stable under {x:?}")));
                }
            }
        }
        let mut table = vec![0u32; support.len() * h.len()];
        let n = algebra.modulus();
        for ((s, x), &v) in action {
            let i = support
                .binary_search(s)
                .map_err(|_| Error::Precondition(format!("{s:?} is outside the support")))?;
            let j = local(algebra.domain(), x)?;
            table[i * h.len() + j] = v % n;
        }
        Ok(ModuleData {
            algebra,
            support,
            action: table,
        })
    }

    /// `I(s)⊗A`: supported on `s + H` with `ν(s+h', k) = ξ̃(h',k) − α(s,h',k)`.
    pub fn free(algebra: &TwistedGroupAlgebra, alpha: &Cochain, s: &[u32]) -> Result<Self> {
        let g = algebra.subgroup.parent();
        g.check(s)?;
        let d = algebra.domain().clone();
        let n = algebra.modulus() as i64;
        let mut action = BTreeMap::new();
        for hp in 0..d.len() {
            for k in 0..d.len() {
                let x = g.add(s, d.member(hp));
                let v = algebra.cocycle.get(&[hp, k]) as i64
                    - alpha.value(&[s, d.member(hp), d.member(k)])? as i64;
                action.insert((x, d.member(k).clone()), v.rem_euclid(n) as u32);
            }
        }
        let support = (0..d.len()).map(|hp| g.add(s, d.member(hp))).collect();
        Self::new(algebra.clone(), support, &action)
    }

    pub fn algebra(&self) -> &TwistedGroupAlgebra {
        &self.algebra
    }

    pub fn support(&self) -> &[GroupElement] {
        &self.support
    }

    pub fn action(&self, s: &[u32], h: &[u32]) -> Result<u32> {
        let i = self
            .support
            .binary_search(&s.to_vec())
            .map_err(|_| Error::Precondition(format!("{s:?} is outside the support")))?;
        let j = local(self.algebra.domain(), h)?;
        Ok(self.action[i * self.algebra.dimension() + j])
    }

    /// Action exponents keyed by `(support degree, algebra degree)`.
    pub fn action_table(&self) -> BTreeMap<(GroupElement, GroupElement), u32> {
        let d = self.algebra.domain();
        let mut out = BTreeMap::new();
        for (i, s) in self.support.iter().enumerate() {
            for j in 0..d.len() {
                out.insert((s.clone(), d.member(j).clone()), self.action[i * d.len() + j]);
            }
        }
        out
    }
}

/// Unit `ν(m, 0) = 0` and `ξ̃(h,k) + ν(s,h+k) = α(s,h,k) + ν(s,h) + ν(s+h,k)`.
pub fn module_check(m: &ModuleData, alpha: &Cochain) -> Result<Check> {
    let a = &m.algebra;
    let g = a.subgroup.parent();
    if alpha.group() != g || alpha.modulus() != a.modulus() {
        return Err(Error::Precondition("module and associator do not match".into()));
    }
    let d = a.domain();
    let n = a.modulus() as i64;
    for s in &m.support {
        let unit = m.action(s, &g.zero())?;
        if unit != 0 {
            return Ok(Check::fail("module unit", vec![s.clone()], unit));
        }
        for h in 0..d.len() {
            let sh = g.add(s, d.member(h));
            for k in 0..d.len() {
                let lhs = a.cocycle.get(&[h, k]) as i64 + m.action(s, d.member(d.add(h, k)))? as i64;
                let rhs = alpha.value(&[s, d.member(h), d.member(k)])? as i64
                    + m.action(s, d.member(h))? as i64
                    + m.action(&sh, d.member(k))? as i64;
                let r = (lhs - rhs).rem_euclid(n);
                if r != 0 {
                    return Ok(Check::fail(
                        "module action",
                        vec![s.clone(), d.member(h).clone(), d.member(k).clone()],
                        r as u32,
                    ));
                }
            }
        }
    }
    Ok(Check::pass())
}

/// Trivial double braiding: `γ(h,m) + γ(m,h) = 0` for support degrees `m`.
pub fn local_check(m: &ModuleData, ac: &AbelianCocycle) -> Result<Check> {
    if let Some(w) = module_check(m, ac.associator())?.witness {
        return Err(Error::Precondition(format!("{} fails at {:?}", w.condition, w.args)));
    }
    let n = ac.modulus();
    let d = m.algebra.domain();
    for s in &m.support {
        for h in d.members() {
            let r = (ac.braiding().value(&[h, s])? + ac.braiding().value(&[s, h])?) % n;
            if r != 0 {
                return Ok(Check::fail("locality", vec![s.clone(), h.clone()], r));
            }
        }
    }
    Ok(Check::pass())
}

/// One simple right module per coset of `H`, generated at the least element
/// of the coset.
pub fn simple_modules(a: &TwistedGroupAlgebra, alpha: &Cochain) -> Result<Vec<ModuleData>> {
    let (_, reps) = coset_space(a.subgroup.parent(), &a.subgroup)?;
    reps.iter().map(|s| ModuleData::free(a, alpha, s)).collect()
}

pub fn simple_local_modules(a: &TwistedGroupAlgebra, ac: &AbelianCocycle) -> Result<Vec<ModuleData>> {
    let mut out = Vec::new();
    for m in simple_modules(a, ac.associator())? {
        if local_check(&m, ac)?.pass {
            out.push(m);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranscriptStep {
    pub name: String,
    pub pass: bool,
}

fn step(name: &str, pass: bool) -> TranscriptStep {
    TranscriptStep {
        name: name.to_string(),
        pass,
    }
}

/// `H⊥/H` with the induced form.
#[derive(Debug, Clone)]
pub struct LocalCategory {
    pub subgroup: Subgroup,
    pub complement: Subgroup,
    pub quotient: Subquotient,
    pub form: QuadraticForm,
    pub transcript: Vec<TranscriptStep>,
}

/// The local-module category of `A(H)` in `C(G, q)`, as `(H⊥/H, q̄)`.
pub fn local_category_of_form(q: &QuadraticForm, h: &Subgroup) -> Result<LocalCategory> {
    let mut transcript = Vec::new();
    let q_ok = quadratic_check(q).pass;
    transcript.push(step("q is quadratic", q_ok));
    if !q_ok {
        return Err(Error::Precondition("not a quadratic form".into()));
    }
    let iso = is_isotropic(h, q)?;
    transcript.push(step("H is isotropic", iso));
    if !iso {
        return Err(Error::Precondition("subgroup is not isotropic".into()));
    }
    let perp = orthogonal_complement(q, h)?;
    transcript.push(step("H is contained in its orthogonal complement", h.is_subgroup_of(&perp)));
    let (form, quotient) = induced_form(q, &perp, h)?;
    transcript.push(step("induced form is independent of representatives", true));
    transcript.push(step("induced form is quadratic", quadratic_check(&form).pass));
    Ok(LocalCategory {
        subgroup: h.clone(),
        complement: perp,
        quotient,
        form,
        transcript,
    })
}

pub fn local_category(ac: &AbelianCocycle, h: &Subgroup) -> Result<LocalCategory> {
    local_category_of_form(&trace_quadratic(ac), h)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dimensions {
    pub category: usize,
    pub algebra: usize,
    pub modules: usize,
    pub local_modules: usize,
    /// Simple objects of the centre; only modelled for the trivial associator.
    pub centre: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub dims: Dimensions,
    pub identities: Vec<TranscriptStep>,
}

/// Dimensions of `C`, `A(H)`, `C_A`, `C_A^loc` and `Z(C)` from explicit
/// simple objects, with the identities relating them.
pub fn dims_report(ac: &AbelianCocycle, h: &Subgroup) -> Result<DimensionReport> {
    let q = trace_quadratic(ac);
    if !is_isotropic(h, &q)? {
        return Err(Error::Precondition("subgroup is not isotropic".into()));
    }
    let a = canonical_algebra(ac, h)?.ok_or_else(|| Error::Precondition("no algebra structure on the subgroup".into()))?;
    let modules = simple_modules(&a, ac.associator())?.len();
    let local_modules = simple_local_modules(&a, ac)?.len();
    let perp = orthogonal_complement(&q, h)?;
    let centre = if ac.associator().is_zero() {
        Some(centre_simples(ac.category())?.simples.len())
    } else {
        None
    };
    let g = ac.group().order();
    let d = h.order();
    let mut identities = vec![
        step("dim(C_A) d(A) = dim(C)", modules * d == g),
        step("dim(C_A^loc) d(A)^2 = dim(C)", local_modules * d * d == g),
        step("local modules correspond to H-perp/H", local_modules * d == perp.order()),
    ];
    if let Some(z) = centre {
        identities.push(step("dim(Z(C)) = dim(C)^2", z == g * g));
    }
    Ok(DimensionReport {
        dims: Dimensions {
            category: g,
            algebra: d,
            modules,
            local_modules,
            centre,
        },
        identities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::{enumerate_subgroups, groups_up_to_order, FinAbGroup};
    use crate::braided::{bilinear_form, is_nondegenerate, parametric_forms, standard_cocycle};
    use crate::cochain::tests::cyclic_cocycle;

    fn g(f: &[u32]) -> FinAbGroup {
        FinAbGroup::new(f.to_vec()).unwrap()
    }

    fn form(grp: &FinAbGroup, n: u32, f: impl Fn(&GroupElement) -> i64) -> QuadraticForm {
        QuadraticForm::from_fn(grp, n, f).unwrap()
    }

    fn sub(grp: &FinAbGroup, gens: &[&[u32]]) -> Subgroup {
        Subgroup::generated(grp, &gens.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn module_constraint_examples() {
        let z4 = g(&[4]);
        let h = sub(&z4, &[&[2]]);
        let (x, _) = coset_space(&z4, &h).unwrap();
        let triv = PointedCategory::trivial(&z4, 8).unwrap();
        let m = ModuleCategoryData::new(triv.clone(), GSetCochain::zero(&x, 2, 8).unwrap()).unwrap();
        assert!(module_constraint_check(&m).unwrap().pass);
        // odd classes do not restrict to coboundaries on {0,2}
        let odd = PointedCategory::new(cyclic_cocycle(4, 1, 8)).unwrap();
        assert!(ModuleCategoryData::solve(&odd, &x).unwrap().is_none());
        let even = PointedCategory::new(cyclic_cocycle(4, 2, 8)).unwrap();
        let m = ModuleCategoryData::solve(&even, &x).unwrap().unwrap();
        assert!(module_constraint_check(&m).unwrap().pass);
        let mut bad = m.constraint().clone();
        let v = bad.get(&[1, 2], 1);
        bad.set(&[1, 2], 1, v as i64 + 1).unwrap();
        let bad = ModuleCategoryData::new(even.clone(), bad).unwrap();
        let check = module_constraint_check(&bad).unwrap();
        assert!(!check.pass);
        assert!(check.witness.unwrap().point.is_some());
        let a = internal_end(&m, 0).unwrap();
        assert_eq!(a.subgroup(), &h);
        assert_eq!(a.cocycle().coboundary().unwrap(), even.associator().restrict(&h).unwrap());
        assert!(internal_end(&bad, 0).is_err());
    }

    #[test]
    fn internal_end_of_regular_and_point() {
        for grp in [g(&[4]), g(&[2, 2]), g(&[6])] {
            let n = grp.default_modulus();
            let (reg, _) = coset_space(&grp, &Subgroup::trivial(&grp)).unwrap();
            let e = grp.exponent();
            let alpha = if grp.rank() == 1 {
                cyclic_cocycle(e, 1, e).lift(n).unwrap()
            } else {
                Cochain::zero_on(&grp, 3, n).unwrap()
            };
            let c = PointedCategory::new(alpha).unwrap();
            // every class is a coboundary on the regular G-set
            let m = ModuleCategoryData::solve(&c, &reg).unwrap().unwrap();
            for x in 0..reg.len() {
                let a = internal_end(&m, x).unwrap();
                assert!(a.subgroup().is_trivial());
                assert_eq!(a.dimension(), 1);
            }
            let pt = GSet::point(&grp);
            if let Some(m) = ModuleCategoryData::solve(&c, &pt).unwrap() {
                let a = internal_end(&m, 0).unwrap();
                assert!(a.subgroup().is_whole());
                assert_eq!(a.cocycle().entries(), m.constraint().at_point(0).unwrap().entries());
            }
        }
        // two orbits
        let z2 = g(&[2]);
        let x = GSet::new(&z2, 3, vec![vec![1, 0, 2]]).unwrap();
        let c = PointedCategory::trivial(&z2, 4).unwrap();
        let m = ModuleCategoryData::solve(&c, &x).unwrap().unwrap();
        assert!(internal_end(&m, 0).unwrap().subgroup().is_trivial());
        assert!(internal_end(&m, 2).unwrap().subgroup().is_whole());
    }

    #[test]
    fn isotropy_examples() {
        let z4 = g(&[4]);
        let h = sub(&z4, &[&[2]]);
        let q4 = form(&z4, 4, |x| (x[0] * x[0]) as i64);
        let q8 = form(&z4, 8, |x| (x[0] * x[0]) as i64);
        assert!(is_isotropic(&Subgroup::trivial(&z4), &q8).unwrap());
        assert!(is_isotropic(&h, &q4).unwrap());
        assert!(!is_isotropic(&h, &q8).unwrap());
        assert_eq!(orthogonal_complement(&q8, &h).unwrap().order(), 2);
        assert!(orthogonal_complement(&q8, &Subgroup::trivial(&z4)).unwrap().is_whole());
        for p in [3u32, 5] {
            let grp = g(&[p, p]);
            let q = form(&grp, p, |x| (x[0] * x[1]) as i64);
            let h = sub(&grp, &[&[1, 0]]);
            assert_eq!(orthogonal_complement(&q, &h).unwrap(), h);
        }
    }

    #[test]
    fn commutativity_examples() {
        let z4 = g(&[4]);
        let q4 = form(&z4, 4, |x| (x[0] * x[0]) as i64);
        let ac = standard_cocycle(&q4).unwrap();
        let a = canonical_algebra(&ac, &sub(&z4, &[&[2]])).unwrap().unwrap();
        assert!(commutativity_check(&a, &ac).unwrap().pass);
        let triv = canonical_algebra(&ac, &Subgroup::trivial(&z4)).unwrap().unwrap();
        assert!(commutativity_check(&triv, &ac).unwrap().pass);
        // semion: q(1) = i, no commutative algebra on ℤ/2
        let z2 = g(&[2]);
        let semion = standard_cocycle(&form(&z2, 4, |x| x[0] as i64)).unwrap();
        let whole = Subgroup::whole(&z2);
        if let Some(a) = canonical_algebra(&semion, &whole).unwrap() { assert!(!commutativity_check(&a, &semion).unwrap().pass) }
        let twisted = TwistedGroupAlgebra::untwisted(&whole, 4).unwrap();
        assert!(commutativity_check(&twisted, &semion).is_err());
    }

    /// Every `ξ̃` with `dξ̃ = α|_H` on a small subgroup, by brute force.
    fn all_multiplications(ac: &AbelianCocycle, h: &Subgroup) -> Vec<TwistedGroupAlgebra> {
        let d = Domain::of_subgroup(h);
        let n = ac.modulus();
        let free = Cochain::free_positions(&d, 2).unwrap();
        let total = (n as usize).pow(free.len() as u32);
        let mut out = Vec::new();
        for mut code in 0..total {
            let mut entries = vec![0u32; d.table_size(2).unwrap()];
            for &p in &free {
                entries[p] = (code % n as usize) as u32;
                code /= n as usize;
            }
            let a = TwistedGroupAlgebra::new(h.clone(), Cochain::from_entries(&d, 2, n, entries).unwrap()).unwrap();
            if associativity_check(&a, ac.associator()).unwrap().pass {
                out.push(a);
            }
        }
        out
    }

    #[test]
    fn commutative_iff_isotropic_by_brute_force() {
        for (grp, n) in [(g(&[2]), 8), (g(&[3]), 18), (g(&[4]), 8), (g(&[2, 2]), 4)] {
            for q in parametric_forms(&grp, n, 64).unwrap() {
                let ac = standard_cocycle(&q).unwrap();
                for h in enumerate_subgroups(&grp, 64).unwrap() {
                    if Cochain::free_positions(&Domain::of_subgroup(&h), 2).unwrap().len() > 4 {
                        continue;
                    }
                    let any_comm = all_multiplications(&ac, &h)
                        .iter()
                        .any(|a| commutativity_check(a, &ac).unwrap().pass);
                    let iso = is_isotropic(&h, &q).unwrap();
                    assert_eq!(any_comm, iso);
                    let canon = canonical_algebra(&ac, &h).unwrap();
                    let canon_comm = canon.is_some_and(|a| commutativity_check(&a, &ac).unwrap().pass);
                    assert_eq!(canon_comm, iso);
                }
            }
        }
    }

    #[test]
    fn free_modules_are_modules() {
        for (grp, n) in [(g(&[4]), 32), (g(&[2, 2]), 8), (g(&[6]), 72)] {
            for q in parametric_forms(&grp, n, 64).unwrap().iter().step_by(3) {
                let ac = standard_cocycle(q).unwrap();
                for h in enumerate_subgroups(&grp, 64).unwrap() {
                    let Some(a) = canonical_algebra(&ac, &h).unwrap() else { continue };
                    assert!(unit_check(&a).pass);
                    let mods = simple_modules(&a, ac.associator()).unwrap();
                    assert_eq!(mods.len(), grp.order() / h.order());
                    for m in &mods {
                        assert!(module_check(m, ac.associator()).unwrap().pass);
                    }
                    // A over itself
                    let reg = ModuleData::free(&a, ac.associator(), &grp.zero()).unwrap();
                    for (x, y) in h.elements().iter().flat_map(|x| h.elements().into_iter().map(move |y| (x.clone(), y))) {
                        assert_eq!(reg.action(&x, &y).unwrap(), a.product(&x, &y).unwrap().0);
                    }
                }
            }
        }
    }

    #[test]
    fn module_axiom_failures_are_witnessed() {
        let z4 = g(&[4]);
        let ac = standard_cocycle(&form(&z4, 8, |x| (x[0] * x[0]) as i64)).unwrap();
        let h = sub(&z4, &[&[2]]);
        let a = canonical_algebra(&ac, &h).unwrap().unwrap();
        let m = ModuleData::free(&a, ac.associator(), &[1]).unwrap();
        let mut table = m.action_table();
        *table.get_mut(&(vec![1], vec![2])).unwrap() += 1;
        let bad = ModuleData::new(a.clone(), m.support().to_vec(), &table).unwrap();
        assert!(!module_check(&bad, ac.associator()).unwrap().pass);
        assert!(local_check(&bad, &ac).is_err());
        let mut table = m.action_table();
        *table.get_mut(&(vec![1], vec![0])).unwrap() = 1;
        let bad = ModuleData::new(a.clone(), m.support().to_vec(), &table).unwrap();
        assert_eq!(module_check(&bad, ac.associator()).unwrap().witness.unwrap().condition, "module unit");
        assert!(ModuleData::new(a, vec![vec![1]], &BTreeMap::new()).is_err());
    }

    #[test]
    fn locality_examples() {
        let v = g(&[2, 2]);
        let q = form(&v, 2, |x| (x[0] * x[1]) as i64);
        let ac = standard_cocycle(&q).unwrap();
        let h = sub(&v, &[&[1, 0]]);
        let a = canonical_algebra(&ac, &h).unwrap().unwrap();
        let free_a = ModuleData::free(&a, ac.associator(), &[0, 0]).unwrap();
        assert!(local_check(&free_a, &ac).unwrap().pass);
        // (0,1) is not orthogonal to H
        let off = ModuleData::free(&a, ac.associator(), &[0, 1]).unwrap();
        assert!(!local_check(&off, &ac).unwrap().pass);
        let unit = canonical_algebra(&ac, &Subgroup::trivial(&v)).unwrap().unwrap();
        for m in simple_modules(&unit, ac.associator()).unwrap() {
            assert!(local_check(&m, &ac).unwrap().pass);
        }
    }

    #[test]
    fn local_category_examples() {
        for p in [2u32, 3] {
            let grp = g(&[p, p]);
            let q = form(&grp, p, |x| (x[0] * x[1]) as i64);
            let lc = local_category_of_form(&q, &sub(&grp, &[&[1, 0]])).unwrap();
            assert!(lc.quotient.group().is_trivial());
            assert_eq!(lc.form.values(), &[0]);
            assert!(lc.transcript.iter().all(|s| s.pass));
            let unchanged = local_category_of_form(&q, &Subgroup::trivial(&grp)).unwrap();
            assert_eq!(unchanged.form.values(), q.values());
        }
        let z4 = g(&[4]);
        let q8 = form(&z4, 8, |x| (x[0] * x[0]) as i64);
        assert!(local_category_of_form(&q8, &sub(&z4, &[&[2]])).is_err());
    }

    #[test]
    fn dims_examples() {
        let z4 = g(&[4]);
        let ac = standard_cocycle(&form(&z4, 8, |x| (x[0] * x[0]) as i64)).unwrap();
        let r = dims_report(&ac, &Subgroup::trivial(&z4)).unwrap();
        assert_eq!(r.dims.category, 4);
        assert!(r.identities.iter().all(|i| i.pass));
        let g33 = g(&[3, 3]);
        let ac = standard_cocycle(&form(&g33, 3, |x| (x[0] * x[1]) as i64)).unwrap();
        let r = dims_report(&ac, &sub(&g33, &[&[1, 0]])).unwrap();
        assert_eq!(r.dims.local_modules, 1);
        assert_eq!(r.dims.modules, 3);
        assert!(r.identities.iter().all(|i| i.pass));
        // degenerate: q ≡ 0 on ℤ/2 with H = ℤ/2 has H⊥ = G
        let z2 = g(&[2]);
        let ac = AbelianCocycle::trivial(&z2, 2).unwrap();
        let r = dims_report(&ac, &Subgroup::whole(&z2)).unwrap();
        assert_eq!(r.dims.centre, Some(4));
        let loc = r.identities.iter().find(|i| i.name.starts_with("dim(C_A^loc)")).unwrap();
        assert!(!loc.pass);
    }

    #[test]
    fn local_modules_match_quotient_form() {
        for grp in groups_up_to_order(16) {
            let n = grp.default_modulus();
            let forms = parametric_forms(&grp, n, 64).unwrap();
            for q in forms.iter().filter(|q| is_nondegenerate(q).unwrap()).take(6) {
                let ac = standard_cocycle(q).unwrap();
                let b = bilinear_form(q).unwrap();
                for h in enumerate_subgroups(&grp, 64).unwrap() {
                    assert_eq!(h.order() * orthogonal_complement(q, &h).unwrap().order(), grp.order());
                    if !is_isotropic(&h, q).unwrap() {
                        continue;
                    }
                    let lc = local_category(&ac, &h).unwrap();
                    let a = canonical_algebra(&ac, &h).unwrap().unwrap();
                    let locals = simple_local_modules(&a, &ac).unwrap();
                    assert_eq!(locals.len(), lc.quotient.group().order());
                    let cosets: std::collections::BTreeSet<GroupElement> = locals
                        .iter()
                        .map(|m| lc.quotient.project(&m.support()[0]).unwrap())
                        .collect();
                    assert_eq!(cosets.len(), locals.len());
                    for m in &locals {
                        let s = &m.support()[0];
                        let y = lc.quotient.project(s).unwrap();
                        assert_eq!(ac.braiding().value(&[s, s]).unwrap(), lc.form.at(&y));
                        for m2 in &locals {
                            let t = &m2.support()[0];
                            let double = (ac.braiding().value(&[s, t]).unwrap() + ac.braiding().value(&[t, s]).unwrap()) % n;
                            assert_eq!(double, b.at(s, t));
                        }
                    }
                    let r = dims_report(&ac, &h).unwrap();
                    assert!(r.identities.iter().all(|i| i.pass), "{grp} {:?}", h.canonical_basis());
                }
            }
        }
    }
}

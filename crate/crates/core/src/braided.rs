//! Braidings on pointed categories: abelian 3-cocycles, quadratic forms,
//! transparency, braided functors and the centre of `V(G, 1)`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::Arc;

use num_bigint::BigUint;

use crate::abgroup::{FinAbGroup, GroupElement, Subgroup, Subquotient};
use crate::arith::gcd;
use crate::check::Check;
use crate::cochain::{Cochain, Domain};
use crate::diagram::{self, Constraint};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseSystem};
use crate::monoidal::{first_difference, functor_check, pentagon_check, FunctorData, PointedCategory};

/// Default bound on `|G|` for enumerating abelian cocycle classes.
pub const ABELIAN_ENUMERATION_BOUND: usize = 9;

/// A braided pointed category `(α, γ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianCocycle {
    category: PointedCategory,
    braiding: Cochain,
}

impl AbelianCocycle {
    pub fn new(category: PointedCategory, braiding: Cochain) -> Result<Self> {
        if braiding.degree() != 2 || **braiding.domain() != **category.domain() {
            return Err(Error::Precondition("braiding must be a 2-cochain on the category's group".into()));
        }
        if braiding.modulus() != category.modulus() {
            return Err(Error::ModulusMismatch {
                left: category.modulus(),
                right: braiding.modulus(),
            });
        }
        let braiding = braiding.with_domain(category.domain())?;
        if let Some(w) = hexagon_failure(category.associator(), &braiding).witness {
            return Err(Error::Precondition(format!("{} fails at {:?}", w.condition, w.args)));
        }
        Ok(AbelianCocycle { category, braiding })
    }

    /// For pairs that satisfy the hexagons by construction.
    fn new_unchecked(category: PointedCategory, braiding: Cochain) -> Self {
        AbelianCocycle { category, braiding }
    }

    pub fn trivial(g: &FinAbGroup, modulus: u32) -> Result<Self> {
        let category = PointedCategory::trivial(g, modulus)?;
        let braiding = Cochain::zero(category.domain(), 2, modulus)?;
        Ok(AbelianCocycle { category, braiding })
    }

    pub fn category(&self) -> &PointedCategory {
        &self.category
    }

    pub fn associator(&self) -> &Cochain {
        self.category.associator()
    }

    pub fn braiding(&self) -> &Cochain {
        &self.braiding
    }

    pub fn group(&self) -> &FinAbGroup {
        self.category.group()
    }

    pub fn modulus(&self) -> u32 {
        self.category.modulus()
    }

    /// `(α + dφ, γ + φ − φᵀ)`.
    pub fn shift(&self, phi: &Cochain) -> Result<AbelianCocycle> {
        let phi = phi.with_domain(self.category.domain())?;
        let alpha = self.associator().add(&phi.coboundary()?)?;
        let braiding = self.braiding.add(&phi.sub(&transpose(&phi))?)?;
        // α + dφ is a cocycle whenever α is
        Ok(AbelianCocycle {
            category: PointedCategory::new_unchecked(alpha),
            braiding,
        })
    }
}

/// `φᵀ(f, g) = φ(g, f)`.
pub fn transpose(phi: &Cochain) -> Cochain {
    Cochain::from_fn(phi.domain(), 2, phi.modulus(), |t| phi.get(&[t[1], t[0]]) as i64).expect("same table size")
}

/// Both hexagons on simples, derived from the diagrams.
pub fn hexagon_check(alpha: &Cochain, gamma: &Cochain) -> Result<Check> {
    if gamma.degree() != 2 || **gamma.domain() != **alpha.domain() {
        return Err(Error::Precondition("braiding must be a 2-cochain on the associator's domain".into()));
    }
    if gamma.modulus() != alpha.modulus() {
        return Err(Error::ModulusMismatch {
            left: alpha.modulus(),
            right: gamma.modulus(),
        });
    }
    if !pentagon_check(alpha)?.pass {
        return Err(Error::Precondition("associator fails the pentagon".into()));
    }
    Ok(hexagon_failure(alpha, gamma))
}

fn hexagon_failure(alpha: &Cochain, gamma: &Cochain) -> Check {
    for (name, rel) in [("first hexagon", diagram::hexagon_first()), ("second hexagon", diagram::hexagon_second())] {
        if let Some(at) = rel.first_failure(alpha, Some(gamma)) {
            let residual = rel.evaluate(alpha.domain(), alpha, Some(gamma), &at);
            let args = at.iter().map(|&i| alpha.domain().member(i).clone()).collect();
            return Check::fail(name, args, residual);
        }
    }
    Check::pass()
}

/// A function `G → ℤ/N`, stored by element index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    group: FinAbGroup,
    modulus: u32,
    values: Vec<u32>,
}

impl QuadraticForm {
    pub fn new(group: &FinAbGroup, modulus: u32, values: Vec<u32>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidModulus(modulus));
        }
        if values.len() != group.order() {
            return Err(Error::Parse(format!(
                "a form on a group of order {} needs {} values, got {}",
                group.order(),
                group.order(),
                values.len()
            )));
        }
        Ok(QuadraticForm {
            group: group.clone(),
            modulus,
            values: values.into_iter().map(|v| v % modulus).collect(),
        })
    }

    pub fn from_fn(group: &FinAbGroup, modulus: u32, mut f: impl FnMut(&GroupElement) -> i64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidModulus(modulus));
        }
        let values = group
            .elements()
            .iter()
            .map(|x| f(x).rem_euclid(modulus as i64) as u32)
            .collect();
        Self::new(group, modulus, values)
    }

    pub fn zero(group: &FinAbGroup, modulus: u32) -> Result<Self> {
        Self::new(group, modulus, vec![0; group.order()])
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn at(&self, x: &[u32]) -> u32 {
        self.values[self.group.index_of(x)]
    }

    /// `q(f+g) − q(f) − q(g)`.
    pub fn polar(&self, f: &[u32], g: &[u32]) -> u32 {
        let n = self.modulus as i64;
        let v = self.at(&self.group.add(f, g)) as i64 - self.at(f) as i64 - self.at(g) as i64;
        v.rem_euclid(n) as u32
    }

    pub fn neg(&self) -> QuadraticForm {
        let n = self.modulus;
        QuadraticForm {
            values: self.values.iter().map(|&v| (n - v) % n).collect(),
            ..self.clone()
        }
    }

    /// The same exponents read in a larger modulus `M` (a multiple of `N`).
    pub fn lift(&self, modulus: u32) -> Result<QuadraticForm> {
        if modulus == 0 || !modulus.is_multiple_of(self.modulus) {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: modulus,
            });
        }
        let k = modulus / self.modulus;
        Ok(QuadraticForm {
            group: self.group.clone(),
            modulus,
            values: self.values.iter().map(|&v| v * k).collect(),
        })
    }

    /// Transport along a group isomorphism `iso: source → self.group`.
    pub fn pullback(&self, iso: &crate::abgroup::Hom) -> Result<QuadraticForm> {
        if iso.target() != &self.group {
            return Err(Error::Precondition("map does not land in the form's group".into()));
        }
        Self::from_fn(iso.source(), self.modulus, |x| self.at(&iso.apply(x)) as i64)
    }
}

/// `q(0) = 0`, `q(−g) = q(g)` and the seven-term identity.
pub fn quadratic_check(q: &QuadraticForm) -> Check {
    let g = &q.group;
    let n = q.modulus as i64;
    if q.values[0] != 0 {
        return Check::fail("q(0) = 0", vec![g.zero()], q.values[0]);
    }
    let d = Domain::full(g);
    let v = |i: usize| q.values[i] as i64;
    for x in 0..d.len() {
        let (a, b) = (v(x), v(d.neg(x)));
        if a != b {
            return Check::fail("q(-g) = q(g)", vec![d.member(x).clone()], (a - b).rem_euclid(n) as u32);
        }
    }
    for f in 0..d.len() {
        for h in 0..d.len() {
            let fh = d.add(f, h);
            for k in 0..d.len() {
                let lhs = v(f) + v(h) + v(k) + v(d.add(fh, k));
                let rhs = v(fh) + v(d.add(f, k)) + v(d.add(h, k));
                let r = (lhs - rhs).rem_euclid(n);
                if r != 0 {
                    let args = [f, h, k].iter().map(|&i| d.member(i).clone()).collect();
                    return Check::fail("quadratic identity", args, r as u32);
                }
            }
        }
    }
    Check::pass()
}

/// Symmetric bilinear form `b(f, g)` stored as a `|G|×|G|` table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    group: FinAbGroup,
    modulus: u32,
    table: Vec<u32>,
}

impl BilinearForm {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn at(&self, f: &[u32], g: &[u32]) -> u32 {
        let n = self.group.order();
        self.table[self.group.index_of(f) * n + self.group.index_of(g)]
    }

    /// Symmetry and additivity in each slot, with a witness on failure.
    pub fn check(&self) -> Check {
        let g = &self.group;
        let n = self.modulus as i64;
        let els = g.elements();
        for x in &els {
            for y in &els {
                if self.at(x, y) != self.at(y, x) {
                    let r = (self.at(x, y) as i64 - self.at(y, x) as i64).rem_euclid(n) as u32;
                    return Check::fail("symmetry", vec![x.clone(), y.clone()], r);
                }
                for z in &els {
                    let r = (self.at(&g.add(x, y), z) as i64 - self.at(x, z) as i64 - self.at(y, z) as i64).rem_euclid(n);
                    if r != 0 {
                        return Check::fail("additivity", vec![x.clone(), y.clone(), z.clone()], r as u32);
                    }
                }
            }
        }
        Check::pass()
    }
}

/// `b(f, g) = q(f+g) − q(f) − q(g)`; fails unless `q` is quadratic.
pub fn bilinear_form(q: &QuadraticForm) -> Result<BilinearForm> {
    if let Some(w) = quadratic_check(q).witness {
        return Err(Error::Precondition(format!("not a quadratic form: {} fails at {:?}", w.condition, w.args)));
    }
    // the seven-term identity makes the polar form bilinear
    let d = Domain::full(&q.group);
    let n = q.modulus as i64;
    let v = |i: usize| q.values[i] as i64;
    let mut table = Vec::with_capacity(d.len() * d.len());
    for f in 0..d.len() {
        for g in 0..d.len() {
            table.push((v(d.add(f, g)) - v(f) - v(g)).rem_euclid(n) as u32);
        }
    }
    Ok(BilinearForm {
        group: q.group.clone(),
        modulus: q.modulus,
        table,
    })
}

/// `{g : q(f+g) = q(f) ∀f}`.
pub fn kernel(q: &QuadraticForm) -> Result<Subgroup> {
    bilinear_form(q)?;
    let els = q.group.elements();
    let gens: Vec<GroupElement> = els
        .iter()
        .filter(|g| els.iter().all(|f| q.at(&q.group.add(f, g)) == q.at(f)))
        .cloned()
        .collect();
    Subgroup::generated(&q.group, &gens)
}

/// `{g : b(f, g) = 0 ∀f}`.
pub fn radical(b: &BilinearForm) -> Subgroup {
    let n = b.group.order();
    let gens: Vec<GroupElement> = (0..n)
        .filter(|&g| (0..n).all(|f| b.table[f * n + g] == 0))
        .map(|g| b.group.element_at(g))
        .collect();
    Subgroup::generated(&b.group, &gens).expect("elements of the group")
}

pub fn is_nondegenerate(q: &QuadraticForm) -> Result<bool> {
    Ok(radical(&bilinear_form(q)?).is_trivial())
}

/// `{x ∈ G : b(h, x) = 0 ∀h ∈ H}`.
pub fn orthogonal_complement(q: &QuadraticForm, h: &Subgroup) -> Result<Subgroup> {
    if h.parent() != &q.group {
        return Err(Error::NotSubgroup("subgroup of a different group".into()));
    }
    bilinear_form(q)?;
    let basis = h.canonical_basis();
    let gens: Vec<GroupElement> = q
        .group
        .elements()
        .into_iter()
        .filter(|x| basis.iter().all(|b| q.polar(b, x) == 0))
        .collect();
    Subgroup::generated(&q.group, &gens)
}

/// `q(h) = 0` for all `h ∈ H`.
pub fn is_isotropic(h: &Subgroup, q: &QuadraticForm) -> Result<bool> {
    if h.parent() != &q.group {
        return Err(Error::NotSubgroup("subgroup of a different group".into()));
    }
    Ok(h.elements().iter().all(|x| q.at(x) == 0))
}

/// The form induced on `outer / inner`; `q` must be constant on the cosets
/// of `inner` inside `outer`.
pub fn induced_form(q: &QuadraticForm, outer: &Subgroup, inner: &Subgroup) -> Result<(QuadraticForm, Subquotient)> {
    if outer.parent() != &q.group {
        return Err(Error::NotSubgroup("subgroup of a different group".into()));
    }
    let sq = Subquotient::new(outer, inner)?;
    let inner_els = inner.elements();
    for x in outer.elements() {
        let v = q.at(&x);
        if let Some(h) = inner_els.iter().find(|h| q.at(&q.group.add(&x, h)) != v) {
            return Err(Error::Precondition(format!(
                "form is not constant on the coset of {x:?} (differs at {h:?})"
            )));
        }
    }
    let form = QuadraticForm::from_fn(sq.group(), q.modulus, |y| q.at(&sq.lift(y).expect("element of the quotient")) as i64)?;
    Ok((form, sq))
}

/// `q(g) = γ(g, g)`.
pub fn trace_quadratic(ac: &AbelianCocycle) -> QuadraticForm {
    let d = ac.category.domain();
    let values = (0..d.len()).map(|i| ac.braiding.get(&[i, i])).collect();
    QuadraticForm {
        group: ac.group().clone(),
        modulus: ac.modulus(),
        values,
    }
}

/// Transparent simples with the restricted form.
#[derive(Debug, Clone)]
pub struct MugerCentre {
    pub subgroup: Subgroup,
    pub form: QuadraticForm,
    pub embedding: Subquotient,
    /// Whether the centre is the symmetric category `C(Ker q, 1)`, which
    /// requires `q` to vanish on the transparent part.
    pub paper_form_matches: bool,
}

/// `{g : γ(f,g) + γ(g,f) = 0 ∀f}`.
pub fn transparency_subgroup(ac: &AbelianCocycle) -> Subgroup {
    let d = ac.category.domain();
    let gm = &ac.braiding;
    let n = ac.modulus();
    let gens: Vec<GroupElement> = (0..d.len())
        .filter(|&g| (0..d.len()).all(|f| (gm.get(&[f, g]) + gm.get(&[g, f])).is_multiple_of(n)))
        .map(|g| d.member(g).clone())
        .collect();
    Subgroup::generated(ac.group(), &gens).expect("elements of the group")
}

pub fn muger_centre(ac: &AbelianCocycle) -> Result<MugerCentre> {
    let subgroup = transparency_subgroup(ac);
    let q = trace_quadratic(ac);
    let (form, embedding) = induced_form(&q, &subgroup, &Subgroup::trivial(ac.group()))?;
    let paper_form_matches = form.values.iter().all(|&v| v == 0);
    Ok(MugerCentre {
        subgroup,
        form,
        embedding,
        paper_form_matches,
    })
}

/// Compatibility with the braidings, on top of the monoidal functor check;
/// a failure of the latter is reported with its own witness.
pub fn braided_functor_check(f: &FunctorData, source: &AbelianCocycle, target: &AbelianCocycle) -> Result<Check> {
    if f.source != source.category || f.target != target.category {
        return Err(Error::Precondition("functor does not connect the given braided categories".into()));
    }
    let monoidal = functor_check(f)?;
    if !monoidal.pass {
        return Ok(monoidal);
    }
    let lhs = f.constraint.sub(&transpose(&f.constraint))?;
    let pulled = target.braiding.pullback(&f.hom)?.with_domain(source.category.domain())?;
    let rhs = pulled.sub(&source.braiding)?;
    Ok(match first_difference(&lhs, &rhs) {
        None => Check::pass(),
        Some((args, r)) => Check::fail("braiding compatibility", args, r),
    })
}

/// Same associator, braiding `γ̄(f, g) = −γ(g, f)`.
pub fn conjugate(ac: &AbelianCocycle) -> AbelianCocycle {
    AbelianCocycle {
        category: ac.category.clone(),
        braiding: transpose(&ac.braiding).neg(),
    }
}

/// A simple object `(g, χ)` of the centre of `V(G, 1)`; `χ(e_i) = character[i]`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CentreSimple {
    pub degree: GroupElement,
    pub character: Vec<u32>,
}

/// Simples of the centre of `V(G, 1)`, presented as the group `G × Ĝ` with
/// its quadratic form `q(g, χ) = χ(g)`.
#[derive(Debug, Clone)]
pub struct CentreData {
    pub group: FinAbGroup,
    pub modulus: u32,
    pub simples: Vec<CentreSimple>,
    pub centre_group: FinAbGroup,
    pub form: QuadraticForm,
}

impl CentreData {
    /// Braiding scalar of `(g, χ)` past `(h, ψ)`: `χ(h)`.
    pub fn braiding(&self, a: &CentreSimple, b: &CentreSimple) -> u32 {
        character_value(&a.character, &b.degree, self.modulus)
    }
}

fn character_value(chi: &[u32], x: &[u32], modulus: u32) -> u32 {
    (chi.iter().zip(x).map(|(&c, &a)| c as u64 * a as u64).sum::<u64>() % modulus as u64) as u32
}

pub fn centre_simples(c: &PointedCategory) -> Result<CentreData> {
    if !c.associator().is_zero() {
        return Err(Error::Precondition("the centre model needs the trivial associator".into()));
    }
    let g = c.group();
    let n = c.modulus();
    let gcds: Vec<u32> = g.factors().iter().map(|&f| gcd(f as u64, n as u64) as u32).collect();
    let mut factors = g.factors().to_vec();
    factors.extend(gcds.iter().copied().filter(|&d| d > 1));
    let centre_group = FinAbGroup::new(factors)?;
    let kept: Vec<usize> = (0..gcds.len()).filter(|&i| gcds[i] > 1).collect();
    let split = |z: &GroupElement| -> CentreSimple {
        let degree = z[..g.rank()].to_vec();
        let mut character = vec![0u32; g.rank()];
        for (k, &i) in kept.iter().enumerate() {
            character[i] = z[g.rank() + k] * (n / gcds[i]);
        }
        CentreSimple { degree, character }
    };
    let elements = centre_group.elements();
    let simples: Vec<CentreSimple> = elements.iter().map(split).collect();
    let form = QuadraticForm::new(
        &centre_group,
        n,
        simples.iter().map(|s| character_value(&s.character, &s.degree, n)).collect(),
    )?;
    Ok(CentreData {
        group: g.clone(),
        modulus: n,
        simples,
        centre_group,
        form,
    })
}

/// The explicit abelian cocycle of a quadratic form, built from its values
/// on the standard generators and the polar form between them.
pub fn standard_cocycle(q: &QuadraticForm) -> Result<AbelianCocycle> {
    bilinear_form(q)?;
    let g = &q.group;
    let n = q.modulus;
    let r = g.rank();
    let gens: Vec<GroupElement> = (0..r).map(|i| g.generator(i)).collect();
    let t: Vec<i64> = gens.iter().map(|e| q.at(e) as i64).collect();
    let b: Vec<Vec<i64>> = gens
        .iter()
        .map(|e| gens.iter().map(|f| q.polar(e, f) as i64).collect())
        .collect();
    let orders: Vec<i64> = g.factors().iter().map(|&f| f as i64).collect();
    let d = Domain::full(g);
    let alpha = Cochain::from_elements(&d, 3, n, |x| {
        (0..r)
            .map(|i| t[i] * orders[i] * x[0][i] as i64 * ((x[1][i] + x[2][i]) as i64 / orders[i]))
            .sum()
    })?;
    let gamma = Cochain::from_elements(&d, 2, n, |x| {
        let mut s = 0i64;
        for i in 0..r {
            s += t[i] * x[0][i] as i64 * x[1][i] as i64;
            for j in i + 1..r {
                s += b[i][j] * x[0][i] as i64 * x[1][j] as i64;
            }
        }
        s
    })?;
    // the explicit formulas satisfy the pentagon and both hexagons
    Ok(AbelianCocycle::new_unchecked(PointedCategory::new_unchecked(alpha), gamma))
}

/// Every quadratic form on `G` with values in `ℤ/N`, from its values on the
/// standard generators and the polar form between distinct generators.
pub fn parametric_forms(g: &FinAbGroup, modulus: u32, bound: usize) -> Result<Vec<QuadraticForm>> {
    g.check_bound(bound)?;
    let n = modulus as u64;
    let f: Vec<u64> = g.factors().iter().map(|&x| x as u64).collect();
    let r = f.len();
    let diag_choices: Vec<Vec<u64>> = f
        .iter()
        .map(|&ni| (0..n).filter(|&t| (ni * ni * t) % n == 0 && (2 * ni * t) % n == 0).collect())
        .collect();
    let mut pairs = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let step = n / gcd(gcd(f[i], f[j]), n);
            pairs.push((i, j, (0..n).step_by(step as usize).collect::<Vec<u64>>()));
        }
    }
    let mut slots: Vec<&Vec<u64>> = diag_choices.iter().collect();
    slots.extend(pairs.iter().map(|p| &p.2));
    let total: usize = slots.iter().map(|s| s.len()).product();
    let mut out = Vec::with_capacity(total);
    let elements = g.elements();
    for code in 0..total {
        let mut rem = code;
        let mut pick = vec![0u64; slots.len()];
        for k in (0..slots.len()).rev() {
            pick[k] = slots[k][rem % slots[k].len()];
            rem /= slots[k].len();
        }
        let values = elements
            .iter()
            .map(|x| {
                let mut s = 0u64;
                for i in 0..r {
                    s += pick[i] * (x[i] as u64 * x[i] as u64 % n) % n;
                }
                for (k, (i, j, _)) in pairs.iter().enumerate() {
                    s += pick[r + k] * (x[*i] as u64 * x[*j] as u64 % n) % n;
                }
                (s % n) as u32
            })
            .collect();
        out.push(QuadraticForm {
            group: g.clone(),
            modulus,
            values,
        });
    }
    out.sort_by(|a, b| a.values.cmp(&b.values));
    Ok(out)
}

/// Abelian 3-cocycles on `G` as the kernel of the linearized pentagon and
/// hexagon equations, modulo abelian coboundaries.
#[derive(Debug, Clone)]
pub struct AbelianCohomology {
    domain: Arc<Domain>,
    modulus: u32,
    alpha_cols: Vec<usize>,
    gamma_cols: Vec<usize>,
    cycles: Vec<Vec<u32>>,
    cycle_span: Echelon,
    boundaries: Echelon,
}

impl AbelianCohomology {
    pub fn new(g: &FinAbGroup, modulus: u32, bound: usize) -> Result<Self> {
        g.check_bound(bound)?;
        if modulus == 0 {
            return Err(Error::InvalidModulus(modulus));
        }
        let d = Domain::full(g);
        let alpha_cols = Cochain::free_positions(&d, 3)?;
        let gamma_cols = Cochain::free_positions(&d, 2)?;
        let na = alpha_cols.len();
        let nvars = na + gamma_cols.len();
        let mut col_of_alpha = vec![usize::MAX; d.table_size(3)?];
        for (k, &p) in alpha_cols.iter().enumerate() {
            col_of_alpha[p] = k;
        }
        let mut col_of_gamma = vec![usize::MAX; d.table_size(2)?];
        for (k, &p) in gamma_cols.iter().enumerate() {
            col_of_gamma[p] = na + k;
        }
        let mut system = SparseSystem::new(modulus, nvars);
        let m = d.len();
        let relations = [(diagram::pentagon(), 4), (diagram::hexagon_first(), 3), (diagram::hexagon_second(), 3)];
        for (rel, arity) in &relations {
            let mut at = vec![1usize; *arity];
            if m > 1 {
                loop {
                    let row = rel.linearize(&d, &at).into_iter().map(|(c, idx, coeff)| match c {
                        Constraint::Associator => (col_of_alpha[idx], coeff),
                        Constraint::Braiding => (col_of_gamma[idx], coeff),
                    });
                    system.push(row, 0);
                    if !next_nonzero_tuple(&mut at, m) {
                        break;
                    }
                }
            }
        }
        let cycles = system.kernel_generators();
        let mut cycle_span = Echelon::uniform(modulus, nvars);
        for z in &cycles {
            cycle_span.insert_dense(z);
        }
        let mut boundaries = Echelon::uniform(modulus, nvars);
        for &p in &gamma_cols {
            let mut entries = vec![0u32; d.table_size(2)?];
            entries[p] = 1 % modulus;
            let phi = Cochain::from_entries(&d, 2, modulus, entries)?;
            let dphi = phi.coboundary()?;
            let anti = phi.sub(&transpose(&phi))?;
            let mut v = vec![0u32; nvars];
            for (k, &q) in alpha_cols.iter().enumerate() {
                v[k] = dphi.get_index(q);
            }
            for (k, &q) in gamma_cols.iter().enumerate() {
                v[na + k] = anti.get_index(q);
            }
            boundaries.insert_dense(&v);
        }
        Ok(AbelianCohomology {
            domain: d,
            modulus,
            alpha_cols,
            gamma_cols,
            cycles,
            cycle_span,
            boundaries,
        })
    }

    pub fn group(&self) -> &FinAbGroup {
        self.domain.ambient()
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn cycle_count(&self) -> BigUint {
        self.cycle_span.order()
    }

    pub fn boundary_count(&self) -> BigUint {
        self.boundaries.order()
    }

    /// `|Z| / |B|`.
    pub fn class_count(&self) -> BigUint {
        self.cycle_count() / self.boundary_count()
    }

    fn vector(&self, ac: &AbelianCocycle) -> Result<Vec<u32>> {
        if ac.group() != self.group() || ac.modulus() != self.modulus {
            return Err(Error::Precondition("cocycle lives on a different group or modulus".into()));
        }
        let mut v: Vec<u32> = self.alpha_cols.iter().map(|&p| ac.associator().get_index(p)).collect();
        v.extend(self.gamma_cols.iter().map(|&p| ac.braiding.get_index(p)));
        Ok(v)
    }

    fn cocycle(&self, v: &[u32]) -> Result<AbelianCocycle> {
        let na = self.alpha_cols.len();
        let mut a = vec![0u32; self.domain.table_size(3)?];
        for (k, &p) in self.alpha_cols.iter().enumerate() {
            a[p] = v[k];
        }
        let mut c = vec![0u32; self.domain.table_size(2)?];
        for (k, &p) in self.gamma_cols.iter().enumerate() {
            c[p] = v[na + k];
        }
        let alpha = Cochain::from_entries(&self.domain, 3, self.modulus, a)?;
        let gamma = Cochain::from_entries(&self.domain, 2, self.modulus, c)?;
        AbelianCocycle::new(PointedCategory::new(alpha)?, gamma)
    }

    /// The least representative of the class of `ac`.
    pub fn canonical(&self, ac: &AbelianCocycle) -> Result<AbelianCocycle> {
        let v = self.vector(ac)?;
        self.cocycle(&self.boundaries.reduce(&v))
    }

    pub fn same_class(&self, a: &AbelianCocycle, b: &AbelianCocycle) -> Result<bool> {
        let (va, vb) = (self.vector(a)?, self.vector(b)?);
        let n = self.modulus;
        let diff: Vec<u32> = va.iter().zip(&vb).map(|(&x, &y)| (x + n - y) % n).collect();
        Ok(self.boundaries.contains(&diff))
    }

    /// One canonical representative per class, sorted.
    pub fn classes(&self) -> Result<Vec<AbelianCocycle>> {
        let n = self.modulus;
        let start = vec![0u32; self.alpha_cols.len() + self.gamma_cols.len()];
        let mut seen: HashSet<Vec<u32>> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for z in &self.cycles {
                let w: Vec<u32> = v.iter().zip(z).map(|(&x, &y)| (x + y) % n).collect();
                let w = self.boundaries.reduce(&w);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let reps: BTreeSet<Vec<u32>> = seen.into_iter().collect();
        reps.iter().map(|v| self.cocycle(v)).collect()
    }
}

fn next_nonzero_tuple(t: &mut [usize], n: usize) -> bool {
    for k in (0..t.len()).rev() {
        t[k] += 1;
        if t[k] < n {
            return true;
        }
        t[k] = 1;
    }
    false
}

/// Representatives of all classes of abelian 3-cocycles on `G` over `μ_N`.
pub fn abelian_cocycles_enumerate(g: &FinAbGroup, modulus: u32, bound: usize) -> Result<Vec<AbelianCocycle>> {
    AbelianCohomology::new(g, modulus, bound)?.classes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::{groups_up_to_order, Hom};
    use crate::cochain::tests::random_cochain;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn g(f: &[u32]) -> FinAbGroup {
        FinAbGroup::new(f.to_vec()).unwrap()
    }

    fn z2_pair(n: u32, a: i64, c: i64) -> (Cochain, Cochain) {
        let d = Domain::full(&g(&[2]));
        let mut alpha = Cochain::zero(&d, 3, n).unwrap();
        alpha.set(&[1, 1, 1], a).unwrap();
        let mut gamma = Cochain::zero(&d, 2, n).unwrap();
        gamma.set(&[1, 1], c).unwrap();
        (alpha, gamma)
    }

    fn super_braiding() -> AbelianCocycle {
        let (a, c) = z2_pair(4, 0, 2);
        AbelianCocycle::new(PointedCategory::new(a).unwrap(), c).unwrap()
    }

    fn semion() -> AbelianCocycle {
        let (a, c) = z2_pair(4, 2, 1);
        AbelianCocycle::new(PointedCategory::new(a).unwrap(), c).unwrap()
    }

    /// Hexagon equations written out by hand.
    fn hexagons_by_hand(alpha: &Cochain, gamma: &Cochain) -> bool {
        let d = alpha.domain();
        let n = alpha.modulus() as i64;
        let a = |x: usize, y: usize, z: usize| alpha.get(&[x, y, z]) as i64;
        let c = |x: usize, y: usize| gamma.get(&[x, y]) as i64;
        for f in 0..d.len() {
            for h in 0..d.len() {
                for k in 0..d.len() {
                    let first = a(f, h, k) + c(d.add(f, h), k) + a(k, f, h) - c(h, k) - a(f, k, h) - c(f, k);
                    let second = -a(f, h, k) + c(f, d.add(h, k)) - a(h, k, f) - c(f, h) + a(h, f, k) - c(f, k);
                    if first.rem_euclid(n) != 0 || second.rem_euclid(n) != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn hexagon_examples() {
        let z2 = g(&[2]);
        let t = AbelianCocycle::trivial(&z2, 4).unwrap();
        assert!(hexagon_check(t.associator(), t.braiding()).unwrap().pass);
        super_braiding();
        semion();
        let (a, c) = z2_pair(4, 0, 1);
        let check = hexagon_check(&a, &c).unwrap();
        assert!(!check.pass);
        assert!(check.witness.is_some());
        let (mut a, c) = z2_pair(4, 0, 0);
        a.set(&[1, 1, 1], 1).unwrap();
        assert!(hexagon_check(&a, &c).is_err());
    }

    #[test]
    fn diagram_hexagons_match_hand_equations() {
        for n in [2u32, 4, 8] {
            for a in 0..n as i64 {
                for c in 0..n as i64 {
                    let (alpha, gamma) = z2_pair(n, a, c);
                    if !alpha.is_cocycle().unwrap() {
                        continue;
                    }
                    assert_eq!(
                        hexagon_check(&alpha, &gamma).unwrap().pass,
                        hexagons_by_hand(&alpha, &gamma),
                        "n={n} a={a} c={c}"
                    );
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        for grp in [g(&[3]), g(&[2, 2]), g(&[4])] {
            let d = Domain::full(&grp);
            let n = grp.default_modulus();
            for q in parametric_forms(&grp, n, 64).unwrap() {
                let ac = standard_cocycle(&q).unwrap();
                let shifted = ac.shift(&random_cochain(&d, 2, n, &mut rng)).unwrap();
                assert!(hexagons_by_hand(shifted.associator(), shifted.braiding()));
                let mut broken = shifted.braiding().clone();
                let v = broken.get(&[1, 1]);
                broken.set(&[1, 1], v as i64 + 1).unwrap();
                assert_eq!(
                    hexagon_check(shifted.associator(), &broken).unwrap().pass,
                    hexagons_by_hand(shifted.associator(), &broken)
                );
            }
        }
    }

    #[test]
    fn traces_of_examples() {
        assert_eq!(trace_quadratic(&super_braiding()).values(), &[0, 2]);
        assert_eq!(trace_quadratic(&semion()).values(), &[0, 1]);
        assert_eq!(trace_quadratic(&AbelianCocycle::trivial(&g(&[3]), 3).unwrap()).values(), &[0, 0, 0]);
        assert_eq!(trace_quadratic(&conjugate(&semion())).values(), &[0, 3]);
        let t = AbelianCocycle::trivial(&g(&[2, 2]), 2).unwrap();
        assert_eq!(conjugate(&t), t);
    }

    #[test]
    fn quadratic_examples() {
        let z4 = g(&[4]);
        let q = QuadraticForm::from_fn(&z4, 4, |x| (x[0] * x[0]) as i64).unwrap();
        assert!(quadratic_check(&q).pass);
        let b = bilinear_form(&q).unwrap();
        for x in z4.elements() {
            for y in z4.elements() {
                assert_eq!(b.at(&x, &y), (2 * x[0] * y[0]) % 4);
            }
        }
        assert_eq!(kernel(&q).unwrap().elements(), vec![vec![0], vec![2]]);
        assert_eq!(radical(&b).elements(), vec![vec![0], vec![2]]);
        let q8 = QuadraticForm::from_fn(&z4, 8, |x| (x[0] * x[0]) as i64).unwrap();
        assert!(kernel(&q8).unwrap().is_trivial());
        assert!(is_nondegenerate(&q8).unwrap());
        let zero = QuadraticForm::zero(&z4, 4).unwrap();
        assert!(quadratic_check(&zero).pass);
        assert!(bilinear_form(&zero).unwrap().table().iter().all(|&v| v == 0));
        assert!(!is_nondegenerate(&zero).unwrap());
        let sup = trace_quadratic(&super_braiding());
        assert!(kernel(&sup).unwrap().is_trivial());
        assert!(radical(&bilinear_form(&sup).unwrap()).is_whole());
        assert!(!is_nondegenerate(&sup).unwrap());
        // q(1) = 1 on ℤ/2 over ℤ/3: 4q(1) ≠ 0
        let bad = QuadraticForm::new(&g(&[2]), 3, vec![0, 1]).unwrap();
        assert!(!quadratic_check(&bad).pass);
        assert!(bilinear_form(&bad).is_err());
        let asym = QuadraticForm::new(&g(&[3]), 3, vec![0, 1, 2]).unwrap();
        assert_eq!(quadratic_check(&asym).witness.unwrap().condition, "q(-g) = q(g)");
    }

    fn brute_force_forms(grp: &FinAbGroup, n: u32) -> Vec<QuadraticForm> {
        let k = grp.order() - 1;
        (0..(n as usize).pow(k as u32))
            .filter_map(|code| {
                let mut values = vec![0u32; k + 1];
                let mut rem = code;
                for v in values.iter_mut().skip(1) {
                    *v = (rem % n as usize) as u32;
                    rem /= n as usize;
                }
                let q = QuadraticForm::new(grp, n, values).unwrap();
                quadratic_check(&q).pass.then_some(q)
            })
            .collect()
    }

    #[test]
    fn parametric_forms_are_all_forms() {
        for (grp, n) in [(g(&[2]), 4), (g(&[2]), 8), (g(&[3]), 18), (g(&[4]), 8), (g(&[2, 2]), 8), (g(&[2, 2]), 4), (g(&[5]), 10)] {
            let mut brute = brute_force_forms(&grp, n);
            brute.sort_by(|a, b| a.values.cmp(&b.values));
            assert_eq!(parametric_forms(&grp, n, 64).unwrap(), brute, "{grp} N={n}");
        }
    }

    #[test]
    fn standard_cocycle_traces_back() {
        for grp in groups_up_to_order(12) {
            let n = grp.default_modulus();
            for q in parametric_forms(&grp, n, 64).unwrap() {
                let ac = standard_cocycle(&q).unwrap();
                assert!(hexagon_check(ac.associator(), ac.braiding()).unwrap().pass);
                assert_eq!(trace_quadratic(&ac), q);
            }
        }
    }

    fn brute_force_z2_classes(n: u32) -> usize {
        // all (α, γ) on ℤ/2 are determined by α(1,1,1), γ(1,1); φ by φ(1,1)
        let mut pairs = Vec::new();
        for a in 0..n as i64 {
            for c in 0..n as i64 {
                let (alpha, gamma) = z2_pair(n, a, c);
                if alpha.is_cocycle().unwrap() && hexagons_by_hand(&alpha, &gamma) {
                    pairs.push((alpha, gamma));
                }
            }
        }
        let d = Domain::full(&g(&[2]));
        let mut classes: Vec<Vec<(Cochain, Cochain)>> = Vec::new();
        for p in pairs {
            let related = |q: &(Cochain, Cochain)| {
                (0..n as i64).any(|v| {
                    let mut phi = Cochain::zero(&d, 2, n).unwrap();
                    phi.set(&[1, 1], v).unwrap();
                    let a2 = p.0.add(&phi.coboundary().unwrap()).unwrap();
                    let c2 = p.1.add(&phi.sub(&transpose(&phi)).unwrap()).unwrap();
                    a2 == q.0 && c2 == q.1
                })
            };
            match classes.iter_mut().find(|cl| related(&cl[0])) {
                Some(cl) => cl.push(p),
                None => classes.push(vec![p]),
            }
        }
        classes.len()
    }

    #[test]
    fn eilenberg_mac_lane_on_z2_by_brute_force() {
        assert_eq!(brute_force_z2_classes(4), 4);
        for n in [4u32, 8] {
            let classes = abelian_cocycles_enumerate(&g(&[2]), n, 9).unwrap();
            assert_eq!(classes.len(), brute_force_z2_classes(n));
            assert_eq!(classes.len(), brute_force_forms(&g(&[2]), n).len());
        }
    }

    #[test]
    fn eilenberg_mac_lane_small_groups() {
        assert_eq!(abelian_cocycles_enumerate(&FinAbGroup::trivial(), 4, 9).unwrap().len(), 1);
        for (grp, n) in [(g(&[3]), 18), (g(&[2, 2]), 8), (g(&[3]), 6)] {
            let h = AbelianCohomology::new(&grp, n, 9).unwrap();
            let classes = h.classes().unwrap();
            assert_eq!(BigUint::from(classes.len()), h.class_count());
            let traces: BTreeSet<Vec<u32>> = classes.iter().map(|ac| trace_quadratic(ac).values.clone()).collect();
            assert_eq!(traces.len(), classes.len());
            let forms: BTreeSet<Vec<u32>> = brute_force_forms(&grp, n).into_iter().map(|q| q.values).collect();
            assert_eq!(traces, forms);
            for ac in &classes {
                assert!(hexagons_by_hand(ac.associator(), ac.braiding()));
                assert!(quadratic_check(&trace_quadratic(ac)).pass);
            }
        }
        assert!(matches!(
            abelian_cocycles_enumerate(&g(&[2, 5]), 4, 9),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn trace_is_class_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for (grp, n) in [(g(&[2]), 8), (g(&[3]), 18), (g(&[2, 2]), 8)] {
            let h = AbelianCohomology::new(&grp, n, 9).unwrap();
            let d = Domain::full(&grp);
            for ac in h.classes().unwrap() {
                for _ in 0..10 {
                    let moved = ac.shift(&random_cochain(&d, 2, n, &mut rng)).unwrap();
                    assert_eq!(trace_quadratic(&moved), trace_quadratic(&ac));
                    assert!(h.same_class(&moved, &ac).unwrap());
                    assert_eq!(h.canonical(&moved).unwrap(), ac);
                }
            }
        }
    }

    #[test]
    fn polar_form_is_symmetrized_braiding() {
        for (grp, n) in [(g(&[2]), 8), (g(&[3]), 18), (g(&[2, 2]), 8)] {
            for ac in abelian_cocycles_enumerate(&grp, n, 9).unwrap() {
                let b = bilinear_form(&trace_quadratic(&ac)).unwrap();
                let d = ac.category().domain();
                for f in 0..d.len() {
                    for h in 0..d.len() {
                        let sym = (ac.braiding().get(&[f, h]) + ac.braiding().get(&[h, f])) % n;
                        assert_eq!(b.at(d.member(f), d.member(h)), sym);
                    }
                }
                let m = muger_centre(&ac).unwrap();
                assert_eq!(m.subgroup, radical(&b));
            }
        }
    }

    #[test]
    fn muger_examples() {
        let s = muger_centre(&semion()).unwrap();
        assert!(s.subgroup.is_trivial());
        let sup = muger_centre(&super_braiding()).unwrap();
        assert!(sup.subgroup.is_whole());
        assert_eq!(sup.form.values(), &[0, 2]);
        assert!(!sup.paper_form_matches);
        let t = muger_centre(&AbelianCocycle::trivial(&g(&[2, 2]), 2).unwrap()).unwrap();
        assert!(t.subgroup.is_whole());
        assert!(t.paper_form_matches);
        let q8 = QuadraticForm::from_fn(&g(&[4]), 8, |x| (x[0] * x[0]) as i64).unwrap();
        let z = muger_centre(&standard_cocycle(&q8).unwrap()).unwrap();
        assert!(z.subgroup.is_trivial());
        assert!(z.paper_form_matches);
    }

    #[test]
    fn braided_functor_examples() {
        let z2 = g(&[2]);
        let sem = semion();
        let id = FunctorData::identity(sem.category());
        assert!(braided_functor_check(&id, &sem, &sem).unwrap().pass);
        let sup = super_braiding();
        let triv = AbelianCocycle::trivial(&z2, 4).unwrap();
        for v in 0..4 {
            let mut phi = Cochain::zero_on(&z2, 2, 4).unwrap();
            phi.set(&[1, 1], v).unwrap();
            let f = FunctorData::new(sem.category().clone(), sup.category().clone(), Hom::identity(&z2), phi).unwrap();
            let check = braided_functor_check(&f, &sem, &sup).unwrap();
            assert!(!check.pass);
            assert_eq!(check.witness.unwrap().condition, "functor coherence");
        }
        for v in 0..4 {
            let mut phi = Cochain::zero_on(&z2, 2, 4).unwrap();
            phi.set(&[1, 1], v).unwrap();
            let f = FunctorData::new(sup.category().clone(), triv.category().clone(), Hom::identity(&z2), phi).unwrap();
            assert!(!braided_functor_check(&f, &sup, &triv).unwrap().pass);
        }
        let conj = conjugate(&sem);
        let f = FunctorData::identity(sem.category());
        assert!(!braided_functor_check(&f, &sem, &conj).unwrap().pass);
        let fs = FunctorData::identity(sup.category());
        assert!(braided_functor_check(&fs, &sup, &conjugate(&sup)).unwrap().pass);
        assert!(braided_functor_check(&f, &sup, &sem).is_err());
    }

    #[test]
    fn identity_to_conjugate_iff_braiding_is_self_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for (grp, n) in [(g(&[2]), 8), (g(&[2, 2]), 8), (g(&[3]), 18)] {
            let d = Domain::full(&grp);
            for q in parametric_forms(&grp, n, 64).unwrap() {
                let ac = standard_cocycle(&q).unwrap().shift(&random_cochain(&d, 2, n, &mut rng)).unwrap();
                let conj = conjugate(&ac);
                assert_eq!(conjugate(&conj), ac);
                assert_eq!(trace_quadratic(&conj), trace_quadratic(&ac).neg());
                let f = FunctorData::identity(ac.category());
                let sum = ac.braiding().add(&transpose(ac.braiding())).unwrap();
                assert_eq!(braided_functor_check(&f, &ac, &conj).unwrap().pass, sum.is_zero());
                if *ac.braiding() == transpose(ac.braiding()) {
                    assert_eq!(sum.is_zero(), ac.braiding().scale(2).is_zero());
                }
            }
        }
    }

    #[test]
    fn centre_examples() {
        let c = centre_simples(&PointedCategory::trivial(&g(&[2]), 2).unwrap()).unwrap();
        assert_eq!(c.simples.len(), 4);
        assert_eq!(centre_simples(&PointedCategory::trivial(&FinAbGroup::trivial(), 2).unwrap()).unwrap().simples.len(), 1);
        let c3 = centre_simples(&PointedCategory::trivial(&g(&[3]), 3).unwrap()).unwrap();
        assert_eq!(c3.simples.len(), 9);
        assert!(is_nondegenerate(&c3.form).unwrap());
        for a in &c3.simples {
            for b in &c3.simples {
                let double = (c3.braiding(a, b) + c3.braiding(b, a)) % 3;
                let x = c3.centre_group.add(&concat(a), &concat(b));
                let idx = c3.centre_group.index_of(&x);
                let polar = (c3.form.values()[idx] + 6 - c3.form.at(&concat(a)) - c3.form.at(&concat(b))) % 3;
                assert_eq!(double, polar);
            }
        }
        let sem = semion();
        assert!(centre_simples(sem.category()).is_err());
        // N coprime to |G|: only trivial characters
        let c5 = centre_simples(&PointedCategory::trivial(&g(&[5]), 4).unwrap()).unwrap();
        assert_eq!(c5.simples.len(), 5);
    }

    /// Centre-group coordinates when every `N / gcd(nᵢ, N)` is 1.
    fn concat(s: &CentreSimple) -> GroupElement {
        let mut z = s.degree.clone();
        z.extend(&s.character);
        z
    }

    #[test]
    fn centre_count_is_square_of_dimension() {
        for grp in groups_up_to_order(16) {
            let n = grp.exponent();
            let c = centre_simples(&PointedCategory::trivial(&grp, n).unwrap()).unwrap();
            assert_eq!(c.simples.len(), grp.order() * grp.order());
            assert!(is_nondegenerate(&c.form).unwrap());
            let degrees: BTreeSet<_> = c.simples.iter().map(|s| (s.degree.clone(), s.character.clone())).collect();
            assert_eq!(degrees.len(), c.simples.len());
        }
    }

    #[test]
    fn induced_form_on_hyperbolic_plane() {
        let v = g(&[2, 2]);
        let q = QuadraticForm::from_fn(&v, 2, |x| (x[0] * x[1]) as i64).unwrap();
        let h = Subgroup::generated(&v, &[vec![1, 0]]).unwrap();
        assert!(is_isotropic(&h, &q).unwrap());
        let perp = orthogonal_complement(&q, &h).unwrap();
        assert_eq!(perp, h);
        let (qb, sq) = induced_form(&q, &perp, &h).unwrap();
        assert!(sq.group().is_trivial());
        assert_eq!(qb.values(), &[0]);
        assert!(induced_form(&q, &Subgroup::whole(&v), &h).is_err());
    }
}

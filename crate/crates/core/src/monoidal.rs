//! The pointed monoidal category V(G, α): associator checks, monoidal
//! functors and natural isomorphisms, duals and pivotal structures.

use crate::abgroup::{FinAbGroup, GroupElement, Hom};
use crate::arith::gcd;
use crate::check::Check;
use crate::cochain::{Cochain, Domain};
use crate::diagram;
use crate::error::{Error, Result};

/// V(G, α) with α a normalized 3-cocycle on the whole group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedCategory {
    associator: Cochain,
}

impl PointedCategory {
    pub fn new(associator: Cochain) -> Result<Self> {
        if associator.degree() != 3 || !associator.domain().is_full() {
            return Err(Error::Precondition("associator must be a 3-cochain on the whole group".into()));
        }
        let check = pentagon_check(&associator)?;
        if let Some(w) = check.witness {
            return Err(Error::Precondition(format!("associator fails the pentagon at {:?}", w.args)));
        }
        Ok(PointedCategory { associator })
    }

    /// For associators that satisfy the pentagon by construction.
    pub(crate) fn new_unchecked(associator: Cochain) -> Self {
        debug_assert!(associator.degree() == 3 && associator.domain().is_full());
        PointedCategory { associator }
    }

    pub fn trivial(g: &FinAbGroup, modulus: u32) -> Result<Self> {
        Ok(PointedCategory {
            associator: Cochain::zero_on(g, 3, modulus)?,
        })
    }

    pub fn group(&self) -> &FinAbGroup {
        self.associator.group()
    }

    pub fn modulus(&self) -> u32 {
        self.associator.modulus()
    }

    pub fn associator(&self) -> &Cochain {
        &self.associator
    }

    pub fn domain(&self) -> &std::sync::Arc<Domain> {
        self.associator.domain()
    }
}

fn tuple_args(c: &Cochain, t: &[usize]) -> Vec<GroupElement> {
    t.iter().map(|&i| c.domain().member(i).clone()).collect()
}

/// First position where two cochains on the same domain differ.
pub(crate) fn first_difference(lhs: &Cochain, rhs: &Cochain) -> Option<(Vec<GroupElement>, u32)> {
    let n = lhs.modulus();
    lhs.entries()
        .iter()
        .zip(rhs.entries())
        .position(|(a, b)| a != b)
        .map(|i| {
            let t = lhs.domain().tuple_at(i, lhs.degree());
            let r = (lhs.get_index(i) + n - rhs.get_index(i)) % n;
            (tuple_args(lhs, &t), r)
        })
}

/// The pentagon on simple objects, evaluated from the diagram and compared
/// with the 3-cocycle identity.
pub fn pentagon_check(alpha: &Cochain) -> Result<Check> {
    if alpha.degree() != 3 {
        return Err(Error::Precondition("an associator is a 3-cochain".into()));
    }
    let rel = diagram::pentagon();
    let failure = rel.first_failure(alpha, None);
    let cocycle = alpha.is_cocycle()?;
    if failure.is_none() != cocycle {
        return Err(Error::Precondition("pentagon diagram and cocycle identity disagree".into()));
    }
    Ok(match failure {
        None => Check::pass(),
        Some(at) => {
            let residual = rel.evaluate(alpha.domain(), alpha, None, &at);
            Check::fail("pentagon", tuple_args(alpha, &at), residual)
        }
    })
}

/// A monoidal functor V(G, α) → V(Q, β) given by a homomorphism and a
/// 2-cochain on G.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorData {
    pub source: PointedCategory,
    pub target: PointedCategory,
    pub hom: Hom,
    pub constraint: Cochain,
}

impl FunctorData {
    pub fn new(source: PointedCategory, target: PointedCategory, hom: Hom, constraint: Cochain) -> Result<Self> {
        if source.modulus() != target.modulus() {
            return Err(Error::ModulusMismatch {
                left: source.modulus(),
                right: target.modulus(),
            });
        }
        if constraint.modulus() != source.modulus() {
            return Err(Error::ModulusMismatch {
                left: source.modulus(),
                right: constraint.modulus(),
            });
        }
        if hom.source() != source.group() || hom.target() != target.group() {
            return Err(Error::NotHomomorphism("map does not match the categories' groups".into()));
        }
        let hom = Hom::new(hom.source(), hom.target(), hom.images().to_vec())?;
        if constraint.degree() != 2 || **constraint.domain() != **source.domain() {
            return Err(Error::Precondition("functor constraint must be a 2-cochain on the source group".into()));
        }
        let constraint = constraint.with_domain(source.domain())?;
        Ok(FunctorData {
            source,
            target,
            hom,
            constraint,
        })
    }

    pub fn identity(c: &PointedCategory) -> Self {
        FunctorData {
            source: c.clone(),
            target: c.clone(),
            hom: Hom::identity(c.group()),
            constraint: Cochain::zero(c.domain(), 2, c.modulus()).expect("2-cochain"),
        }
    }

    /// `−α + hom*(β)`, which `dφ` must equal.
    pub fn required_coboundary(&self) -> Result<Cochain> {
        let pulled = self.target.associator.pullback(&self.hom)?.with_domain(self.source.domain())?;
        pulled.sub(self.source.associator())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &FunctorData) -> Result<FunctorData> {
        if self.target != other.source {
            return Err(Error::Precondition("functors do not compose".into()));
        }
        let hom = self.hom.then(&other.hom)?;
        let pulled = other.constraint.pullback(&self.hom)?.with_domain(self.source.domain())?;
        FunctorData::new(self.source.clone(), other.target.clone(), hom, pulled.add(&self.constraint)?)
    }
}

/// `dφ = −α + hom*(β)`: the semi-groupal coherence on simples.
pub fn functor_check(f: &FunctorData) -> Result<Check> {
    let lhs = f.constraint.coboundary()?;
    let rhs = f.required_coboundary()?;
    Ok(match first_difference(&lhs, &rhs) {
        None => Check::pass(),
        Some((args, r)) => Check::fail("functor coherence", args, r),
    })
}

/// `φ′(f,g) − φ(f,g) = c(f+g) − c(f) − c(g)` for all `f, g`.
pub fn nat_iso_check(c: &Cochain, f: &FunctorData, g: &FunctorData) -> Result<Check> {
    if f.hom != g.hom || f.source != g.source || f.target != g.target {
        return Err(Error::Precondition(
            "natural isomorphisms are only compared between functors with the same underlying map".into(),
        ));
    }
    if c.degree() != 1 || **c.domain() != **f.source.domain() {
        return Err(Error::Precondition("component data must be a 1-cochain on the source group".into()));
    }
    if c.modulus() != f.constraint.modulus() {
        return Err(Error::ModulusMismatch {
            left: c.modulus(),
            right: f.constraint.modulus(),
        });
    }
    let lhs = g.constraint.sub(&f.constraint)?;
    let rhs = c.coboundary()?.neg().with_domain(f.source.domain())?;
    Ok(match first_difference(&lhs, &rhs) {
        None => Check::pass(),
        Some((args, r)) => Check::fail("natural transformation", args, r),
    })
}

/// A monoidal equivalence over a given group isomorphism, if one exists.
pub fn equivalence_search(c: &PointedCategory, d: &PointedCategory, hom: &Hom) -> Result<Option<FunctorData>> {
    if !hom.is_bijective() {
        return Err(Error::NotBijective);
    }
    if c.modulus() != d.modulus() {
        return Err(Error::ModulusMismatch {
            left: c.modulus(),
            right: d.modulus(),
        });
    }
    let probe = FunctorData::new(c.clone(), d.clone(), hom.clone(), Cochain::zero(c.domain(), 2, c.modulus())?)?;
    let target = probe.required_coboundary()?;
    Ok(target.solve_coboundary()?.map(|phi| FunctorData {
        constraint: phi,
        ..probe
    }))
}

pub fn dual(g: &FinAbGroup, x: &[u32]) -> GroupElement {
    g.neg(x)
}

/// Degree of `[X, Y]` for `X` of degree `x`, `Y` of degree `y`: the unique
/// `f` with `f + x = y`.
pub fn internal_hom_left(g: &FinAbGroup, x: &[u32], y: &[u32]) -> GroupElement {
    g.sub(y, x)
}

pub fn internal_hom_right(g: &FinAbGroup, x: &[u32], y: &[u32]) -> GroupElement {
    g.add(&g.neg(x), y)
}

/// Evaluation exponent for `I(g)` with coevaluation fixed to the identity
/// scalar: `α(g, −g, g)`.
pub fn evaluation_exponent(c: &PointedCategory, g: usize) -> u32 {
    let d = c.domain();
    c.associator.get(&[g, d.neg(g), g])
}

/// Scalar of the canonical isomorphism `(I(f)⊗I(g))* → I(g)*⊗I(f)*`,
/// assembled from evaluations and associators.
pub fn dual_tensor_exponent(c: &PointedCategory, f: usize, g: usize) -> u32 {
    let d = c.domain();
    let a = c.associator();
    let n = c.modulus() as i64;
    let (nf, ng, fg) = (d.neg(f), d.neg(g), d.add(f, g));
    let ev = |x: usize| evaluation_exponent(c, x) as i64;
    let v = -(a.get(&[ng, nf, fg]) as i64) + a.get(&[nf, f, g]) as i64 + ev(f) + ev(g) - ev(fg);
    v.rem_euclid(n) as u32
}

/// Monoidal constraint of the double-dual functor on simples.
pub fn double_dual_constraint(c: &PointedCategory) -> Result<Cochain> {
    let d = c.domain().clone();
    Cochain::from_fn(&d, 2, c.modulus(), |t| {
        let (f, g) = (t[0], t[1]);
        dual_tensor_exponent(c, d.neg(g), d.neg(f)) as i64 - dual_tensor_exponent(c, f, g) as i64
    })
}

/// Values `t(g)` of a pivotal structure on simples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotalData {
    pub values: Cochain,
}

/// `t(f+g) = t(f) + t(g) + δ(f,g)` with `δ` the double-dual constraint.
pub fn pivotal_check(c: &PointedCategory, t: &PivotalData) -> Result<Check> {
    if t.values.degree() != 1 || **t.values.domain() != **c.domain() || t.values.modulus() != c.modulus() {
        return Err(Error::Precondition("pivotal values must be a 1-cochain on the category's group".into()));
    }
    let lhs = t.values.coboundary()?.with_domain(c.domain())?;
    let rhs = double_dual_constraint(c)?.neg();
    Ok(match first_difference(&lhs, &rhs) {
        None => Check::pass(),
        Some((args, r)) => Check::fail("pivotal monoidality", args, r),
    })
}

/// All characters `G → μ_N` as 1-cochains, in lexicographic order of their
/// values on the standard generators.
pub fn characters(g: &FinAbGroup, modulus: u32) -> Result<Vec<Cochain>> {
    let d = Domain::full(g);
    let steps: Vec<u32> = g
        .factors()
        .iter()
        .map(|&n| modulus / gcd(n as u64, modulus as u64) as u32)
        .collect();
    let counts: Vec<u32> = g
        .factors()
        .iter()
        .map(|&n| gcd(n as u64, modulus as u64) as u32)
        .collect();
    let total: usize = counts.iter().map(|&c| c as usize).product();
    let mut out = Vec::with_capacity(total);
    for k in 0..total {
        let mut rem = k;
        let mut gen_values = vec![0u32; counts.len()];
        for i in (0..counts.len()).rev() {
            gen_values[i] = (rem % counts[i] as usize) as u32 * steps[i];
            rem /= counts[i] as usize;
        }
        out.push(Cochain::from_elements(&d, 1, modulus, |x| {
            x[0].iter().zip(&gen_values).map(|(&a, &v)| a as i64 * v as i64).sum()
        })?);
    }
    Ok(out)
}

/// Every pivotal structure: empty, or a torsor under the character group.
pub fn pivotal_enumerate(c: &PointedCategory, bound: usize) -> Result<Vec<PivotalData>> {
    c.group().check_bound(bound)?;
    let delta = double_dual_constraint(c)?;
    let Some(base) = delta.neg().solve_coboundary()? else { return Ok(vec![]) };
    let mut out: Vec<PivotalData> = characters(c.group(), c.modulus())?
        .iter()
        .map(|chi| {
            Ok(PivotalData {
                values: base.add(&chi.with_domain(c.domain())?)?,
            })
        })
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| a.values.entries().cmp(b.values.entries()));
    Ok(out)
}

/// Trace of the identity of `I(g)`: `t(g) + α(−g, g, −g)`.
pub fn quantum_dimension(c: &PointedCategory, t: &PivotalData, g: &[u32]) -> Result<u32> {
    if let Some(w) = pivotal_check(c, t)?.witness {
        return Err(Error::Precondition(format!("invalid pivotal structure at {:?}", w.args)));
    }
    let d = c.domain();
    let i = d
        .index_of(g)
        .ok_or_else(|| Error::ElementMismatch {
            element: g.to_vec(),
            factors: c.group().factors().to_vec(),
        })?;
    Ok((t.values.get(&[i]) + evaluation_exponent(c, d.neg(i))) % c.modulus())
}

/// `d(g) = d(−g)` for every `g`.
pub fn is_spherical(c: &PointedCategory, t: &PivotalData) -> Result<bool> {
    let g = c.group();
    for x in g.elements() {
        if quantum_dimension(c, t, &x)? != quantum_dimension(c, t, &g.neg(&x))? {
            return Ok(false);
        }
    }
    Ok(true)
}

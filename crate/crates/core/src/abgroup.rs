//! Finite abelian groups given by factor lists, their elements, subgroups,
//! quotients, homomorphisms and finite G-sets.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{lcm, reduce};
use crate::error::{Error, Result};
use crate::linalg::{smith_int, Echelon};

/// Residue vector, one coordinate per factor.
pub type GroupElement = Vec<u32>;

/// Default bound on group orders for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 4096;

/// `ℤ/n₁ × … × ℤ/n_k`. Factors need not divide each other.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "GroupWire", into = "GroupWire")]
pub struct FinAbGroup {
    factors: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct GroupWire {
    factors: Vec<u32>,
}

impl TryFrom<GroupWire> for FinAbGroup {
    type Error = Error;
    fn try_from(w: GroupWire) -> Result<Self> {
        FinAbGroup::new(w.factors)
    }
}

impl From<FinAbGroup> for GroupWire {
    fn from(g: FinAbGroup) -> Self {
        GroupWire { factors: g.factors }
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|n| format!("Z/{n}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

impl FinAbGroup {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = factors.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidGroup(format!("factor {bad} is less than 2")));
        }
        let order = factors
            .iter()
            .try_fold(1u64, |acc, &n| acc.checked_mul(n as u64))
            .filter(|&o| o <= u32::MAX as u64);
        if order.is_none() {
            return Err(Error::InvalidGroup("order does not fit in 32 bits".into()));
        }
        Ok(FinAbGroup { factors })
    }

    /// Like [`FinAbGroup::new`] but drops factors equal to 1.
    pub fn from_factors_lenient(factors: &[u32]) -> Result<Self> {
        Self::new(factors.iter().copied().filter(|&n| n != 1).collect())
    }

    pub fn trivial() -> Self {
        FinAbGroup { factors: vec![] }
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.factors.iter().map(|&n| n as usize).product()
    }

    pub fn exponent(&self) -> u32 {
        self.factors.iter().fold(1u64, |a, &n| lcm(a, n as u64)) as u32
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Default root-of-unity modulus `2·exp(G)²`.
    pub fn default_modulus(&self) -> u32 {
        let e = self.exponent();
        2 * e * e
    }

    pub fn zero(&self) -> GroupElement {
        vec![0; self.rank()]
    }

    /// Checks that `x` is a reduced element.
    pub fn check(&self, x: &[u32]) -> Result<()> {
        if x.len() != self.rank() || x.iter().zip(&self.factors).any(|(&v, &n)| v >= n) {
            return Err(Error::ElementMismatch {
                element: x.to_vec(),
                factors: self.factors.clone(),
            });
        }
        Ok(())
    }

    /// Reduces arbitrary integer coordinates into an element.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::ElementMismatch {
                element: coords.iter().map(|&c| c as u32).collect(),
                factors: self.factors.clone(),
            });
        }
        Ok(coords
            .iter()
            .zip(&self.factors)
            .map(|(&c, &n)| reduce(c as i128, n))
            .collect())
    }

    pub fn add(&self, x: &[u32], y: &[u32]) -> GroupElement {
        x.iter()
            .zip(y)
            .zip(&self.factors)
            .map(|((&a, &b), &n)| (a + b) % n)
            .collect()
    }

    pub fn neg(&self, x: &[u32]) -> GroupElement {
        x.iter().zip(&self.factors).map(|(&a, &n)| (n - a) % n).collect()
    }

    pub fn sub(&self, x: &[u32], y: &[u32]) -> GroupElement {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, k: i64, x: &[u32]) -> GroupElement {
        x.iter()
            .zip(&self.factors)
            .map(|(&a, &n)| reduce(k as i128 * a as i128, n))
            .collect()
    }

    pub fn is_zero(&self, x: &[u32]) -> bool {
        x.iter().all(|&v| v == 0)
    }

    /// Order of an element.
    pub fn element_order(&self, x: &[u32]) -> u32 {
        x.iter()
            .zip(&self.factors)
            .fold(1u64, |acc, (&a, &n)| lcm(acc, (n / crate::arith::gcd(a as u64, n as u64) as u32) as u64))
            as u32
    }

    /// Position of `x` in lexicographic order (first coordinate most
    /// significant).
    pub fn index_of(&self, x: &[u32]) -> usize {
        x.iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&a, &n)| acc * n as usize + a as usize)
    }

    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut x = vec![0u32; self.rank()];
        for (slot, &n) in x.iter_mut().zip(&self.factors).rev() {
            *slot = (index % n as usize) as u32;
            index /= n as usize;
        }
        x
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.order()).map(|i| self.element_at(i)).collect()
    }

    /// Standard generator `e_i`.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut x = self.zero();
        x[i] = 1 % self.factors[i];
        x
    }

    pub fn echelon(&self) -> Echelon {
        Echelon::new(self.factors.clone())
    }

    pub fn direct_product(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut f = self.factors.clone();
        f.extend_from_slice(&other.factors);
        FinAbGroup { factors: f }
    }

    pub fn check_bound(&self, bound: usize) -> Result<()> {
        if self.order() > bound {
            return Err(Error::BoundExceeded {
                order: self.order(),
                bound,
            });
        }
        Ok(())
    }
}

/// All groups of order at most `n` in invariant-factor form
/// `d₁ | d₂ | … | d_k`, ordered by order then factor list.
pub fn groups_up_to_order(n: usize) -> Vec<FinAbGroup> {
    fn extend(prefix: &mut Vec<u32>, prod: usize, n: usize, out: &mut Vec<Vec<u32>>) {
        out.push(prefix.clone());
        let step = prefix.last().copied().unwrap_or(1) as usize;
        let start = if prefix.is_empty() { 2 } else { step };
        let mut d = start;
        while prod * d <= n {
            if d % step == 0 {
                prefix.push(d as u32);
                extend(prefix, prod * d, n, out);
                prefix.pop();
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, n, &mut out);
    let mut groups: Vec<FinAbGroup> = out.into_iter().map(|f| FinAbGroup { factors: f }).collect();
    groups.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.factors.cmp(&b.factors)));
    groups
}

/// A subgroup kept in canonical echelon form.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: FinAbGroup,
    generators: Vec<GroupElement>,
    echelon: Echelon,
    basis: Vec<GroupElement>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.basis == other.basis
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn generated(parent: &FinAbGroup, gens: &[GroupElement]) -> Result<Self> {
        let mut echelon = parent.echelon();
        for g in gens {
            parent.check(g)?;
            echelon.insert_dense(g);
        }
        let basis = echelon.canonical_rows();
        Ok(Subgroup {
            parent: parent.clone(),
            generators: gens.to_vec(),
            echelon,
            basis,
        })
    }

    pub fn trivial(parent: &FinAbGroup) -> Self {
        Self::generated(parent, &[]).expect("no generators")
    }

    pub fn whole(parent: &FinAbGroup) -> Self {
        let gens: Vec<_> = (0..parent.rank()).map(|i| parent.generator(i)).collect();
        Self::generated(parent, &gens).expect("standard generators")
    }

    pub fn parent(&self) -> &FinAbGroup {
        &self.parent
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    /// Canonical generating set; identical for equal subgroups.
    pub fn canonical_basis(&self) -> &[GroupElement] {
        &self.basis
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    pub fn order(&self) -> usize {
        self.echelon.order_u64().expect("subgroup of a 32-bit group") as usize
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        self.echelon.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent == other.parent && self.basis.iter().all(|b| other.contains(b))
    }

    /// Least element of the coset `x + H`.
    pub fn coset_rep(&self, x: &[u32]) -> GroupElement {
        self.echelon.reduce(x)
    }

    /// Elements in lexicographic order.
    pub fn elements(&self) -> Vec<GroupElement> {
        let cols: Vec<usize> = self.echelon.pivot_columns().collect();
        let mut out = vec![self.parent.zero()];
        for &j in &cols {
            let p = self.echelon.pivot(j).expect("pivot column");
            let mut row = self.parent.zero();
            for &(c, v) in p {
                row[c as usize] = v;
            }
            let steps = self.parent.factors[j] / p[0].1;
            let mut next = Vec::with_capacity(out.len() * steps as usize);
            for x in &out {
                let mut y = x.clone();
                for _ in 0..steps {
                    next.push(y.clone());
                    y = self.parent.add(&y, &row);
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    /// `self + other`.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Subgroup::generated(&self.parent, &gens).expect("same parent")
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let gens: Vec<_> = self.elements().into_iter().filter(|x| other.contains(x)).collect();
        Subgroup::generated(&self.parent, &gens).expect("same parent")
    }

    fn sort_key(&self) -> (usize, &[GroupElement]) {
        (self.order(), &self.basis)
    }
}

/// All subgroups, sorted by order then canonical basis.
pub fn enumerate_subgroups(g: &FinAbGroup, bound: usize) -> Result<Vec<Subgroup>> {
    enumerate_subgroups_where(g, bound, |_, _| true)
}

/// Subgroups reachable from the trivial one by repeatedly adjoining
/// elements accepted by `admit(current, g)`. With a predicate that is
/// closed under taking subgroups, this lists exactly the subgroups on
/// which it holds.
pub fn enumerate_subgroups_where<F>(g: &FinAbGroup, bound: usize, admit: F) -> Result<Vec<Subgroup>>
where
    F: Fn(&Subgroup, &GroupElement) -> bool,
{
    g.check_bound(bound)?;
    let elements = g.elements();
    let start = Subgroup::trivial(g);
    let mut seen: BTreeSet<Vec<GroupElement>> = BTreeSet::from([start.basis.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    let mut out = vec![start];
    while let Some(s) = queue.pop_front() {
        for x in &elements {
            if s.coset_rep(x) != *x || g.is_zero(x) || !admit(&s, x) {
                continue;
            }
            let mut gens = s.basis.clone();
            gens.push(x.clone());
            let t = Subgroup::generated(g, &gens)?;
            if seen.insert(t.basis.clone()) {
                queue.push_back(t.clone());
                out.push(t);
            }
        }
    }
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(out)
}

/// The subquotient `S/T` for `T ≤ S ≤ G`, presented by invariant factors
/// together with mutually inverse coordinate maps.
#[derive(Debug, Clone)]
pub struct Subquotient {
    group: FinAbGroup,
    ambient: FinAbGroup,
    outer: Subgroup,
    inner: Subgroup,
    /// Pivot columns of the outer subgroup's echelon, one per generator.
    gen_cols: Vec<usize>,
    v: Vec<Vec<i128>>,
    v_inv: Vec<Vec<i128>>,
    /// Columns of the diagonal form that survive (invariant factor > 1).
    kept: Vec<usize>,
}

impl Subquotient {
    pub fn new(outer: &Subgroup, inner: &Subgroup) -> Result<Self> {
        if outer.parent != inner.parent || !inner.is_subgroup_of(outer) {
            return Err(Error::NotSubgroup("inner subgroup is not contained in the outer one".into()));
        }
        let ambient = outer.parent.clone();
        let ech = &outer.echelon;
        let gen_cols: Vec<usize> = ech.pivot_columns().collect();
        let k = gen_cols.len();
        let slot: BTreeMap<usize, usize> = gen_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let coords = |x: &[u32]| -> Vec<i128> {
            let (rest, coeffs) = ech.reduce_with_coeffs(x);
            debug_assert!(rest.iter().all(|&v| v == 0));
            let mut c = vec![0i128; k];
            for (col, q) in coeffs {
                c[slot[&col]] += q as i128;
            }
            c
        };
        let mut relations = Vec::new();
        for (i, &col) in gen_cols.iter().enumerate() {
            let p = ech.pivot(col).expect("pivot");
            let o = ambient.factors[col] / p[0].1;
            let mut row = ambient.zero();
            for &(c, v) in p {
                row[c as usize] = v;
            }
            let mut rel: Vec<i128> = coords(&ambient.scale(o as i64, &row)).into_iter().map(|c| -c).collect();
            rel[i] += o as i128;
            relations.push(rel);
        }
        for t in inner.canonical_basis() {
            relations.push(coords(t));
        }
        let s = smith_int(&relations, k);
        let mut diag = s.diag.clone();
        diag.resize(k, 0);
        let kept: Vec<usize> = (0..k).filter(|&i| diag[i] != 1).collect();
        if kept.iter().any(|&i| diag[i] == 0) {
            return Err(Error::Precondition("relation matrix does not present a finite group".into()));
        }
        let group = FinAbGroup::new(kept.iter().map(|&i| diag[i] as u32).collect())?;
        Ok(Subquotient {
            group,
            ambient,
            outer: outer.clone(),
            inner: inner.clone(),
            gen_cols,
            v: s.v,
            v_inv: s.v_inv,
            kept,
        })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn outer(&self) -> &Subgroup {
        &self.outer
    }

    pub fn inner(&self) -> &Subgroup {
        &self.inner
    }

    /// Image of an element of the outer subgroup.
    pub fn project(&self, x: &[u32]) -> Result<GroupElement> {
        self.ambient.check(x)?;
        if !self.outer.contains(x) {
            return Err(Error::NotSubgroup(format!("{x:?} is outside the outer subgroup")));
        }
        let (_, coeffs) = self.outer.echelon.reduce_with_coeffs(x);
        let k = self.gen_cols.len();
        let mut c = vec![0i128; k];
        for (col, q) in coeffs {
            let i = self.gen_cols.iter().position(|&g| g == col).expect("pivot column");
            c[i] += q as i128;
        }
        Ok(self
            .kept
            .iter()
            .zip(self.group.factors())
            .map(|(&j, &d)| reduce((0..k).map(|i| c[i] * self.v[i][j]).sum(), d))
            .collect())
    }

    /// A representative in the outer subgroup of a quotient element.
    pub fn lift(&self, y: &[u32]) -> Result<GroupElement> {
        self.group.check(y)?;
        let k = self.gen_cols.len();
        let mut full = vec![0i128; k];
        for (&j, &val) in self.kept.iter().zip(y) {
            full[j] = val as i128;
        }
        let mut x = self.ambient.zero();
        for i in 0..k {
            let coeff: i128 = (0..k).map(|j| full[j] * self.v_inv[j][i]).sum();
            let p = self.outer.echelon.pivot(self.gen_cols[i]).expect("pivot");
            for &(c, v) in p {
                let n = self.ambient.factors[c as usize];
                x[c as usize] = reduce(x[c as usize] as i128 + coeff * v as i128, n);
            }
        }
        Ok(x)
    }

    /// The projection restricted to the outer subgroup, as a homomorphism
    /// from the ambient group when the outer subgroup is everything.
    pub fn projection(&self) -> Result<Hom> {
        if !self.outer.is_whole() {
            return Err(Error::Precondition("projection is only total on the whole group".into()));
        }
        let images = (0..self.ambient.rank())
            .map(|i| self.project(&self.ambient.generator(i)))
            .collect::<Result<Vec<_>>>()?;
        Hom::new(&self.ambient, &self.group, images)
    }
}

/// `G/H` with its projection.
pub fn quotient(g: &FinAbGroup, h: &Subgroup) -> Result<(FinAbGroup, Hom)> {
    if h.parent() != g {
        return Err(Error::NotSubgroup("subgroup lives in a different group".into()));
    }
    let sq = Subquotient::new(&Subgroup::whole(g), h)?;
    let p = sq.projection()?;
    Ok((sq.group.clone(), p))
}

/// Homomorphism given by images of the standard generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hom {
    source: FinAbGroup,
    target: FinAbGroup,
    images: Vec<GroupElement>,
}

impl Hom {
    pub fn new(source: &FinAbGroup, target: &FinAbGroup, images: Vec<GroupElement>) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(Error::NotHomomorphism(format!(
                "{} generator images given for a group of rank {}",
                images.len(),
                source.rank()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            target.check(img)?;
            let killed = target.scale(source.factors[i] as i64, img);
            if !target.is_zero(&killed) {
                return Err(Error::NotHomomorphism(format!(
                    "image {img:?} of generator {i} has order not dividing {}",
                    source.factors[i]
                )));
            }
        }
        Ok(Hom {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn identity(g: &FinAbGroup) -> Self {
        let images = (0..g.rank()).map(|i| g.generator(i)).collect();
        Hom {
            source: g.clone(),
            target: g.clone(),
            images,
        }
    }

    pub fn zero(source: &FinAbGroup, target: &FinAbGroup) -> Self {
        Hom {
            source: source.clone(),
            target: target.clone(),
            images: vec![target.zero(); source.rank()],
        }
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    pub fn apply(&self, x: &[u32]) -> GroupElement {
        let mut y = self.target.zero();
        for (&c, img) in x.iter().zip(&self.images) {
            y = self.target.add(&y, &self.target.scale(c as i64, img));
        }
        y
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Hom) -> Result<Hom> {
        if self.target != other.source {
            return Err(Error::NotHomomorphism("composition of mismatched maps".into()));
        }
        let images = self.images.iter().map(|x| other.apply(x)).collect();
        Hom::new(&self.source, &other.target, images)
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.order() != self.target.order() {
            return false;
        }
        let mut seen = BTreeSet::new();
        self.source.elements().iter().all(|x| seen.insert(self.apply(x)))
    }

    pub fn kernel(&self) -> Subgroup {
        let gens: Vec<_> = self
            .source
            .elements()
            .into_iter()
            .filter(|x| self.target.is_zero(&self.apply(x)))
            .collect();
        Subgroup::generated(&self.source, &gens).expect("source elements")
    }

    /// All isomorphisms `source → target`, by images of generators.
    pub fn isomorphisms(source: &FinAbGroup, target: &FinAbGroup) -> Vec<Hom> {
        if source.order() != target.order() {
            return vec![];
        }
        let elems = target.elements();
        let candidates: Vec<Vec<GroupElement>> = source
            .factors
            .iter()
            .map(|&n| {
                elems
                    .iter()
                    .filter(|y| n % target.element_order(y) == 0)
                    .cloned()
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut choice = Vec::new();
        fn rec(
            i: usize,
            choice: &mut Vec<GroupElement>,
            cands: &[Vec<GroupElement>],
            source: &FinAbGroup,
            target: &FinAbGroup,
            out: &mut Vec<Hom>,
        ) {
            if i == cands.len() {
                let h = Hom {
                    source: source.clone(),
                    target: target.clone(),
                    images: choice.clone(),
                };
                if h.is_bijective() {
                    out.push(h);
                }
                return;
            }
            for y in &cands[i] {
                choice.push(y.clone());
                rec(i + 1, choice, cands, source, target, out);
                choice.pop();
            }
        }
        rec(0, &mut choice, &candidates, source, target, &mut out);
        out
    }
}

/// Finite G-set. Points are `0..len`; the action of each standard generator
/// is a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSet {
    group: FinAbGroup,
    gens: Vec<Vec<u32>>,
    /// `table[g·len + x] = g·x` for every group element index `g`.
    table: Arc<Vec<u32>>,
    len: usize,
}

impl GSet {
    pub fn new(group: &FinAbGroup, points: usize, gens: Vec<Vec<u32>>) -> Result<Self> {
        if gens.len() != group.rank() {
            return Err(Error::InvalidGSet(format!(
                "{} generator permutations for a group of rank {}",
                gens.len(),
                group.rank()
            )));
        }
        for p in &gens {
            let distinct: BTreeSet<u32> = p.iter().copied().collect();
            if p.len() != points || distinct.len() != points || p.iter().any(|&x| x as usize >= points) {
                return Err(Error::InvalidGSet("generator action is not a permutation of the points".into()));
            }
        }
        let compose = |p: &[u32], q: &[u32]| -> Vec<u32> { q.iter().map(|&x| p[x as usize]).collect() };
        for (i, p) in gens.iter().enumerate() {
            let mut pow: Vec<u32> = (0..points as u32).collect();
            for _ in 0..group.factors[i] {
                pow = compose(p, &pow);
            }
            if pow.iter().enumerate().any(|(x, &y)| x as u32 != y) {
                return Err(Error::InvalidGSet(format!("generator {i} does not act with the right order")));
            }
            for q in &gens[i + 1..] {
                if compose(p, q) != compose(q, p) {
                    return Err(Error::InvalidGSet("generator actions do not commute".into()));
                }
            }
        }
        let order = group.order();
        let entries = order as u128 * points as u128;
        if entries > 1 << 26 {
            return Err(Error::TableTooLarge { entries });
        }
        let mut table = vec![0u32; order * points];
        for gi in 0..order {
            let g = group.element_at(gi);
            for x in 0..points {
                let mut y = x as u32;
                for (i, &c) in g.iter().enumerate() {
                    for _ in 0..c {
                        y = gens[i][y as usize];
                    }
                }
                table[gi * points + x] = y;
            }
        }
        Ok(GSet {
            group: group.clone(),
            gens,
            table: Arc::new(table),
            len: points,
        })
    }

    /// Single point with trivial action.
    pub fn point(group: &FinAbGroup) -> Self {
        GSet::new(group, 1, vec![vec![0]; group.rank()]).expect("trivial action")
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn generator_actions(&self) -> &[Vec<u32>] {
        &self.gens
    }

    /// `g·x` by group element index.
    #[inline]
    pub fn act_index(&self, g: usize, x: usize) -> usize {
        self.table[g * self.len + x] as usize
    }

    pub fn act(&self, g: &[u32], x: usize) -> usize {
        self.act_index(self.group.index_of(g), x)
    }

    pub fn orbit(&self, x: usize) -> BTreeSet<usize> {
        (0..self.group.order()).map(|g| self.act_index(g, x)).collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.len == 0 || self.orbit(0).len() == self.len
    }

    pub fn is_free(&self) -> bool {
        (0..self.len).all(|x| (1..self.group.order()).all(|g| self.act_index(g, x) != x))
    }
}

/// `G/H` as a G-set with the translation action. Point `i` is the `i`-th
/// coset in order of least representatives, so point 0 is `H` itself.
pub fn coset_space(g: &FinAbGroup, h: &Subgroup) -> Result<(GSet, Vec<GroupElement>)> {
    if h.parent() != g {
        return Err(Error::NotSubgroup("subgroup lives in a different group".into()));
    }
    let reps: Vec<GroupElement> = g
        .elements()
        .into_iter()
        .filter(|x| h.coset_rep(x) == *x)
        .collect();
    let pos: BTreeMap<&GroupElement, u32> = reps.iter().zip(0u32..).collect();
    let gens = (0..g.rank())
        .map(|i| {
            let e = g.generator(i);
            reps.iter().map(|r| pos[&h.coset_rep(&g.add(&e, r))]).collect()
        })
        .collect();
    let x = GSet::new(g, reps.len(), gens)?;
    Ok((x, reps))
}

pub fn stabiliser(x: &GSet, point: usize) -> Result<Subgroup> {
    if point >= x.len() {
        return Err(Error::InvalidGSet(format!("point {point} is not in a set of {} points", x.len())));
    }
    let g = x.group();
    let gens: Vec<_> = (0..g.order())
        .filter(|&i| x.act_index(i, point) == point)
        .map(|i| g.element_at(i))
        .collect();
    Subgroup::generated(g, &gens)
}

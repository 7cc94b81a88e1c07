//! Normalized cochains with values in μ_N (written additively as ℤ/N), for
//! trivial coefficients and for permutation coefficients Map(X, μ_N).

use std::fmt;
use std::sync::Arc;

use crate::abgroup::{FinAbGroup, GSet, GroupElement, Hom, Subgroup};
use crate::arith::reduce;
use crate::error::{Error, Result};
use crate::linalg::{solve_mod, Echelon, ModMatrix};

/// Largest dense table a cochain may allocate.
pub const MAX_TABLE_ENTRIES: u128 = 1 << 24;

const ADD_TABLE_LIMIT: usize = 1024;

/// An enumerated subgroup of an ambient group. Cochains are tables over
/// tuples of its members, indexed locally in lexicographic order of the
/// ambient coordinates (so index 0 is the identity).
pub struct Domain {
    ambient: FinAbGroup,
    subgroup: Subgroup,
    members: Vec<GroupElement>,
    lookup: Vec<u32>,
    add: Vec<u32>,
    neg: Vec<u32>,
}

impl fmt::Debug for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Domain")
            .field("ambient", &self.ambient)
            .field("basis", &self.subgroup.canonical_basis())
            .finish()
    }
}

impl PartialEq for Domain {
    fn eq(&self, other: &Self) -> bool {
        self.subgroup == other.subgroup
    }
}

impl Eq for Domain {}

impl Domain {
    pub fn full(g: &FinAbGroup) -> Arc<Domain> {
        Self::of_subgroup(&Subgroup::whole(g))
    }

    pub fn of_subgroup(h: &Subgroup) -> Arc<Domain> {
        let ambient = h.parent().clone();
        let members = h.elements();
        let mut lookup = vec![u32::MAX; ambient.order()];
        for (i, m) in members.iter().enumerate() {
            lookup[ambient.index_of(m)] = i as u32;
        }
        let n = members.len();
        let add = if n <= ADD_TABLE_LIMIT {
            let mut t = vec![0u32; n * n];
            for i in 0..n {
                for j in 0..n {
                    t[i * n + j] = lookup[ambient.index_of(&ambient.add(&members[i], &members[j]))];
                }
            }
            t
        } else {
            Vec::new()
        };
        let neg = members.iter().map(|m| lookup[ambient.index_of(&ambient.neg(m))]).collect();
        Arc::new(Domain {
            ambient,
            subgroup: h.clone(),
            members,
            lookup,
            add,
            neg,
        })
    }

    pub fn ambient(&self) -> &FinAbGroup {
        &self.ambient
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.ambient.order()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn members(&self) -> &[GroupElement] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &GroupElement {
        &self.members[i]
    }

    /// Local index of an ambient element, if it lies in the domain.
    pub fn index_of(&self, x: &[u32]) -> Option<usize> {
        if self.ambient.check(x).is_err() {
            return None;
        }
        let i = self.lookup[self.ambient.index_of(x)];
        (i != u32::MAX).then_some(i as usize)
    }

    #[inline]
    pub fn add(&self, i: usize, j: usize) -> usize {
        let n = self.members.len();
        if self.add.is_empty() {
            let s = self.ambient.add(&self.members[i], &self.members[j]);
            self.lookup[self.ambient.index_of(&s)] as usize
        } else {
            self.add[i * n + j] as usize
        }
    }

    #[inline]
    pub fn neg(&self, i: usize) -> usize {
        self.neg[i] as usize
    }

    #[inline]
    pub fn sub(&self, i: usize, j: usize) -> usize {
        self.add(i, self.neg(j))
    }

    /// Index of the tuple in a table over `domain^len`.
    #[inline]
    pub fn tuple_index(&self, t: &[usize]) -> usize {
        let n = self.members.len();
        t.iter().fold(0, |acc, &x| acc * n + x)
    }

    pub fn tuple_at(&self, mut index: usize, degree: usize) -> Vec<usize> {
        let n = self.members.len();
        let mut t = vec![0; degree];
        for slot in t.iter_mut().rev() {
            *slot = index % n;
            index /= n;
        }
        t
    }

    pub fn table_size(&self, degree: usize) -> Result<usize> {
        let entries = (self.members.len() as u128).pow(degree as u32);
        if entries > MAX_TABLE_ENTRIES {
            return Err(Error::TableTooLarge { entries });
        }
        Ok(entries as usize)
    }

    /// Local indices of the ambient group elements of another domain that
    /// this one contains; `None` where it does not.
    fn embedding_from(&self, other: &Domain) -> Vec<Option<usize>> {
        other.members.iter().map(|m| self.index_of(m)).collect()
    }
}

fn check_modulus(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidModulus(n));
    }
    Ok(())
}

/// Odometer over tuples of local indices.
fn next_tuple(t: &mut [usize], n: usize) -> bool {
    for slot in t.iter_mut().rev() {
        *slot += 1;
        if *slot < n {
            return true;
        }
        *slot = 0;
    }
    false
}

/// Adds the inner faces and the last face of the bar differential of `src`
/// (degree `n`, `pts` values per tuple) into `acc` (degree `n + 1`). Every
/// term is added as its residue mod `m`, negated terms as `m - v`.
fn add_inner_faces(d: &Domain, n: usize, pts: usize, m: u64, src: &[u32], acc: &mut [u64]) {
    let k = d.len();
    let neg = |v: u32| if v == 0 { 0 } else { m - v as u64 };
    for f in 0..n {
        let lo = k.pow((n - 1 - f) as u32) * pts;
        let hi = k.pow(f as u32);
        for h in 0..hi {
            for a in 0..k {
                for b in 0..k {
                    let dst = ((h * k + a) * k + b) * lo;
                    let from = (h * k + d.add(a, b)) * lo;
                    let (out, inp) = (&mut acc[dst..dst + lo], &src[from..from + lo]);
                    if f % 2 == 0 {
                        out.iter_mut().zip(inp).for_each(|(o, &v)| *o += neg(v));
                    } else {
                        out.iter_mut().zip(inp).for_each(|(o, &v)| *o += v as u64);
                    }
                }
            }
        }
    }
    // last face drops the final argument
    for (j, inp) in src.chunks(pts).enumerate() {
        for g in 0..k {
            let out = &mut acc[(j * k + g) * pts..(j * k + g + 1) * pts];
            if n.is_multiple_of(2) {
                out.iter_mut().zip(inp).for_each(|(o, &v)| *o += neg(v));
            } else {
                out.iter_mut().zip(inp).for_each(|(o, &v)| *o += v as u64);
            }
        }
    }
}

/// Coboundary rows, the free positions they act on, and the right-hand side.
type PrimitiveSystem = (ModMatrix, Vec<usize>, Vec<u32>);

/// Normalized cochain `domainⁿ → ℤ/N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    domain: Arc<Domain>,
    degree: usize,
    modulus: u32,
    entries: Vec<u32>,
}

impl Cochain {
    pub fn zero(domain: &Arc<Domain>, degree: usize, modulus: u32) -> Result<Self> {
        check_modulus(modulus)?;
        let size = domain.table_size(degree)?;
        Ok(Cochain {
            domain: domain.clone(),
            degree,
            modulus,
            entries: vec![0; size],
        })
    }

    pub fn zero_on(g: &FinAbGroup, degree: usize, modulus: u32) -> Result<Self> {
        Self::zero(&Domain::full(g), degree, modulus)
    }

    /// Builds a cochain from its values on tuples without identity
    /// arguments; identity tuples are set to zero.
    pub fn from_fn<F>(domain: &Arc<Domain>, degree: usize, modulus: u32, mut f: F) -> Result<Self>
    where
        F: FnMut(&[usize]) -> i64,
    {
        let mut c = Self::zero(domain, degree, modulus)?;
        let n = domain.len();
        let mut t = vec![0usize; degree];
        let mut idx = 0;
        loop {
            if t.iter().all(|&x| x != 0) {
                c.entries[idx] = reduce(f(&t) as i128, modulus);
            }
            idx += 1;
            if !next_tuple(&mut t, n) {
                break;
            }
        }
        Ok(c)
    }

    /// As [`Cochain::from_fn`] with arguments given as ambient elements.
    pub fn from_elements<F>(domain: &Arc<Domain>, degree: usize, modulus: u32, mut f: F) -> Result<Self>
    where
        F: FnMut(&[&GroupElement]) -> i64,
    {
        let d = domain.clone();
        Self::from_fn(domain, degree, modulus, |t| {
            let args: Vec<&GroupElement> = t.iter().map(|&i| d.member(i)).collect();
            f(&args)
        })
    }

    /// Table of a cochain from raw entries; fails unless normalized.
    pub fn from_entries(domain: &Arc<Domain>, degree: usize, modulus: u32, entries: Vec<u32>) -> Result<Self> {
        check_modulus(modulus)?;
        let size = domain.table_size(degree)?;
        if entries.len() != size {
            return Err(Error::Parse(format!("expected {size} entries, got {}", entries.len())));
        }
        let c = Cochain {
            domain: domain.clone(),
            degree,
            modulus,
            entries: entries.into_iter().map(|e| e % modulus).collect(),
        };
        c.check_normalized()?;
        Ok(c)
    }

    fn check_normalized(&self) -> Result<()> {
        for (i, &e) in self.entries.iter().enumerate() {
            if e != 0 {
                let t = self.domain.tuple_at(i, self.degree);
                if t.contains(&0) {
                    let args: Vec<_> = t.iter().map(|&x| self.domain.member(x).clone()).collect();
                    return Err(Error::NotNormalized(format!("{args:?}")));
                }
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &Arc<Domain> {
        &self.domain
    }

    /// Ambient group of the domain.
    pub fn group(&self) -> &FinAbGroup {
        self.domain.ambient()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, t: &[usize]) -> u32 {
        self.entries[self.domain.tuple_index(t)]
    }

    #[inline]
    pub fn get_index(&self, idx: usize) -> u32 {
        self.entries[idx]
    }

    /// Value at ambient elements; zero outside the domain is an error.
    pub fn value(&self, args: &[&[u32]]) -> Result<u32> {
        if args.len() != self.degree {
            return Err(Error::Precondition(format!(
                "{} arguments for a cochain of degree {}",
                args.len(),
                self.degree
            )));
        }
        let t = args
            .iter()
            .map(|a| {
                self.domain
                    .index_of(a)
                    .ok_or_else(|| Error::NotSubgroup(format!("{a:?} is outside the cochain's domain")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.get(&t))
    }

    /// Sets a value on a tuple of local indices.
    pub fn set(&mut self, t: &[usize], value: i64) -> Result<()> {
        if t.contains(&0) {
            return Err(Error::NotNormalized(format!("{t:?}")));
        }
        let i = self.domain.tuple_index(t);
        self.entries[i] = reduce(value as i128, self.modulus);
        Ok(())
    }

    pub fn set_value(&mut self, args: &[&[u32]], value: i64) -> Result<()> {
        let t = args
            .iter()
            .map(|a| {
                self.domain
                    .index_of(a)
                    .ok_or_else(|| Error::NotSubgroup(format!("{a:?} is outside the cochain's domain")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.set(&t, value)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    fn check_compatible(&self, other: &Cochain) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        if self.domain != other.domain || self.degree != other.degree {
            return Err(Error::Precondition("cochains live on different domains or degrees".into()));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Cochain, f: impl Fn(u32, u32) -> i64) -> Result<Cochain> {
        self.check_compatible(other)?;
        let n = self.modulus;
        Ok(Cochain {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| reduce(f(a, b) as i128, n))
                .collect(),
            ..self.clone()
        })
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.zip_with(other, |a, b| a as i64 + b as i64)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.zip_with(other, |a, b| a as i64 - b as i64)
    }

    pub fn scale(&self, k: i64) -> Cochain {
        let n = self.modulus;
        Cochain {
            entries: self.entries.iter().map(|&a| reduce(k as i128 * a as i128, n)).collect(),
            ..self.clone()
        }
    }

    pub fn neg(&self) -> Cochain {
        self.scale(-1)
    }

    /// Re-expresses the values in μ_M for a multiple `M` of `N`.
    pub fn lift(&self, modulus: u32) -> Result<Cochain> {
        if modulus == 0 || !modulus.is_multiple_of(self.modulus) {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: modulus,
            });
        }
        let k = modulus / self.modulus;
        Ok(Cochain {
            modulus,
            entries: self.entries.iter().map(|&a| a * k).collect(),
            ..self.clone()
        })
    }

    /// Bar differential with trivial coefficients. Faces are located by
    /// index arithmetic on the flat table; identity tuples come out zero
    /// because the input is normalized.
    pub fn coboundary(&self) -> Result<Cochain> {
        let d = &self.domain;
        let n = self.degree;
        let m = self.modulus as u64;
        let mut out = Cochain::zero(d, n + 1, self.modulus)?;
        let src = &self.entries;
        let mut acc: Vec<u64> = src.iter().map(|&v| v as u64).cycle().take(out.entries.len()).collect();
        add_inner_faces(d, n, 1, m, src, &mut acc);
        for (slot, s) in out.entries.iter_mut().zip(acc) {
            *slot = (s % m) as u32;
        }
        Ok(out)
    }

    pub fn is_cocycle(&self) -> Result<bool> {
        Ok(self.coboundary()?.is_zero())
    }

    /// The first tuple (ambient elements) where the coboundary is nonzero.
    pub fn cocycle_witness(&self) -> Result<Option<Vec<GroupElement>>> {
        let dc = self.coboundary()?;
        Ok(dc.entries.iter().position(|&e| e != 0).map(|i| {
            self.domain
                .tuple_at(i, self.degree + 1)
                .into_iter()
                .map(|x| self.domain.member(x).clone())
                .collect()
        }))
    }

    /// Restriction to a subgroup of the domain.
    pub fn restrict(&self, h: &Subgroup) -> Result<Cochain> {
        self.restrict_to(&Domain::of_subgroup(h))
    }

    pub fn restrict_to(&self, target: &Arc<Domain>) -> Result<Cochain> {
        if target.ambient() != self.domain.ambient() {
            return Err(Error::NotSubgroup("restriction to a subgroup of another group".into()));
        }
        let emb = self.domain.embedding_from(target);
        if emb.iter().any(|e| e.is_none()) {
            return Err(Error::NotSubgroup("restriction target is not inside the domain".into()));
        }
        let emb: Vec<usize> = emb.into_iter().map(|e| e.unwrap()).collect();
        let mut t = vec![0usize; self.degree];
        Cochain::from_fn(target, self.degree, self.modulus, |g| {
            for (slot, &x) in t.iter_mut().zip(g) {
                *slot = emb[x];
            }
            self.get(&t) as i64
        })
    }

    /// `(φ*c)(g₁,…,gₙ) = c(φg₁,…,φgₙ)`; `self` must live on the whole target
    /// group of `hom`.
    pub fn pullback(&self, hom: &Hom) -> Result<Cochain> {
        if hom.target() != self.domain.ambient() || !self.domain.is_full() {
            return Err(Error::NotHomomorphism("map does not land in the cochain's group".into()));
        }
        let hom = Hom::new(hom.source(), hom.target(), hom.images().to_vec())?;
        let src = Domain::full(hom.source());
        let img: Vec<usize> = src
            .members()
            .iter()
            .map(|x| self.domain.index_of(&hom.apply(x)).expect("image in group"))
            .collect();
        let mut t = vec![0usize; self.degree];
        Cochain::from_fn(&src, self.degree, self.modulus, |g| {
            for (slot, &x) in t.iter_mut().zip(g) {
                *slot = img[x];
            }
            self.get(&t) as i64
        })
    }

    /// Unknown layout for linear systems over this cochain space:
    /// the positions of tuples with no identity argument.
    pub fn free_positions(domain: &Domain, degree: usize) -> Result<Vec<usize>> {
        let size = domain.table_size(degree)?;
        Ok((0..size)
            .filter(|&i| domain.tuple_at(i, degree).iter().all(|&x| x != 0))
            .collect())
    }

    /// Coefficient matrix of `d` from degree `n` to `n+1` cochains, on free
    /// positions.
    pub fn coboundary_matrix(domain: &Arc<Domain>, degree: usize, modulus: u32) -> Result<(ModMatrix, Vec<usize>, Vec<usize>)> {
        let rows = Self::free_positions(domain, degree + 1)?;
        Self::coboundary_rows(domain, degree, modulus, rows)
    }

    /// The rows of the coboundary matrix at the given degree-`n+1` positions.
    fn coboundary_rows(
        domain: &Arc<Domain>,
        degree: usize,
        modulus: u32,
        rows: Vec<usize>,
    ) -> Result<(ModMatrix, Vec<usize>, Vec<usize>)> {
        let cols = Self::free_positions(domain, degree)?;
        let size = domain.table_size(degree)?;
        let mut col_of = vec![usize::MAX; size];
        for (j, &p) in cols.iter().enumerate() {
            col_of[p] = j;
        }
        let mut a = ModMatrix::zeros(rows.len(), cols.len(), modulus);
        let mut t = vec![0usize; degree];
        for (r, &p) in rows.iter().enumerate() {
            let g = domain.tuple_at(p, degree + 1);
            let mut push = |t: &[usize], sign: i64| {
                if t.iter().all(|&x| x != 0) {
                    a.add(r, col_of[domain.tuple_index(t)], sign);
                }
            };
            t.copy_from_slice(&g[1..]);
            push(&t, 1);
            for i in 0..degree {
                t[..i].copy_from_slice(&g[..i]);
                t[i] = domain.add(g[i], g[i + 1]);
                t[i + 1..].copy_from_slice(&g[i + 2..]);
                push(&t, if i % 2 == 0 { -1 } else { 1 });
            }
            push(&g[..degree], if degree.is_multiple_of(2) { -1 } else { 1 });
        }
        Ok((a, cols, rows))
    }

    /// A primitive `ψ` with `dψ = self`, if one exists. Among all primitives
    /// the lexicographically least table (over free positions) is returned.
    pub fn solve_coboundary(&self) -> Result<Option<Cochain>> {
        let Some((a, cols, b)) = self.primitive_system()? else { return Ok(None) };
        let sol = solve_mod(&a, &b);
        let Some(x) = sol.particular else { return Ok(None) };
        let mut ech = Echelon::uniform(self.modulus, cols.len());
        for k in &sol.kernel {
            ech.insert_dense(k);
        }
        self.primitive_from(&cols, &ech.reduce(&x))
    }

    /// Some primitive, by elimination on the augmented system.
    pub(crate) fn any_primitive(&self) -> Result<Option<Cochain>> {
        let Some((a, cols, b)) = self.primitive_system()? else { return Ok(None) };
        let mut ech = Echelon::uniform(self.modulus, cols.len() + 1);
        let mut row = vec![0u32; cols.len() + 1];
        for (r, &rhs) in b.iter().enumerate() {
            for (c, slot) in row[..cols.len()].iter_mut().enumerate() {
                *slot = a.get(r, c);
            }
            row[cols.len()] = rhs;
            ech.insert_dense(&row);
        }
        let Some(x) = ech.solve_augmented() else { return Ok(None) };
        self.primitive_from(&cols, &x)
    }

    /// Equations `dψ = self` over the free positions of `ψ`, or `None` when
    /// `self` is not closed. A closed cochain vanishing whenever its first
    /// argument is a generator vanishes everywhere, so only those rows are
    /// kept.
    fn primitive_system(&self) -> Result<Option<PrimitiveSystem>> {
        if self.degree == 0 {
            return Err(Error::Precondition("degree-0 cochains have no primitive".into()));
        }
        if !self.coboundary()?.is_zero() {
            return Ok(None);
        }
        let d = &self.domain;
        let gens: Vec<usize> = d
            .subgroup()
            .canonical_basis()
            .iter()
            .map(|x| d.index_of(x).expect("subgroup element"))
            .collect();
        let stride = d.table_size(self.degree - 1)?;
        let rows: Vec<usize> = Self::free_positions(d, self.degree)?
            .into_iter()
            .filter(|p| gens.contains(&(p / stride)))
            .collect();
        let (a, cols, rows) = Self::coboundary_rows(d, self.degree - 1, self.modulus, rows)?;
        let b = rows.iter().map(|&p| self.entries[p]).collect();
        Ok(Some((a, cols, b)))
    }

    fn primitive_from(&self, cols: &[usize], x: &[u32]) -> Result<Option<Cochain>> {
        let mut psi = Cochain::zero(&self.domain, self.degree - 1, self.modulus)?;
        for (j, &p) in cols.iter().enumerate() {
            psi.entries[p] = x[j];
        }
        if psi.coboundary()? != *self {
            return Ok(None);
        }
        Ok(Some(psi))
    }

    pub fn is_coboundary(&self) -> Result<bool> {
        Ok(self.any_primitive()?.is_some())
    }

    /// Values as `(ambient argument tuple, exponent)` for nonzero entries.
    pub fn nonzero_entries(&self) -> Vec<(Vec<GroupElement>, u32)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| {
                let args = self
                    .domain
                    .tuple_at(i, self.degree)
                    .into_iter()
                    .map(|x| self.domain.member(x).clone())
                    .collect();
                (args, e)
            })
            .collect()
    }

    /// Same values on a copy of this cochain over a structurally equal domain.
    pub fn with_domain(&self, domain: &Arc<Domain>) -> Result<Cochain> {
        if **domain != *self.domain {
            return Err(Error::Precondition("domains differ".into()));
        }
        Ok(Cochain {
            domain: domain.clone(),
            ..self.clone()
        })
    }
}

/// Normalized cochain `Gⁿ → Map(X, ℤ/N)`, where G acts on functions by
/// `(g·m)(x) = m(g⁻¹·x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSetCochain {
    domain: Arc<Domain>,
    gset: GSet,
    degree: usize,
    modulus: u32,
    entries: Vec<u32>,
}

impl GSetCochain {
    pub fn zero(gset: &GSet, degree: usize, modulus: u32) -> Result<Self> {
        check_modulus(modulus)?;
        let domain = Domain::full(gset.group());
        let size = domain.table_size(degree)?;
        let entries = size as u128 * gset.len() as u128;
        if entries > MAX_TABLE_ENTRIES {
            return Err(Error::TableTooLarge { entries });
        }
        Ok(GSetCochain {
            domain,
            gset: gset.clone(),
            degree,
            modulus,
            entries: vec![0; size * gset.len()],
        })
    }

    /// Builds from values on non-identity tuples and points.
    pub fn from_fn<F>(gset: &GSet, degree: usize, modulus: u32, mut f: F) -> Result<Self>
    where
        F: FnMut(&[usize], usize) -> i64,
    {
        let mut c = Self::zero(gset, degree, modulus)?;
        let n = c.domain.len();
        let pts = gset.len();
        let mut t = vec![0usize; degree];
        let mut idx = 0;
        loop {
            if t.iter().all(|&x| x != 0) {
                for x in 0..pts {
                    c.entries[idx * pts + x] = reduce(f(&t, x) as i128, modulus);
                }
            }
            idx += 1;
            if !next_tuple(&mut t, n) {
                break;
            }
        }
        Ok(c)
    }

    /// Constant-coefficient copy of an ordinary cochain on the whole group.
    pub fn constant(c: &Cochain, gset: &GSet) -> Result<Self> {
        if !c.domain.is_full() || c.group() != gset.group() {
            return Err(Error::Precondition("cochain and G-set are over different groups".into()));
        }
        Self::from_fn(gset, c.degree, c.modulus, |t, _| c.get(t) as i64)
    }

    pub fn from_entries(gset: &GSet, degree: usize, modulus: u32, entries: Vec<u32>) -> Result<Self> {
        let mut c = Self::zero(gset, degree, modulus)?;
        if entries.len() != c.entries.len() {
            return Err(Error::Parse(format!(
                "expected {} entries, got {}",
                c.entries.len(),
                entries.len()
            )));
        }
        let pts = gset.len();
        for (i, e) in entries.into_iter().enumerate() {
            let e = e % modulus;
            if e != 0 && c.domain.tuple_at(i / pts, degree).contains(&0) {
                return Err(Error::NotNormalized(format!("entry {i}")));
            }
            c.entries[i] = e;
        }
        Ok(c)
    }

    pub fn domain(&self) -> &Arc<Domain> {
        &self.domain
    }

    pub fn group(&self) -> &FinAbGroup {
        self.gset.group()
    }

    pub fn gset(&self) -> &GSet {
        &self.gset
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, t: &[usize], x: usize) -> u32 {
        self.entries[self.domain.tuple_index(t) * self.gset.len() + x]
    }

    pub fn set(&mut self, t: &[usize], x: usize, value: i64) -> Result<()> {
        if t.contains(&0) {
            return Err(Error::NotNormalized(format!("{t:?}")));
        }
        if x >= self.gset.len() {
            return Err(Error::InvalidGSet(format!("point {x} out of range")));
        }
        let i = self.domain.tuple_index(t) * self.gset.len() + x;
        self.entries[i] = reduce(value as i128, self.modulus);
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Bar differential with the permutation action on the first face.
    pub fn coboundary(&self) -> Result<GSetCochain> {
        let d = &self.domain;
        let k = d.len();
        let n = self.degree;
        let m = self.modulus as u64;
        let pts = self.gset.len();
        let mut out = GSetCochain::zero(&self.gset, n + 1, self.modulus)?;
        let src = &self.entries;
        let block = k.pow(n as u32) * pts;
        let mut acc = vec![0u64; out.entries.len()];
        // first face: g0 acts on the coefficient of the remaining arguments
        for (g0, out) in acc.chunks_mut(block).enumerate() {
            let inv = d.neg(g0);
            for (o, inp) in out.chunks_mut(pts).zip(src.chunks(pts)) {
                for (x, slot) in o.iter_mut().enumerate() {
                    *slot = inp[self.gset.act_index(inv, x)] as u64;
                }
            }
        }
        add_inner_faces(d, n, pts, m, src, &mut acc);
        for (slot, s) in out.entries.iter_mut().zip(acc) {
            *slot = (s % m) as u32;
        }
        Ok(out)
    }

    /// First `(tuple, point)` where `self` and `other` differ.
    pub fn first_difference(&self, other: &GSetCochain) -> Option<(Vec<GroupElement>, usize)> {
        let pts = self.gset.len();
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|i| {
                let args = self
                    .domain
                    .tuple_at(i / pts, self.degree)
                    .into_iter()
                    .map(|x| self.domain.member(x).clone())
                    .collect();
                (args, i % pts)
            })
    }

    /// Some `ξ` with `dξ = self`, if one exists.
    pub fn solve_coboundary(&self) -> Result<Option<GSetCochain>> {
        match self.degree {
            0 => Err(Error::Precondition("degree-0 cochains have no primitive".into())),
            3 => self.solve_on_stabilisers(),
            _ => self.solve_linear(),
        }
    }

    /// Degree-3 primitive, one orbit `G·x0` at a time: solve `dψ = self` on
    /// the stabiliser `H` at `x0`, then move `ψ` back to the orbit along the
    /// retraction `ρ(g) = g − s(g·x0)` of a section `s`, correcting by the
    /// prism homotopy between `ρ` and the identity.
    fn solve_on_stabilisers(&self) -> Result<Option<GSetCochain>> {
        if !self.coboundary()?.is_zero() {
            return Ok(None);
        }
        let d = &self.domain;
        let k = d.len();
        let pts = self.gset.len();
        let act = |g: usize, x: usize| self.gset.act_index(g, x);
        let sub = |a: usize, b: usize| d.add(a, d.neg(b));
        let mut xi = vec![0i64; k * k * pts];
        let mut done = vec![false; pts];
        for x0 in 0..pts {
            if done[x0] {
                continue;
            }
            let mut sec = vec![usize::MAX; pts];
            for g in 0..k {
                let x = act(g, x0);
                if sec[x] == usize::MAX {
                    sec[x] = g;
                }
            }
            let hd = Domain::of_subgroup(&crate::abgroup::stabiliser(&self.gset, x0)?);
            let emb: Vec<usize> = hd.members().iter().map(|h| d.index_of(h).expect("subgroup element")).collect();
            let mut local = vec![usize::MAX; k];
            for (i, &e) in emb.iter().enumerate() {
                local[e] = i;
            }
            let base = Cochain::from_fn(&hd, 3, self.modulus, |t| self.get(&[emb[t[0]], emb[t[1]], emb[t[2]]], x0) as i64)?;
            let Some(psi) = base.any_primitive()? else { return Ok(None) };
            let rho = |g: usize| sub(g, sec[act(g, x0)]);
            // homogeneous form of the target, read at x0
            let a = |z: [usize; 4]| {
                self.get(&[sub(z[1], z[0]), sub(z[2], z[1]), sub(z[3], z[2])], act(d.neg(z[0]), x0)) as i64
            };
            let phi = |y: [usize; 3]| {
                let r = y.map(rho);
                psi.get(&[local[sub(r[1], r[0])], local[sub(r[2], r[1])]]) as i64 + a([r[0], y[0], y[1], y[2]])
                    - a([r[0], r[1], y[1], y[2]])
                    + a([r[0], r[1], r[2], y[2]])
            };
            for x in (0..pts).filter(|&x| sec[x] != usize::MAX) {
                done[x] = true;
                let s = sec[x];
                for g1 in 0..k {
                    for g2 in 0..k {
                        xi[(g1 * k + g2) * pts + x] = phi([d.neg(s), sub(g1, s), sub(d.add(g1, g2), s)]);
                    }
                }
            }
        }
        // ξ(0,g) and ξ(g,0) equal c = ξ(0,0) and g·c; subtract d of the constant c
        let c: Vec<i64> = xi[..pts].to_vec();
        let m = self.modulus as i64;
        let entries = (0..xi.len())
            .map(|i| {
                let (g1, x) = (i / pts / k, i % pts);
                (xi[i] - c[act(d.neg(g1), x)]).rem_euclid(m) as u32
            })
            .collect();
        let out = GSetCochain::from_entries(&self.gset, 2, self.modulus, entries)?;
        if out.coboundary()? != *self {
            return Err(Error::Precondition("transported primitive does not solve the target".into()));
        }
        Ok(Some(out))
    }

    /// Dense elimination over all free positions and points.
    fn solve_linear(&self) -> Result<Option<GSetCochain>> {
        let d = &self.domain;
        let deg = self.degree - 1;
        let pts = self.gset.len();
        let cols = Cochain::free_positions(d, deg)?;
        let rows = Cochain::free_positions(d, deg + 1)?;
        let mut col_of = vec![usize::MAX; d.table_size(deg)?];
        for (j, &p) in cols.iter().enumerate() {
            col_of[p] = j;
        }
        let unknowns = cols.len() * pts;
        let mut ech = Echelon::uniform(self.modulus, unknowns + 1);
        let m = self.modulus as i64;
        let mut t = vec![0usize; deg];
        for &p in &rows {
            let g = d.tuple_at(p, deg + 1);
            for x in 0..pts {
                let mut row: Vec<(usize, i64)> = Vec::with_capacity(deg + 3);
                let mut push = |t: &[usize], y: usize, sign: i64| {
                    if t.iter().all(|&v| v != 0) {
                        row.push((col_of[d.tuple_index(t)] * pts + y, sign));
                    }
                };
                t.copy_from_slice(&g[1..]);
                push(&t, self.gset.act_index(d.neg(g[0]), x), 1);
                for i in 0..deg {
                    t[..i].copy_from_slice(&g[..i]);
                    t[i] = d.add(g[i], g[i + 1]);
                    t[i + 1..].copy_from_slice(&g[i + 2..]);
                    push(&t, x, if i % 2 == 0 { -1 } else { 1 });
                }
                push(&g[..deg], x, if deg.is_multiple_of(2) { -1 } else { 1 });
                row.push((unknowns, self.entries[p * pts + x] as i64));
                row.sort_unstable();
                let mut sparse: Vec<(u32, u32)> = Vec::with_capacity(row.len());
                for (c, v) in row {
                    match sparse.last_mut() {
                        Some(last) if last.0 as usize == c => {
                            last.1 = (last.1 as i64 + v).rem_euclid(m) as u32;
                        }
                        _ => sparse.push((c as u32, v.rem_euclid(m) as u32)),
                    }
                }
                sparse.retain(|&(_, v)| v != 0);
                ech.insert(sparse);
            }
        }
        let Some(x) = ech.solve_augmented() else { return Ok(None) };
        let mut xi = GSetCochain::zero(&self.gset, deg, self.modulus)?;
        for (j, &p) in cols.iter().enumerate() {
            for y in 0..pts {
                xi.entries[p * pts + y] = x[j * pts + y];
            }
        }
        if xi.coboundary()? != *self {
            return Ok(None);
        }
        Ok(Some(xi))
    }

    /// `ξ̃(h₁,…,hₙ) = ξ(h₁,…,hₙ)(x₀)` on the stabiliser of `x₀`. On a
    /// transitive G-set this is the Shapiro isomorphism; in general it is
    /// still a cochain map onto the orbit of `x₀`.
    pub fn shapiro_restrict(&self, base: usize) -> Result<Cochain> {
        let h = crate::abgroup::stabiliser(&self.gset, base)?;
        let target = Domain::of_subgroup(&h);
        let emb: Vec<usize> = target
            .members()
            .iter()
            .map(|m| self.domain.index_of(m).expect("subgroup element"))
            .collect();
        let mut t = vec![0usize; self.degree];
        Cochain::from_fn(&target, self.degree, self.modulus, |g| {
            for (slot, &x) in t.iter_mut().zip(g) {
                *slot = emb[x];
            }
            self.get(&t, base) as i64
        })
    }

    /// Reads off the cochain at one point as an ordinary cochain on G.
    pub fn at_point(&self, x: usize) -> Result<Cochain> {
        Cochain::from_fn(&self.domain, self.degree, self.modulus, |t| self.get(t, x) as i64)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::abgroup::{coset_space, groups_up_to_order};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub fn random_cochain(d: &Arc<Domain>, degree: usize, n: u32, rng: &mut impl Rng) -> Cochain {
        Cochain::from_fn(d, degree, n, |_| rng.random_range(0..n) as i64).unwrap()
    }

    /// The standard 3-cocycle on ℤ/n: `s·a·⌊(b+c)/n⌋`.
    pub fn cyclic_cocycle(n: u32, s: u32, modulus: u32) -> Cochain {
        let g = FinAbGroup::cyclic(n).unwrap();
        let scale = (modulus / n) as i64;
        Cochain::from_elements(&Domain::full(&g), 3, modulus, |x| {
            let (a, b, c) = (x[0][0] as i64, x[1][0] as i64, x[2][0] as i64);
            scale * s as i64 * a * ((b + c) / n as i64)
        })
        .unwrap()
    }

    #[test]
    fn coboundary_of_one_cochain_on_z2() {
        let g = FinAbGroup::cyclic(2).unwrap();
        for n in [2u32, 4, 6] {
            for s in 0..n {
                let mut c = Cochain::zero_on(&g, 1, n).unwrap();
                c.set(&[1], s as i64).unwrap();
                let dc = c.coboundary().unwrap();
                assert_eq!(dc.get(&[1, 1]), (2 * s) % n);
            }
        }
        assert!(Cochain::zero_on(&g, 2, 4).unwrap().coboundary().unwrap().is_zero());
    }

    #[test]
    fn d_squared_vanishes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for g in groups_up_to_order(8) {
            let d = Domain::full(&g);
            for deg in 0..=3 {
                let c = random_cochain(&d, deg, 12, &mut rng);
                assert!(c.coboundary().unwrap().coboundary().unwrap().is_zero(), "{g} {deg}");
            }
        }
    }

    #[test]
    fn cyclic_cocycles_are_cocycles() {
        for n in 2..=8u32 {
            for s in 0..n {
                assert!(cyclic_cocycle(n, s, n).is_cocycle().unwrap(), "n={n} s={s}");
            }
        }
        let g = FinAbGroup::cyclic(2).unwrap();
        for n in [3u32, 5, 7] {
            let mut c = Cochain::zero_on(&g, 3, n).unwrap();
            c.set(&[1, 1, 1], 1).unwrap();
            assert!(!c.is_cocycle().unwrap());
        }
    }

    #[test]
    fn primitives_on_z2() {
        let g = FinAbGroup::cyclic(2).unwrap();
        let mut phi = Cochain::zero_on(&g, 2, 4).unwrap();
        phi.set(&[1, 1], 1).unwrap();
        assert!(phi.solve_coboundary().unwrap().is_none());
        phi.set(&[1, 1], 2).unwrap();
        let psi = phi.solve_coboundary().unwrap().unwrap();
        assert_eq!(psi.get(&[1]), 1);
        let zero = Cochain::zero_on(&g, 2, 4).unwrap();
        assert!(zero.solve_coboundary().unwrap().unwrap().is_zero());
    }

    #[test]
    fn primitive_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for f in [&[4u32][..], &[2, 2], &[6], &[2, 4]] {
            let g = FinAbGroup::new(f.to_vec()).unwrap();
            let d = Domain::full(&g);
            for deg in 1..=2 {
                let psi = random_cochain(&d, deg, 8, &mut rng);
                let target = psi.coboundary().unwrap();
                let found = target.solve_coboundary().unwrap().unwrap();
                assert_eq!(found.coboundary().unwrap(), target);
            }
        }
    }

    #[test]
    fn elimination_and_smith_agree_on_exactness() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for f in [&[4u32][..], &[2, 2], &[6], &[2, 4], &[3, 3], &[8]] {
            let g = FinAbGroup::new(f.to_vec()).unwrap();
            let d = Domain::full(&g);
            for n in [4u32, 6, 8, 12] {
                let mut targets = vec![random_cochain(&d, 2, n, &mut rng).coboundary().unwrap()];
                if f.len() == 1 {
                    targets.extend((1..f[0]).map(|s| cyclic_cocycle(f[0], s, n * f[0])));
                }
                targets.push(random_cochain(&d, 3, n, &mut rng));
                for t in &targets {
                    let canonical = t.solve_coboundary().unwrap();
                    let any = t.any_primitive().unwrap();
                    assert_eq!(canonical.is_some(), any.is_some(), "{g}, N={}", t.modulus());
                }
            }
        }
    }

    #[test]
    fn lex_least_primitive_is_canonical() {
        // every primitive of the same target yields the same answer
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        let d = Domain::full(&g);
        let psi = random_cochain(&d, 2, 4, &mut rng);
        let target = psi.coboundary().unwrap();
        let a = target.solve_coboundary().unwrap().unwrap();
        let shifted = psi.add(&random_cochain(&d, 1, 4, &mut rng).coboundary().unwrap()).unwrap();
        let b = shifted.coboundary().unwrap().solve_coboundary().unwrap().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn restriction_and_pullback_are_chain_maps() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for g in groups_up_to_order(16) {
            let d = Domain::full(&g);
            let subs = crate::abgroup::enumerate_subgroups(&g, 64).unwrap();
            for deg in 1..=2 {
                let c = random_cochain(&d, deg, 8, &mut rng);
                for h in &subs {
                    let lhs = c.coboundary().unwrap().restrict(h).unwrap();
                    let rhs = c.restrict(h).unwrap().coboundary().unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
        let a = cyclic_cocycle(4, 1, 4);
        let g = a.group().clone();
        let h = Subgroup::generated(&g, &[vec![2]]).unwrap();
        let r = a.restrict(&h).unwrap();
        assert!(r.is_cocycle().unwrap());
        let trivial = a.restrict(&Subgroup::trivial(&g)).unwrap();
        assert!(trivial.is_zero());
    }

    #[test]
    fn pullbacks() {
        let a = cyclic_cocycle(4, 1, 4);
        let g = a.group().clone();
        assert_eq!(a.pullback(&Hom::identity(&g)).unwrap(), a);
        let z2 = FinAbGroup::cyclic(2).unwrap();
        assert!(a.pullback(&Hom::zero(&z2, &g)).unwrap().is_zero());
        let inc = Hom::new(&z2, &g, vec![vec![2]]).unwrap();
        assert!(a.pullback(&inc).unwrap().is_cocycle().unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for src in groups_up_to_order(8) {
            for tgt in groups_up_to_order(8) {
                let images: Vec<GroupElement> = src
                    .factors()
                    .iter()
                    .map(|&n| {
                        let cands: Vec<_> = tgt
                            .elements()
                            .into_iter()
                            .filter(|y| n % tgt.element_order(y) == 0)
                            .collect();
                        cands[rng.random_range(0..cands.len())].clone()
                    })
                    .collect();
                let hom = Hom::new(&src, &tgt, images).unwrap();
                let c = random_cochain(&Domain::full(&tgt), 2, 8, &mut rng);
                let lhs = c.coboundary().unwrap().pullback(&hom).unwrap();
                let rhs = c.pullback(&hom).unwrap().coboundary().unwrap();
                assert_eq!(lhs, rhs);
                let z = c.coboundary().unwrap();
                assert!(z.pullback(&hom).unwrap().is_cocycle().unwrap());
            }
        }
    }

    #[test]
    fn gset_coboundary_basics() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for f in [&[2u32][..], &[4], &[2, 2], &[6]] {
            let g = FinAbGroup::new(f.to_vec()).unwrap();
            let d = Domain::full(&g);
            let pt = GSet::point(&g);
            for deg in 0..=2 {
                let c = random_cochain(&d, deg, 6, &mut rng);
                let lifted = GSetCochain::constant(&c, &pt).unwrap();
                assert_eq!(lifted.coboundary().unwrap().at_point(0).unwrap(), c.coboundary().unwrap());
            }
            for h in crate::abgroup::enumerate_subgroups(&g, 64).unwrap() {
                let (x, _) = coset_space(&g, &h).unwrap();
                for deg in 0..=2 {
                    let xi = GSetCochain::from_fn(&x, deg, 6, |_, _| rng.random_range(0..6)).unwrap();
                    assert!(xi.coboundary().unwrap().coboundary().unwrap().is_zero());
                }
            }
            // constant coefficients on the regular G-set commute with d
            let (reg, _) = coset_space(&g, &Subgroup::trivial(&g)).unwrap();
            let c = random_cochain(&d, 2, 6, &mut rng);
            let lhs = GSetCochain::constant(&c, &reg).unwrap().coboundary().unwrap();
            let rhs = GSetCochain::constant(&c.coboundary().unwrap(), &reg).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    fn disjoint_union(a: &GSet, b: &GSet) -> GSet {
        let gens = a
            .generator_actions()
            .iter()
            .zip(b.generator_actions())
            .map(|(p, q)| p.iter().copied().chain(q.iter().map(|&y| y + a.len() as u32)).collect())
            .collect();
        GSet::new(a.group(), a.len() + b.len(), gens).unwrap()
    }

    #[test]
    fn stabiliser_solver_matches_elimination() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for f in [&[4u32][..], &[2, 2], &[6], &[2, 4], &[3, 3]] {
            let g = FinAbGroup::new(f.to_vec()).unwrap();
            let n = 2 * g.exponent();
            let d = Domain::full(&g);
            let subs = crate::abgroup::enumerate_subgroups(&g, 64).unwrap();
            let mut sets: Vec<GSet> = subs.iter().map(|h| coset_space(&g, h).unwrap().0).collect();
            sets.push(disjoint_union(&sets[0], &sets[sets.len() - 1]));
            for x in &sets {
                let mut targets: Vec<GSetCochain> = (1..g.exponent())
                    .filter(|_| f.len() == 1)
                    .map(|s| GSetCochain::constant(&cyclic_cocycle(f[0], s, n), x).unwrap())
                    .collect();
                let eta = GSetCochain::from_fn(x, 2, n, |_, _| rng.random_range(0..n) as i64).unwrap();
                targets.push(eta.coboundary().unwrap());
                targets.push(GSetCochain::from_fn(x, 3, n, |_, _| rng.random_range(0..n) as i64).unwrap());
                let alpha = random_cochain(&d, 3, n, &mut rng);
                targets.push(GSetCochain::constant(&alpha, x).unwrap());
                for t in &targets {
                    let fast = t.solve_on_stabilisers().unwrap();
                    let slow = t.solve_linear().unwrap();
                    assert_eq!(fast.is_some(), slow.is_some(), "{g}, {} points", x.len());
                    if let Some(xi) = fast {
                        assert_eq!(&xi.coboundary().unwrap(), t);
                    }
                }
            }
        }
    }

    #[test]
    fn shapiro_on_z4() {
        let g = FinAbGroup::cyclic(4).unwrap();
        let h = Subgroup::generated(&g, &[vec![2]]).unwrap();
        let (x, _) = coset_space(&g, &h).unwrap();
        // odd s restricts to the nontrivial class on {0,2}
        let odd = cyclic_cocycle(4, 1, 8);
        let target = GSetCochain::constant(&odd, &x).unwrap();
        assert!(target.solve_coboundary().unwrap().is_none());
        assert!(!odd.restrict(&h).unwrap().is_coboundary().unwrap());
        let a = cyclic_cocycle(4, 2, 8);
        let target = GSetCochain::constant(&a, &x).unwrap();
        let xi = target.solve_coboundary().unwrap().expect("α restricts to a coboundary on a coset space");
        assert_eq!(xi.coboundary().unwrap(), target);
        let tilde = xi.shapiro_restrict(0).unwrap();
        assert_eq!(tilde.coboundary().unwrap(), a.restrict(&h).unwrap());
        // one point: ξ̃ = ξ
        let pt = GSet::point(&g);
        let xi = GSetCochain::from_fn(&pt, 2, 8, |t, _| (t[0] * 3 + t[1]) as i64).unwrap();
        assert_eq!(xi.shapiro_restrict(0).unwrap(), xi.at_point(0).unwrap());
        let zero = GSetCochain::zero(&x, 2, 8).unwrap();
        assert!(zero.shapiro_restrict(0).unwrap().is_zero());
    }

    #[test]
    fn normalization_enforced() {
        let g = FinAbGroup::cyclic(3).unwrap();
        let d = Domain::full(&g);
        let mut entries = vec![0u32; 9];
        entries[1] = 1;
        assert!(matches!(Cochain::from_entries(&d, 2, 3, entries), Err(Error::NotNormalized(_))));
        let mut c = Cochain::zero(&d, 2, 3).unwrap();
        assert!(c.set(&[0, 1], 1).is_err());
        let other = Cochain::zero(&d, 2, 4).unwrap();
        assert!(matches!(c.add(&other), Err(Error::ModulusMismatch { .. })));
        assert_eq!(c.lift(6).unwrap().modulus(), 6);
        assert!(c.lift(4).is_err());
    }
}

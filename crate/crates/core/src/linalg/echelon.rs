//! Sparse echelon (Howell) form of a submodule of ⊕ ℤ/mⱼ.
//!
//! Rows are inserted one at a time. Each pivot row is normalized so that its
//! leading entry divides the column modulus, and every pivot is saturated:
//! `(m/g)·pivot` is reinserted, so the rows below a pivot span everything in
//! the module whose leading coordinates vanish. That property is what makes
//! membership tests, canonical coset representatives and back substitution
//! sound over rings that are not fields.

use crate::arith::{ext_gcd, gcd, inv_mod};
use num_bigint::BigUint;

/// Sparse row: `(column, value)` pairs, columns strictly increasing, values
/// reduced and nonzero.
pub type SparseRow = Vec<(u32, u32)>;

#[derive(Debug, Clone)]
pub struct Echelon {
    moduli: Vec<u32>,
    pivots: Vec<Option<SparseRow>>,
}

impl Echelon {
    pub fn new(moduli: Vec<u32>) -> Self {
        let n = moduli.len();
        Echelon {
            moduli,
            pivots: vec![None; n],
        }
    }

    pub fn uniform(modulus: u32, ncols: usize) -> Self {
        Self::new(vec![modulus; ncols])
    }

    pub fn ncols(&self) -> usize {
        self.moduli.len()
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    /// Sparse row from a dense vector, reducing entries.
    pub fn sparse(&self, dense: &[u32]) -> SparseRow {
        dense
            .iter()
            .enumerate()
            .filter_map(|(j, &v)| {
                let v = v % self.moduli[j];
                (v != 0).then_some((j as u32, v))
            })
            .collect()
    }

    /// `a·x + b·y`, reduced column-wise.
    fn combine(&self, a: i128, x: &[(u32, u32)], b: i128, y: &[(u32, u32)]) -> SparseRow {
        let mut out = Vec::with_capacity(x.len().max(y.len()));
        let (mut i, mut k) = (0, 0);
        while i < x.len() || k < y.len() {
            let (col, val) = match (x.get(i), y.get(k)) {
                (Some(&(cx, vx)), Some(&(cy, vy))) if cx == cy => {
                    i += 1;
                    k += 1;
                    (cx, a * vx as i128 + b * vy as i128)
                }
                (Some(&(cx, vx)), Some(&(cy, _))) if cx < cy => {
                    i += 1;
                    (cx, a * vx as i128)
                }
                (Some(&(cx, vx)), None) => {
                    i += 1;
                    (cx, a * vx as i128)
                }
                (_, Some(&(cy, vy))) => {
                    k += 1;
                    (cy, b * vy as i128)
                }
                (None, None) => unreachable!(),
            };
            let m = self.moduli[col as usize] as i128;
            let v = val.rem_euclid(m);
            if v != 0 {
                out.push((col, v as u32));
            }
        }
        out
    }

    fn scale(&self, a: i128, x: &[(u32, u32)]) -> SparseRow {
        self.combine(a, x, 0, &[])
    }

    /// Inserts a row into the module.
    pub fn insert(&mut self, row: SparseRow) {
        let mut work = vec![row];
        while let Some(mut r) = work.pop() {
            while let Some(&(j, v)) = r.first() {
                let ju = j as usize;
                let m = self.moduli[ju];
                match self.pivots[ju].take() {
                    None => {
                        let g = gcd(v as u64, m as u64) as u32;
                        let pivot = if v == g {
                            r
                        } else {
                            let w = v / g;
                            let mg = (m / g) as u64;
                            let k = inv_mod(w as u64 % mg, mg).expect("unit after dividing by gcd") as i128;
                            let extra = self.scale(1 - w as i128 * k, &r);
                            work.push(extra);
                            self.scale(k, &r)
                        };
                        debug_assert_eq!(pivot[0], (j, g));
                        work.push(self.scale((m / g) as i128, &pivot));
                        self.pivots[ju] = Some(pivot);
                        break;
                    }
                    Some(p) => {
                        let pv = p[0].1;
                        if v % pv == 0 {
                            r = self.combine(1, &r, -((v / pv) as i128), &p);
                            self.pivots[ju] = Some(p);
                        } else {
                            let (g, s, t) = ext_gcd(pv as i128, v as i128);
                            let new_pivot = self.combine(s, &p, t, &r);
                            let other = self.combine(-(v as i128 / g), &p, pv as i128 / g, &r);
                            // slot stays empty; the combined row re-enters as the new pivot
                            work.push(new_pivot);
                            r = other;
                        }
                    }
                }
            }
        }
    }

    pub fn insert_dense(&mut self, dense: &[u32]) {
        let row = self.sparse(dense);
        self.insert(row);
    }

    pub fn pivot(&self, col: usize) -> Option<&SparseRow> {
        self.pivots[col].as_ref()
    }

    /// Leading value of the pivot in `col`, or the column modulus when the
    /// column has no pivot.
    pub fn pivot_value(&self, col: usize) -> u32 {
        self.pivots[col].as_ref().map_or(self.moduli[col], |p| p[0].1)
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots
            .iter()
            .enumerate()
            .filter_map(|(j, p)| p.as_ref().map(|_| j))
    }

    /// Reduces a dense vector to its canonical representative modulo the
    /// module: the lexicographically least vector (entries in `[0, mⱼ)`) in
    /// the same coset.
    pub fn reduce(&self, x: &[u32]) -> Vec<u32> {
        self.reduce_with_coeffs(x).0
    }

    /// As [`Echelon::reduce`], also returning the multiple of each pivot row
    /// that was subtracted, as `(pivot column, coefficient)`.
    pub fn reduce_with_coeffs(&self, x: &[u32]) -> (Vec<u32>, Vec<(usize, u32)>) {
        let mut out: Vec<u32> = x.iter().zip(&self.moduli).map(|(&v, &m)| v % m).collect();
        let mut coeffs = Vec::new();
        for j in 0..out.len() {
            let Some(p) = &self.pivots[j] else { continue };
            let g = p[0].1;
            let q = out[j] / g;
            if q == 0 {
                continue;
            }
            for &(c, v) in p {
                let m = self.moduli[c as usize] as u64;
                let cu = c as usize;
                out[cu] = ((out[cu] as u64 + m - (q as u64 * v as u64) % m) % m) as u32;
            }
            coeffs.push((j, q));
        }
        (out, coeffs)
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        self.reduce(x).iter().all(|&v| v == 0)
    }

    /// Number of elements of the submodule.
    pub fn order(&self) -> BigUint {
        let mut o = BigUint::from(1u32);
        for j in 0..self.ncols() {
            o *= self.moduli[j] / self.pivot_value(j);
        }
        o
    }

    pub fn order_u64(&self) -> Option<u64> {
        let mut o: u64 = 1;
        for j in 0..self.ncols() {
            o = o.checked_mul((self.moduli[j] / self.pivot_value(j)) as u64)?;
        }
        Some(o)
    }

    /// Fully reduced pivot rows (each entry above a later pivot is reduced
    /// modulo that pivot). This set is unique for a given submodule.
    pub fn canonical_rows(&self) -> Vec<Vec<u32>> {
        let cols: Vec<usize> = self.pivot_columns().collect();
        let mut rows = Vec::with_capacity(cols.len());
        for &j in &cols {
            let mut dense = vec![0u32; self.ncols()];
            for &(c, v) in self.pivots[j].as_ref().unwrap() {
                dense[c as usize] = v;
            }
            for &l in cols.iter().filter(|&&l| l > j) {
                let p = self.pivots[l].as_ref().unwrap();
                let q = dense[l] / p[0].1;
                if q == 0 {
                    continue;
                }
                for &(c, v) in p {
                    let m = self.moduli[c as usize] as u64;
                    let cu = c as usize;
                    dense[cu] = ((dense[cu] as u64 + m - (q as u64 * v as u64) % m) % m) as u32;
                }
            }
            rows.push(dense);
        }
        rows
    }

    /// Back substitution for an augmented system whose last column holds the
    /// right-hand side (rows `(a | b)` mean `a·x = b`). Returns a solution
    /// with free variables set to zero, or `None` when inconsistent.
    pub fn solve_augmented(&self) -> Option<Vec<u32>> {
        let rhs = self.ncols() - 1;
        if self.pivots[rhs].is_some() {
            return None;
        }
        let mut x = vec![0u32; rhs];
        for j in (0..rhs).rev() {
            let Some(p) = &self.pivots[j] else { continue };
            let m = self.moduli[j] as i128;
            let g = p[0].1 as i128;
            let mut r: i128 = 0;
            for &(c, v) in &p[1..] {
                if c as usize == rhs {
                    r += v as i128;
                } else {
                    r -= v as i128 * x[c as usize] as i128;
                }
            }
            let r = r.rem_euclid(m);
            if r % g != 0 {
                return None;
            }
            x[j] = (r / g) as u32;
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Brute-force span of a set of vectors in (ℤ/m)^k.
    fn closure(gens: &[Vec<u32>], moduli: &[u32]) -> BTreeSet<Vec<u32>> {
        let zero = vec![0u32; moduli.len()];
        let mut seen = BTreeSet::from([zero.clone()]);
        let mut frontier = vec![zero];
        while let Some(v) = frontier.pop() {
            for g in gens {
                let w: Vec<u32> = v
                    .iter()
                    .zip(g)
                    .zip(moduli)
                    .map(|((a, b), m)| (a + b) % m)
                    .collect();
                if seen.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        seen
    }

    fn all_vectors(moduli: &[u32]) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for &m in moduli {
            out = out
                .into_iter()
                .flat_map(|v: Vec<u32>| {
                    (0..m).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn membership_and_order_match_closure() {
        let cases: Vec<(Vec<u32>, Vec<Vec<u32>>)> = vec![
            (vec![4, 4], vec![vec![2, 2]]),
            (vec![8, 8, 8], vec![vec![2, 4, 6], vec![4, 2, 0]]),
            (vec![12, 12], vec![vec![3, 4], vec![8, 6]]),
            (vec![2, 4, 6], vec![vec![1, 2, 3], vec![0, 2, 2]]),
            (vec![6, 6, 6], vec![vec![2, 3, 0], vec![0, 2, 3], vec![3, 0, 2]]),
        ];
        for (moduli, gens) in cases {
            let mut e = Echelon::new(moduli.clone());
            for g in &gens {
                e.insert_dense(g);
            }
            let span = closure(&gens, &moduli);
            assert_eq!(e.order_u64().unwrap() as usize, span.len());
            let mut reps = BTreeSet::new();
            for v in all_vectors(&moduli) {
                assert_eq!(e.contains(&v), span.contains(&v), "{v:?}");
                let r = e.reduce(&v);
                // the representative is the least element of the coset
                let least = span
                    .iter()
                    .map(|s| {
                        v.iter()
                            .zip(s)
                            .zip(&moduli)
                            .map(|((a, b), m)| (a + b) % m)
                            .collect::<Vec<_>>()
                    })
                    .min()
                    .unwrap();
                assert_eq!(r, least);
                reps.insert(r);
            }
            let total: usize = moduli.iter().map(|&m| m as usize).product();
            assert_eq!(reps.len(), total / span.len());
        }
    }

    #[test]
    fn canonical_rows_independent_of_generators() {
        let build = |gens: &[[u32; 2]]| {
            let mut e = Echelon::new(vec![8, 8]);
            for g in gens {
                e.insert_dense(g);
            }
            e.canonical_rows()
        };
        // ⟨(2,4),(4,0)⟩ = ⟨(6,4)⟩, while ⟨(6,4),(2,0)⟩ is larger
        let a = build(&[[2, 4], [4, 0]]);
        let c = build(&[[6, 4]]);
        let b = build(&[[6, 4], [2, 0]]);
        assert_eq!(a, c);
        assert_ne!(a, b);
    }

    #[test]
    fn augmented_solve_matches_brute_force() {
        // a·x = b over ℤ/6 and ℤ/8, all small systems with 2 unknowns.
        for n in [6u32, 8] {
            let rows_list = [
                vec![vec![2, 3], vec![4, 0]],
                vec![vec![2, 4]],
                vec![vec![3, 3], vec![0, 2]],
            ];
            for rows in rows_list {
                for b0 in 0..n {
                    for b1 in 0..n {
                        let b = [b0, b1];
                        let mut e = Echelon::uniform(n, 3);
                        for (i, r) in rows.iter().enumerate() {
                            e.insert_dense(&[r[0], r[1], b[i]]);
                        }
                        let brute = (0..n).flat_map(|x| (0..n).map(move |y| [x, y])).find(|xy| {
                            rows.iter().enumerate().all(|(i, r)| (r[0] * xy[0] + r[1] * xy[1]) % n == b[i])
                        });
                        match e.solve_augmented() {
                            Some(x) => {
                                for (i, r) in rows.iter().enumerate() {
                                    assert_eq!((r[0] * x[0] + r[1] * x[1]) % n, b[i]);
                                }
                            }
                            None => assert!(brute.is_none(), "missed solution {brute:?}"),
                        }
                    }
                }
            }
        }
    }
}

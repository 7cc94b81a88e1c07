//! Sparse linear systems over ℤ/N, assembled one equation at a time.

use super::echelon::{Echelon, SparseRow};

#[derive(Debug, Clone)]
pub struct SparseSystem {
    modulus: u32,
    nvars: usize,
    rows: Vec<(Vec<(usize, i64)>, i64)>,
}

impl SparseSystem {
    pub fn new(modulus: u32, nvars: usize) -> Self {
        SparseSystem {
            modulus,
            nvars,
            rows: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Adds `Σ cᵢ xᵢ = rhs`; repeated variables are summed.
    pub fn push(&mut self, coeffs: impl IntoIterator<Item = (usize, i64)>, rhs: i64) {
        let coeffs: Vec<(usize, i64)> = coeffs.into_iter().collect();
        debug_assert!(coeffs.iter().all(|&(v, _)| v < self.nvars));
        self.rows.push((coeffs, rhs));
    }

    fn to_sparse(&self, mut entries: Vec<(usize, i64)>) -> SparseRow {
        let m = self.modulus as i64;
        entries.sort_unstable();
        let mut row: SparseRow = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            match row.last_mut() {
                Some(last) if last.0 as usize == c => last.1 = (last.1 as i64 + v).rem_euclid(m) as u32,
                _ => row.push((c as u32, v.rem_euclid(m) as u32)),
            }
        }
        row.retain(|&(_, v)| v != 0);
        row
    }

    /// Generators of `{x : A x = 0}`, from the Howell form of the rows
    /// `(A eⱼ | eⱼ)`: pivots past the equation columns span the kernel.
    pub fn kernel_generators(&self) -> Vec<Vec<u32>> {
        let neq = self.rows.len();
        let mut columns: Vec<Vec<(usize, i64)>> = vec![Vec::new(); self.nvars];
        for (r, (coeffs, _)) in self.rows.iter().enumerate() {
            for &(v, c) in coeffs {
                columns[v].push((r, c));
            }
        }
        let mut ech = Echelon::uniform(self.modulus, neq + self.nvars);
        for (v, mut col) in columns.into_iter().enumerate() {
            col.push((neq + v, 1));
            ech.insert(self.to_sparse(col));
        }
        (neq..neq + self.nvars)
            .filter_map(|c| ech.pivot(c))
            .map(|p| {
                let mut x = vec![0u32; self.nvars];
                for &(c, v) in p {
                    x[c as usize - neq] = v;
                }
                x
            })
            .collect()
    }

    pub fn kernel(&self) -> Echelon {
        let mut ech = Echelon::uniform(self.modulus, self.nvars);
        for k in self.kernel_generators() {
            ech.insert_dense(&k);
        }
        ech
    }

    /// Some solution, free unknowns zero.
    pub fn particular(&self) -> Option<Vec<u32>> {
        let mut ech = Echelon::uniform(self.modulus, self.nvars + 1);
        for (coeffs, rhs) in &self.rows {
            let mut entries = coeffs.clone();
            entries.push((self.nvars, *rhs));
            ech.insert(self.to_sparse(entries));
        }
        let x = ech.solve_augmented()?;
        self.satisfied_by(&x).then_some(x)
    }

    /// The lexicographically least solution.
    pub fn solve(&self) -> Option<Vec<u32>> {
        let x = self.particular()?;
        Some(self.kernel().reduce(&x))
    }

    pub fn satisfied_by(&self, x: &[u32]) -> bool {
        let m = self.modulus as i64;
        self.rows.iter().all(|(coeffs, rhs)| {
            let s: i64 = coeffs.iter().map(|&(v, c)| c * x[v] as i64).sum();
            (s - rhs).rem_euclid(m) == 0
        })
    }
}

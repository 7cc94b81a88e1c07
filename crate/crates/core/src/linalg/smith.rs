//! Elementary-divisor reduction: diagonalization over ℤ/N for solving linear
//! systems, and the integer Smith normal form used for group presentations.

use crate::arith::{ext_gcd, gcd, solve_congruence};

/// Dense row-major matrix over ℤ/N.
#[derive(Debug, Clone)]
pub struct ModMatrix {
    pub rows: usize,
    pub cols: usize,
    pub modulus: u32,
    data: Vec<u32>,
}

impl ModMatrix {
    pub fn zeros(rows: usize, cols: usize, modulus: u32) -> Self {
        ModMatrix {
            rows,
            cols,
            modulus,
            data: vec![0; rows * cols],
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.modulus;
    }

    /// Adds a signed coefficient to an entry.
    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        let n = self.modulus as i64;
        let cur = self.data[r * self.cols + c] as i64;
        self.data[r * self.cols + c] = (cur + v).rem_euclid(n) as u32;
    }

    pub fn mul_vec(&self, x: &[u32]) -> Vec<u32> {
        let n = self.modulus as u64;
        (0..self.rows)
            .map(|r| {
                let row = &self.data[r * self.cols..(r + 1) * self.cols];
                (row.iter().zip(x).map(|(&a, &b)| a as u64 * b as u64 % n).sum::<u64>() % n) as u32
            })
            .collect()
    }
}

/// Solution set of `A x = b` over ℤ/N: one particular solution (when
/// solvable) and generators of the kernel of `A`.
#[derive(Debug, Clone)]
pub struct LinearSolution {
    pub particular: Option<Vec<u32>>,
    pub kernel: Vec<Vec<u32>>,
}

/// Applies `[[s, t], [u, v]]` to rows `i`, `k` (or columns) of a row-major
/// buffer with the given stride layout.
fn mix_rows(data: &mut [u32], cols: usize, i: usize, k: usize, m: [i128; 4], n: u32) {
    let n = n as i128;
    for c in 0..cols {
        let a = data[i * cols + c] as i128;
        let b = data[k * cols + c] as i128;
        data[i * cols + c] = (m[0] * a + m[1] * b).rem_euclid(n) as u32;
        data[k * cols + c] = (m[2] * a + m[3] * b).rem_euclid(n) as u32;
    }
}

fn mix_cols(data: &mut [u32], rows: usize, cols: usize, i: usize, k: usize, m: [i128; 4], n: u32) {
    let n = n as i128;
    for r in 0..rows {
        let a = data[r * cols + i] as i128;
        let b = data[r * cols + k] as i128;
        data[r * cols + i] = (m[0] * a + m[1] * b).rem_euclid(n) as u32;
        data[r * cols + k] = (m[2] * a + m[3] * b).rem_euclid(n) as u32;
    }
}

/// Unimodular 2×2 matrix sending `(a, b)` to `(g, 0)`, `g = gcd(a, b)`.
fn eliminator(a: u32, b: u32) -> [i128; 4] {
    let (a, b) = (a as i128, b as i128);
    if b % a == 0 {
        return [1, 0, -(b / a), 1];
    }
    let (g, s, t) = ext_gcd(a, b);
    [s, t, -b / g, a / g]
}

/// Solves `A x = b` over ℤ/N by reducing `A` to diagonal form `P A Q = D`
/// with unimodular row and column transforms.
pub fn solve_mod(a: &ModMatrix, b: &[u32]) -> LinearSolution {
    let n = a.modulus;
    let (rows, cols) = (a.rows, a.cols);
    assert_eq!(b.len(), rows);
    let mut m = a.data.clone();
    let mut rhs: Vec<u32> = b.iter().map(|&v| v % n).collect();
    let mut q = vec![0u32; cols * cols];
    for i in 0..cols {
        q[i * cols + i] = 1 % n;
    }
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: entry generating the largest ideal
        let mut best: Option<(u32, usize, usize)> = None;
        'scan: for r in t..rows {
            for c in t..cols {
                let v = m[r * cols + c];
                if v == 0 {
                    continue;
                }
                let g = gcd(v as u64, n as u64) as u32;
                if best.is_none_or(|(bg, _, _)| g < bg) {
                    best = Some((g, r, c));
                    if g == 1 {
                        break 'scan;
                    }
                }
            }
        }
        let Some((_, pr, pc)) = best else { break };
        if pr != t {
            for c in 0..cols {
                m.swap(t * cols + c, pr * cols + c);
            }
            rhs.swap(t, pr);
        }
        if pc != t {
            for r in 0..rows {
                m.swap(r * cols + t, r * cols + pc);
            }
            for r in 0..cols {
                q.swap(r * cols + t, r * cols + pc);
            }
        }
        loop {
            for r in t + 1..rows {
                let v = m[r * cols + t];
                if v == 0 {
                    continue;
                }
                let e = eliminator(m[t * cols + t], v);
                mix_rows(&mut m, cols, t, r, e, n);
                let (x, y) = (rhs[t] as i128, rhs[r] as i128);
                rhs[t] = (e[0] * x + e[1] * y).rem_euclid(n as i128) as u32;
                rhs[r] = (e[2] * x + e[3] * y).rem_euclid(n as i128) as u32;
            }
            let mut dirty = false;
            for c in t + 1..cols {
                let v = m[t * cols + c];
                if v == 0 {
                    continue;
                }
                let e = eliminator(m[t * cols + t], v);
                mix_cols(&mut m, rows, cols, t, c, e, n);
                mix_cols(&mut q, cols, cols, t, c, e, n);
                dirty = true;
            }
            if !dirty || (t + 1..rows).all(|r| m[r * cols + t] == 0) {
                break;
            }
        }
        diag.push(m[t * cols + t]);
        t += 1;
    }

    let rank = diag.len();
    let mut y = vec![0u32; cols];
    let mut solvable = rhs[rank..].iter().all(|&v| v == 0);
    if solvable {
        for (i, &d) in diag.iter().enumerate() {
            match solve_congruence(d, rhs[i], n) {
                Some(v) => y[i] = v,
                None => {
                    solvable = false;
                    break;
                }
            }
        }
    }
    let column = |j: usize, scale: u64| -> Vec<u32> {
        (0..cols)
            .map(|r| ((q[r * cols + j] as u64 * scale) % n as u64) as u32)
            .collect()
    };
    let particular = solvable.then(|| {
        (0..cols)
            .map(|r| {
                ((0..cols).map(|j| q[r * cols + j] as u64 * y[j] as u64 % n as u64).sum::<u64>() % n as u64)
                    as u32
            })
            .collect()
    });
    let mut kernel = Vec::new();
    for (j, &d) in diag.iter().enumerate() {
        let g = gcd(d as u64, n as u64);
        if g > 1 {
            kernel.push(column(j, n as u64 / g));
        }
    }
    for j in rank..cols {
        kernel.push(column(j, 1));
    }
    kernel.retain(|v| v.iter().any(|&x| x != 0));
    LinearSolution { particular, kernel }
}

/// Integer Smith normal form of a relation matrix, tracking the column
/// transform `V` and its inverse: `U R V = D` with `d₁ | d₂ | …`.
#[derive(Debug, Clone)]
pub struct IntSmith {
    pub diag: Vec<i128>,
    pub v: Vec<Vec<i128>>,
    pub v_inv: Vec<Vec<i128>>,
}

pub fn smith_int(relations: &[Vec<i128>], ncols: usize) -> IntSmith {
    let mut a: Vec<Vec<i128>> = relations.to_vec();
    let rows = a.len();
    let mut v: Vec<Vec<i128>> = (0..ncols)
        .map(|i| (0..ncols).map(|j| (i == j) as i128).collect())
        .collect();
    let mut vi = v.clone();
    let mut diag = Vec::new();

    // column ops: col_j += k col_t  ⇒  V[:,j] += k V[:,t], Vinv[t,:] -= k Vinv[j,:]
    fn col_add(a: &mut [Vec<i128>], v: &mut [Vec<i128>], vi: &mut [Vec<i128>], j: usize, t: usize, k: i128) {
        for row in a.iter_mut() {
            row[j] += k * row[t];
        }
        for row in v.iter_mut() {
            row[j] += k * row[t];
        }
        let (rj, rt) = (vi[j].clone(), &mut vi[t]);
        for (x, y) in rt.iter_mut().zip(rj) {
            *x -= k * y;
        }
    }
    fn col_swap(a: &mut [Vec<i128>], v: &mut [Vec<i128>], vi: &mut [Vec<i128>], i: usize, j: usize) {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
        vi.swap(i, j);
    }

    let mut t = 0;
    while t < rows.min(ncols) {
        let pick = |a: &[Vec<i128>]| {
            let mut best: Option<(i128, usize, usize)> = None;
            for (r, row) in a.iter().enumerate().skip(t) {
                for (c, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 && best.is_none_or(|(b, _, _)| x.abs() < b) {
                        best = Some((x.abs(), r, c));
                    }
                }
            }
            best
        };
        let Some((_, pr, pc)) = pick(&a) else { break };
        a.swap(t, pr);
        col_swap(&mut a, &mut v, &mut vi, t, pc);
        loop {
            let p = a[t][t];
            let mut clean = true;
            for r in t + 1..rows {
                let k = a[r][t].div_euclid(p);
                if k != 0 {
                    let pivot_row = a[t].clone();
                    for (x, y) in a[r].iter_mut().zip(pivot_row) {
                        *x -= k * y;
                    }
                }
                if a[r][t] != 0 {
                    clean = false;
                }
            }
            for c in t + 1..ncols {
                let k = a[t][c].div_euclid(p);
                if k != 0 {
                    col_add(&mut a, &mut v, &mut vi, c, t, -k);
                }
                if a[t][c] != 0 {
                    clean = false;
                }
            }
            if !clean {
                // bring the smallest remainder in row/column t to the pivot
                let mut best = (a[t][t].abs(), t, t);
                for (r, row) in a.iter().enumerate().take(rows).skip(t + 1) {
                    if row[t] != 0 && row[t].abs() < best.0 {
                        best = (row[t].abs(), r, t);
                    }
                }
                for (c, &x) in a[t].iter().enumerate().take(ncols).skip(t + 1) {
                    if x != 0 && x.abs() < best.0 {
                        best = (x.abs(), t, c);
                    }
                }
                let (_, r, c) = best;
                if r != t {
                    a.swap(t, r);
                } else if c != t {
                    col_swap(&mut a, &mut v, &mut vi, t, c);
                }
                continue;
            }
            // divisibility of the remaining block
            let p = a[t][t];
            let offender = (t + 1..rows).find(|&r| (t + 1..ncols).any(|c| a[r][c] % p != 0));
            match offender {
                Some(r) => {
                    let row = a[r].clone();
                    for (x, y) in a[t].iter_mut().zip(row) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            for x in a[t].iter_mut() {
                *x = -*x;
            }
        }
        diag.push(a[t][t]);
        t += 1;
    }
    IntSmith { diag, v, v_inv: vi }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&[u32]], n: u32) -> ModMatrix {
        let mut m = ModMatrix::zeros(rows.len(), rows[0].len(), n);
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    fn all_vectors(len: usize, n: u32) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|v: Vec<u32>| {
                    (0..n).map(move |x| {
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
    fn solve_mod_agrees_with_enumeration() {
        let systems: Vec<(Vec<&[u32]>, u32)> = vec![
            (vec![&[2, 4, 0], &[0, 3, 3]], 6),
            (vec![&[4, 2], &[2, 6], &[6, 0]], 8),
            (vec![&[3, 0, 6], &[0, 4, 2], &[9, 8, 0]], 12),
            (vec![&[0, 0]], 5),
        ];
        for (rows, n) in systems {
            let a = from_rows(&rows, n);
            let xs = all_vectors(a.cols, n);
            let image: std::collections::BTreeSet<Vec<u32>> = xs.iter().map(|x| a.mul_vec(x)).collect();
            let kernel_size = xs.iter().filter(|x| a.mul_vec(x).iter().all(|&v| v == 0)).count();
            for b in all_vectors(a.rows, n) {
                let sol = solve_mod(&a, &b);
                match &sol.particular {
                    Some(x) => assert_eq!(a.mul_vec(x), b),
                    None => assert!(!image.contains(&b), "missed a solvable rhs {b:?}"),
                }
                for k in &sol.kernel {
                    assert!(a.mul_vec(k).iter().all(|&v| v == 0));
                }
            }
            // kernel generators span the whole kernel
            let sol = solve_mod(&a, &vec![0; a.rows]);
            let mut e = super::super::Echelon::uniform(n, a.cols);
            for k in &sol.kernel {
                e.insert_dense(k);
            }
            assert_eq!(e.order_u64().unwrap() as usize, kernel_size);
        }
    }

    #[test]
    fn smith_int_invariant_factors() {
        // ℤ/2 × ℤ/4 modulo ⟨(1,2)⟩ has order 4 and is cyclic
        let rel = vec![vec![2, 0], vec![0, 4], vec![1, 2]];
        let s = smith_int(&rel, 2);
        let nontrivial: Vec<i128> = s.diag.iter().copied().filter(|&d| d != 1).collect();
        assert_eq!(nontrivial, vec![4]);
        // diag(4, 6) has invariant factors 2, 12
        let s = smith_int(&[vec![4, 0], vec![0, 6]], 2);
        assert_eq!(s.diag, vec![2, 12]);
        // V · V⁻¹ = I
        for i in 0..2 {
            for j in 0..2 {
                let x: i128 = (0..2).map(|k| s.v[i][k] * s.v_inv[k][j]).sum();
                assert_eq!(x, (i == j) as i128);
            }
        }
    }
}

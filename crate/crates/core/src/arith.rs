//! Integer helpers for arithmetic in ℤ/N.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b)`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

#[inline]
pub fn add_mod(a: u32, b: u32, n: u32) -> u32 {
    ((a as u64 + b as u64) % n as u64) as u32
}

#[inline]
pub fn sub_mod(a: u32, b: u32, n: u32) -> u32 {
    ((a as u64 + n as u64 - (b % n) as u64) % n as u64) as u32
}

#[inline]
pub fn mul_mod(a: u32, b: u32, n: u32) -> u32 {
    ((a as u64 * b as u64) % n as u64) as u32
}

#[inline]
pub fn neg_mod(a: u32, n: u32) -> u32 {
    if a.is_multiple_of(n) {
        0
    } else {
        n - a % n
    }
}

/// Reduces a signed integer into `[0, n)`.
#[inline]
pub fn reduce(a: i128, n: u32) -> u32 {
    a.rem_euclid(n as i128) as u32
}

/// Inverse of `a` modulo `n`, if `gcd(a, n) = 1`.
pub fn inv_mod(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (g, s, _) = ext_gcd(a as i128, n as i128);
    (g == 1).then(|| s.rem_euclid(n as i128) as u64)
}

/// Smallest nonnegative `x` with `a*x ≡ b (mod n)`, if one exists.
/// All solutions are then `x + k*(n/gcd(a,n))`.
pub fn solve_congruence(a: u32, b: u32, n: u32) -> Option<u32> {
    let (a, b, n) = (a as u64 % n as u64, b as u64 % n as u64, n as u64);
    let g = gcd(a, n);
    if b % g != 0 {
        return None;
    }
    let m = n / g;
    if m == 1 {
        return Some(0);
    }
    let inv = inv_mod((a / g) % m, m)?;
    Some(((b / g) % m * inv % m) as u32)
}

/// Divisor of `n` generating the same ideal as `a` in ℤ/n.
#[inline]
pub fn ideal_gen(a: u32, n: u32) -> u32 {
    gcd(a as u64, n as u64) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_gcd_identity() {
        for a in -20i128..20 {
            for b in -20i128..20 {
                let (g, s, t) = ext_gcd(a, b);
                assert_eq!(s * a + t * b, g);
                assert_eq!(g as u64, gcd(a.unsigned_abs() as u64, b.unsigned_abs() as u64));
            }
        }
    }

    #[test]
    fn congruences_match_brute_force() {
        for n in 1..=24u32 {
            for a in 0..n {
                for b in 0..n {
                    let brute = (0..n).find(|&x| mul_mod(a, x, n) == b);
                    assert_eq!(solve_congruence(a, b, n), brute, "a={a} b={b} n={n}");
                }
            }
        }
    }
}

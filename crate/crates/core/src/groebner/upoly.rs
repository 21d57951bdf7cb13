//! Univariate polynomials over `F_p`, the entries of generic multiplication matrices.

use crate::arith::inv_mod;

/// Coefficients by ascending power, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<u64>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly::default()
    }

    pub fn constant(c: u64, p: u64) -> Self {
        UPoly::from_coeffs(vec![c % p])
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, c: u64, p: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &a| (acc * c + a) % p)
    }

    pub fn sub(&self, other: &Self, p: u64) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + p - b) % p
            })
            .collect();
        UPoly::from_coeffs(v)
    }

    pub fn mul(&self, other: &Self, p: u64) -> Self {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                v[i + j] = (v[i + j] + a * b) % p;
            }
        }
        UPoly::from_coeffs(v)
    }

    /// Quotient by a nonzero divisor, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self, p: u64) -> Option<Self> {
        let dd = divisor.degree()?;
        let Some(nd) = self.degree() else {
            return Some(UPoly::zero());
        };
        if nd < dd {
            return None;
        }
        let lead_inv = inv_mod(divisor.coeffs[dd], p);
        let mut rem = self.coeffs.clone();
        let mut q = vec![0u64; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd] * lead_inv % p;
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - c * b % p) % p;
            }
        }
        rem.iter().all(|&r| r == 0).then(|| UPoly::from_coeffs(q))
    }
}

/// Rank over the rational function field `F_p(c)` by fraction-free
/// elimination; every intermediate entry is a minor, so divisions are exact.
pub fn rank_over_function_field(mut a: Vec<Vec<UPoly>>, p: u64) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = UPoly::constant(1, p);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(piv, rank);
        let pivot_row = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            let f = row[col].clone();
            for j in col + 1..cols {
                let v = pivot_row[col]
                    .mul(&row[j], p)
                    .sub(&f.mul(&pivot_row[j], p), p);
                row[j] = v
                    .div_exact(&prev, p)
                    .expect("fraction-free division is exact");
            }
            row[col] = UPoly::zero();
        }
        prev = pivot_row[col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(v: &[u64]) -> UPoly {
        UPoly::from_coeffs(v.to_vec())
    }

    #[test]
    fn arithmetic() {
        let p = 7;
        let a = up(&[1, 1]); // 1 + c
        let b = up(&[6, 1]); // c - 1
        let prod = a.mul(&b, p); // c^2 - 1
        assert_eq!(prod, up(&[6, 0, 1]));
        assert_eq!(prod.div_exact(&a, p), Some(b.clone()));
        assert_eq!(prod.div_exact(&up(&[0, 1]), p), None);
        assert_eq!(prod.eval(3, p), 1);
        assert!(a.sub(&a, p).is_zero());
    }

    #[test]
    fn generic_rank() {
        let p = 3;
        // [[c, 1], [1, c]] has determinant c^2 - 1, vanishing at c = ±1 but not generically
        let m = vec![vec![up(&[0, 1]), up(&[1])], vec![up(&[1]), up(&[0, 1])]];
        assert_eq!(rank_over_function_field(m, p), 2);
        // c^3 - c vanishes on all of F_3
        let m = vec![vec![up(&[0, 2, 0, 1])]];
        assert_eq!(rank_over_function_field(m, p), 1);
        let m = vec![vec![up(&[0, 1]), up(&[0, 2])], vec![up(&[1]), up(&[2])]];
        assert_eq!(rank_over_function_field(m, p), 1);
    }
}

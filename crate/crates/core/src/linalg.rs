//! Exact linear algebra over the integers and prime fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::inv_mod;
use crate::error::{Error, Result};

/// Determinant of a square integer matrix by fraction-free Bareiss elimination.
pub fn det_bareiss(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Reduces an integer matrix modulo `p` into `[0, p)`.
pub fn reduce_mod(matrix: &[Vec<BigInt>], p: u64) -> Vec<Vec<u64>> {
    let bp = BigInt::from(p);
    matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.mod_floor(&bp).to_u64().expect("reduced below p"))
                .collect()
        })
        .collect()
}

/// Rank of a matrix over `F_p` with entries already in `[0, p)`; `p < 2^32`.
pub fn rank_mod_p(mut a: Vec<Vec<u64>>, p: u64) -> usize {
    debug_assert!(p < 1 << 32);
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(piv, rank);
        let inv = inv_mod(a[rank][c], p);
        for v in a[rank][c..].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == rank || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (v, &pv) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *v = (*v + p - f * pv % p) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Integer entries usable in unimodular elimination.
trait EuclidInt: Clone + PartialEq {
    fn vanishes(&self) -> bool;
    fn abs_key(&self) -> BigInt;
    fn is_unit(&self) -> bool;
    /// Truncated quotient.
    fn quot(&self, other: &Self) -> Self;
    /// `self - q * other`, or `None` on overflow.
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl EuclidInt for i64 {
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn abs_key(&self) -> BigInt {
        BigInt::from(self.unsigned_abs())
    }
    fn is_unit(&self) -> bool {
        self.unsigned_abs() == 1
    }
    fn quot(&self, other: &Self) -> Self {
        self / other
    }
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*other)?)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl EuclidInt for BigInt {
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn abs_key(&self) -> BigInt {
        self.abs()
    }
    fn is_unit(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
    fn quot(&self, other: &Self) -> Self {
        self / other
    }
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self> {
        Some(self - q * other)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Nonzero diagonal entries of `U A V` for unimodular `U`, `V`.
///
/// The product of the entries is the gcd of the maximal nonvanishing minors
/// of `A`, so a prime `p` lowers the rank modulo `p` exactly when it divides
/// some entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerDiagonal {
    pub rank: usize,
    pub entries: Vec<BigInt>,
}

fn min_pivot<T: EuclidInt>(a: &[Vec<T>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, v) in row.iter().enumerate().skip(k) {
            if v.vanishes() {
                continue;
            }
            if v.is_unit() {
                return Some((i, j));
            }
            let key = v.abs_key();
            if best.as_ref().is_none_or(|b| key < b.2) {
                best = Some((i, j, key));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn diagonalize_in<T: EuclidInt>(mut a: Vec<Vec<T>>) -> Option<Vec<T>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for k in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_pivot(&a, k) else {
                return Some(diag);
            };
            a.swap(k, pi);
            if pj != k {
                for row in a.iter_mut() {
                    row.swap(k, pj);
                }
            }
            let mut clean = true;
            let pivot_row = a[k].clone();
            for row in a.iter_mut().skip(k + 1) {
                if row[k].vanishes() {
                    continue;
                }
                let q = row[k].quot(&pivot_row[k]);
                for j in k..cols {
                    row[j] = row[j].sub_mul(&q, &pivot_row[j])?;
                }
                clean &= row[k].vanishes();
            }
            for j in k + 1..cols {
                if a[k][j].vanishes() {
                    continue;
                }
                let q = a[k][j].quot(&a[k][k]);
                for row in a.iter_mut().take(rows).skip(k) {
                    row[j] = row[j].sub_mul(&q, &row[k])?;
                }
                clean &= a[k][j].vanishes();
            }
            if clean {
                break;
            }
        }
        diag.push(a[k][k].clone());
    }
    Some(diag)
}

/// Diagonalizes an integer matrix by unimodular row and column operations,
/// in machine integers when they suffice and arbitrary precision otherwise.
pub fn diagonalize(matrix: &[Vec<i64>]) -> IntegerDiagonal {
    let entries: Vec<BigInt> = match diagonalize_in(matrix.to_vec()) {
        Some(d) => d.iter().map(EuclidInt::to_big).collect(),
        None => {
            let big: Vec<Vec<BigInt>> = matrix
                .iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect();
            diagonalize_in(big).expect("arbitrary precision cannot overflow")
        }
    };
    let entries: Vec<BigInt> = entries.into_iter().map(|v| v.abs()).collect();
    IntegerDiagonal {
        rank: entries.len(),
        entries,
    }
}

/// Rank over the rationals together with the diagonal, refusing matrices
/// with more than `max_dim` rows or columns.
pub fn diagonalize_bounded(matrix: &[Vec<i64>], max_dim: usize) -> Result<IntegerDiagonal> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if rows > max_dim || cols > max_dim {
        return Err(Error::ResourceLimit(format!(
            "{rows}x{cols} matrix exceeds the {max_dim} dimension limit"
        )));
    }
    Ok(diagonalize(matrix))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn bareiss() {
        assert_eq!(
            det_bareiss(&big(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]])),
            BigInt::from(4)
        );
        assert_eq!(det_bareiss(&big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det_bareiss(&big(&[&[1, 2], &[2, 4]])), BigInt::zero());
        assert_eq!(det_bareiss(&[]), BigInt::from(1));
    }

    #[test]
    fn ranks() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank_mod_p(m.clone(), 7), 2);
        let m2 = vec![vec![2, 1], vec![1, 2]];
        assert_eq!(rank_mod_p(m2.clone(), 5), 2);
        assert_eq!(rank_mod_p(m2, 3), 1);
        assert_eq!(rank_mod_p(vec![], 3), 0);
    }

    #[test]
    fn diagonal_product_is_minor_gcd() {
        let d = diagonalize(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(d.rank, 3);
        let prod: BigInt = d.entries.iter().product();
        assert_eq!(
            prod,
            det_bareiss(&big(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])).abs()
        );
        // rank-deficient, wide
        let d = diagonalize(&[vec![1, 1, 0], vec![2, 2, 0]]);
        assert_eq!(d.rank, 1);
        let d = diagonalize(&[vec![2, 0], vec![0, 3], vec![0, 0]]);
        let prod: BigInt = d.entries.iter().product();
        assert_eq!(prod, BigInt::from(6));
    }

    #[test]
    fn overflow_falls_back() {
        let n = 40;
        let m: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| ((i * 7 + j * 13) % 17) as i64 * (1 << 20))
                    .collect()
            })
            .collect();
        let d = diagonalize(&m);
        let bm: Vec<Vec<BigInt>> = m
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        let p = 1_000_003;
        assert!(d.rank <= n);
        assert_eq!(
            rank_mod_p(reduce_mod(&bm, p), p),
            d.entries.iter().filter(|e| !(*e % p).is_zero()).count()
        );
    }
}

//! Multiplication by powers of `x + y` between graded components, the
//! closed-form determinant of its square blocks, and the reduction of a
//! square block to its nontrivial central part.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, binomial_mod, factor_u64, factorial, legendre, primes_up_to};
use crate::error::{Error, Result};
use crate::ideal::{Monomial2, MonomialIdeal2};
use crate::linalg::det_bareiss;

/// Pairs `(d, t)` with `t >= 1` and `h(d) = h(d+t) = d + 1`, ascending.
pub fn square_pairs(ideal: &MonomialIdeal2) -> Result<Vec<(u32, u32)>> {
    let h = ideal.hilbert_function()?;
    let mut out = Vec::new();
    for d in 0..=h.reg {
        if h.at(d) != d + 1 {
            break;
        }
        for e in d + 1..=h.reg {
            if h.at(e) == d + 1 {
                out.push((d, e - d));
            }
        }
    }
    Ok(out)
}

fn check_square(ideal: &MonomialIdeal2, d: u32, t: u32) -> Result<()> {
    if t == 0 {
        return Err(Error::PreconditionFailed("t must be positive".into()));
    }
    let (hd, hdt) = (ideal.hilbert_at(d), ideal.hilbert_at(d + t));
    if hd != d + 1 || hdt != d + 1 {
        return Err(Error::NotSquarePair { d, t, hd, hdt });
    }
    Ok(())
}

/// Matrix of `x^i y^{d-i} -> coefficient of x^{b_j} y^{d+t-b_j}` in
/// `x^i y^{d-i} (x+y)^t`, on standard monomials of degrees `d` and `d + t`.
pub fn multiplication_map(ideal: &MonomialIdeal2, d: u32, t: u32) -> Vec<Vec<BigInt>> {
    let rows = ideal.standard_x_exponents(d);
    let cols = ideal.standard_x_exponents(d + t);
    rows.iter()
        .map(|&a| {
            cols.iter()
                .map(|&b| BigInt::from(binomial(t as i64, b as i64 - a as i64)))
                .collect()
        })
        .collect()
}

/// [`multiplication_map`] reduced modulo the prime `p`.
pub fn multiplication_map_mod(ideal: &MonomialIdeal2, d: u32, t: u32, p: u64) -> Vec<Vec<u64>> {
    let rows = ideal.standard_x_exponents(d);
    let cols = ideal.standard_x_exponents(d + t);
    rows.iter()
        .map(|&a| {
            cols.iter()
                .map(|&b| {
                    if b < a || b - a > t {
                        0
                    } else {
                        binomial_mod(t as u64, (b - a) as u64, p)
                    }
                })
                .collect()
        })
        .collect()
}

/// The square matrix of `x (x+y)^t : [R/I]_d -> [R/I]_{d+t}` at a square pair.
///
/// Rows are the monomials `x^i y^{d-i}` for `i = 0..=d`; columns are the
/// standard monomials of degree `d + t` by ascending `x`-exponent `b_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicationMatrix {
    pub d: u32,
    pub t: u32,
    pub bexps: Vec<u32>,
    pub entries: Vec<Vec<BigInt>>,
}

impl MultiplicationMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Reverses both the row and the column order (the `x <-> y` reflection).
    pub fn reversed(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .iter()
            .rev()
            .map(|row| row.iter().rev().cloned().collect())
            .collect()
    }
}

impl fmt::Display for MultiplicationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "[ {} ]", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn build_matrix(ideal: &MonomialIdeal2, d: u32, t: u32) -> Result<MultiplicationMatrix> {
    check_square(ideal, d, t)?;
    let bexps = ideal.standard_x_exponents(d + t);
    let entries = (0..=d)
        .map(|i| {
            bexps
                .iter()
                .map(|&b| BigInt::from(binomial(t as i64, b as i64 - i as i64)))
                .collect()
        })
        .collect();
    Ok(MultiplicationMatrix {
        d,
        t,
        bexps,
        entries,
    })
}

/// Determinant by fraction-free elimination, independent of the closed form.
pub fn det_exact(matrix: &MultiplicationMatrix) -> BigInt {
    det_bareiss(&matrix.entries)
}

/// `|det N(d, d+t)|` as a product of differences and factorial quotients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredDeterminant {
    pub d: u32,
    pub t: u32,
    pub r: i64,
    pub s: i64,
    /// `b_{r+j} - b_{r+i}` for `0 <= i < j <= s - r`.
    pub difference_factors: Vec<u64>,
    /// Arguments `t + i` of the numerator factorials.
    pub factorial_numerators: Vec<u64>,
    /// Arguments `t + s - b_{r+i}` and `b_{r+i} - r` of the denominator factorials.
    pub factorial_denominators: Vec<u64>,
    pub value: BigUint,
    pub prime_factorization: BTreeMap<u64, u32>,
}

impl FactoredDeterminant {
    /// The largest argument among all factors with its number of occurrences.
    pub fn largest_term(&self) -> Option<(u64, usize)> {
        let all = || {
            self.difference_factors
                .iter()
                .chain(&self.factorial_numerators)
                .chain(&self.factorial_denominators)
        };
        let max = *all().max()?;
        Some((max, all().filter(|&&v| v == max).count()))
    }

    pub fn divisible_by(&self, p: u64) -> bool {
        self.prime_factorization.contains_key(&p)
    }

    pub fn is_unit(&self) -> bool {
        self.value.is_one()
    }
}

/// `r = max({0} ∪ {k+1 : b_k = k})` and `s = min({d} ∪ {k-1 : b_k = t+k})`.
fn block_bounds(bexps: &[u32], d: u32, t: u32) -> (i64, i64) {
    let r = bexps
        .iter()
        .enumerate()
        .filter(|&(k, &b)| b as usize == k)
        .map(|(k, _)| k as i64 + 1)
        .max()
        .unwrap_or(0);
    let s = bexps
        .iter()
        .enumerate()
        .filter(|&(k, &b)| b as usize == t as usize + k)
        .map(|(k, _)| k as i64 - 1)
        .min()
        .unwrap_or(d as i64);
    (r, s)
}

pub fn closed_form_det(ideal: &MonomialIdeal2, d: u32, t: u32) -> Result<FactoredDeterminant> {
    check_square(ideal, d, t)?;
    let bexps = ideal.standard_x_exponents(d + t);
    let (r, s) = block_bounds(&bexps, d, t);
    let mut difference_factors = Vec::new();
    let mut factorial_numerators = Vec::new();
    let mut factorial_denominators = Vec::new();
    if r <= s {
        let central: Vec<i64> = bexps[r as usize..=s as usize]
            .iter()
            .map(|&b| b as i64)
            .collect();
        for j in 0..central.len() {
            for i in 0..j {
                difference_factors.push((central[j] - central[i]) as u64);
            }
        }
        for (i, &b) in central.iter().enumerate() {
            factorial_numerators.push(t as u64 + i as u64);
            factorial_denominators.push((t as i64 + s - b) as u64);
            factorial_denominators.push((b - r) as u64);
        }
    } else if r != s + 1 {
        return Err(Error::InvariantViolation(format!(
            "block bounds r={r}, s={s} at (d={d}, t={t})"
        )));
    }

    let mut num = BigUint::one();
    for &f in &difference_factors {
        num *= f;
    }
    for &n in &factorial_numerators {
        num *= factorial(n);
    }
    let mut den = BigUint::one();
    for &n in &factorial_denominators {
        den *= factorial(n);
    }
    if !(&num % &den).is_zero() {
        return Err(Error::InvariantViolation(format!(
            "closed form at (d={d}, t={t}) is not an integer"
        )));
    }
    let value = num / den;

    let mut exps: BTreeMap<u64, i64> = BTreeMap::new();
    for &f in &difference_factors {
        for (p, e) in factor_u64(f) {
            *exps.entry(p).or_default() += e as i64;
        }
    }
    let top = factorial_numerators.iter().max().copied().unwrap_or(0);
    for p in primes_up_to(top) {
        let e: i64 = factorial_numerators
            .iter()
            .map(|&n| legendre(n, p) as i64)
            .sum::<i64>()
            - factorial_denominators
                .iter()
                .map(|&n| legendre(n, p) as i64)
                .sum::<i64>();
        *exps.entry(p).or_default() += e;
    }
    let mut prime_factorization = BTreeMap::new();
    for (p, e) in exps {
        if e < 0 {
            return Err(Error::InvariantViolation(format!(
                "negative exponent of {p} in the closed form at (d={d}, t={t})"
            )));
        }
        if e > 0 {
            prime_factorization.insert(p, e as u32);
        }
    }
    Ok(FactoredDeterminant {
        d,
        t,
        r,
        s,
        difference_factors,
        factorial_numerators,
        factorial_denominators,
        value,
        prime_factorization,
    })
}

/// The central block of `N(d, d+t)` realized as a full matrix of another ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HatReduction {
    pub r: i64,
    pub s: i64,
    pub t: u32,
    /// `(J, s - r)` with `N_{R/J}(s-r, s-r+t)` equal to the central block;
    /// `None` when the central block is empty (`r = s + 1`).
    pub reduced: Option<(MonomialIdeal2, u32)>,
}

/// Generated by the degree-`(t+s-r)` monomials whose `x`-exponent is not one of
/// `b_r - r, ..., b_s - r`; in that degree its standard monomials are exactly
/// the shifted central columns, and it has no generators below.
pub fn reduce_to_hat(ideal: &MonomialIdeal2, d: u32, t: u32) -> Result<HatReduction> {
    check_square(ideal, d, t)?;
    let bexps = ideal.standard_x_exponents(d + t);
    let (r, s) = block_bounds(&bexps, d, t);
    if r > s {
        return Ok(HatReduction {
            r,
            s,
            t,
            reduced: None,
        });
    }
    let top = (t as i64 + s - r) as u32;
    let kept: Vec<u32> = bexps[r as usize..=s as usize]
        .iter()
        .map(|&b| (b as i64 - r) as u32)
        .collect();
    let j = MonomialIdeal2::new(
        (0..=top)
            .filter(|a| !kept.contains(a))
            .map(|a| Monomial2::in_degree(top, a)),
    );
    Ok(HatReduction {
        r,
        s,
        t,
        reduced: Some((j, (s - r) as u32)),
    })
}

/// The central block `(C(t, b_{r+j} - (r+i)))` of `N(d, d+t)`.
pub fn central_block(matrix: &MultiplicationMatrix, r: i64, s: i64) -> Vec<Vec<BigInt>> {
    if r > s {
        return Vec::new();
    }
    let range = r as usize..=s as usize;
    matrix.entries[range.clone()]
        .iter()
        .map(|row| row[range.clone()].to_vec())
        .collect()
}

/// The three equivalent unimodularity criteria, each computed on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Unimodularity {
    pub det_is_unit: bool,
    pub width_equals_t: bool,
    pub lexsegment: bool,
}

impl Unimodularity {
    pub fn agree(&self) -> bool {
        self.det_is_unit == self.width_equals_t && self.width_equals_t == self.lexsegment
    }
}

pub fn unimodularity(ideal: &MonomialIdeal2, d: u32, t: u32) -> Result<Unimodularity> {
    let m = build_matrix(ideal, d, t)?;
    let det = det_exact(&m);
    Ok(Unimodularity {
        det_is_unit: det == BigInt::one() || det == -BigInt::one(),
        width_equals_t: ideal.width_at(d + t) == t,
        lexsegment: ideal.is_lexsegment_in_degree(d + t),
    })
}

/// `|det N(d, d+t)| = 1`; errors if the three criteria disagree.
pub fn is_unimodular(ideal: &MonomialIdeal2, d: u32, t: u32) -> Result<bool> {
    let u = unimodularity(ideal, d, t)?;
    if !u.agree() {
        return Err(Error::InvariantViolation(format!(
            "unimodularity criteria disagree at (d={d}, t={t}) for ({ideal}): {u:?}"
        )));
    }
    Ok(u.det_is_unit)
}

//! Macaulay expansions, validity of Hilbert and width functions, initial
//! lexsegment ideals, and the sequences that force every monomial ideal
//! realizing them to be lexsegment.

use serde::{Deserialize, Serialize};

use crate::arith::binomial_u128;
use crate::error::{Error, Result};
use crate::ideal::{Monomial2, MonomialIdeal2};

/// `a = C(a_d, d) + C(a_{d-1}, d-1) + ... + C(a_k, k)` with `a_d > ... > a_k >= k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayExpansion {
    pub d: u32,
    /// Pairs `(a_i, i)` with `i` descending from `d`.
    pub terms: Vec<(u64, u32)>,
}

impl MacaulayExpansion {
    pub fn value(&self) -> u128 {
        self.terms
            .iter()
            .map(|&(a, i)| binomial_u128(a, i as u64).unwrap_or(u128::MAX))
            .sum()
    }

    /// `a^<d>`: every term `C(a_i, i)` becomes `C(a_i + 1, i + 1)`.
    pub fn upper(&self) -> u128 {
        self.terms
            .iter()
            .map(|&(a, i)| binomial_u128(a + 1, i as u64 + 1).unwrap_or(u128::MAX))
            .sum()
    }
}

/// The greedy Macaulay expansion of `a` with respect to `d`.
pub fn macaulay_expansion(a: u64, d: u32) -> Result<MacaulayExpansion> {
    if a == 0 || d == 0 {
        return Err(Error::PreconditionFailed(format!(
            "Macaulay expansion needs a >= 1 and d >= 1, got a={a}, d={d}"
        )));
    }
    let mut rest = a as u128;
    let mut terms = Vec::new();
    let mut i = d;
    while rest > 0 {
        // largest n with C(n, i) <= rest; C(i, i) = 1 <= rest so n >= i
        let mut n = i as u64;
        while binomial_u128(n + 1, i as u64).is_some_and(|c| c <= rest) {
            n += 1;
        }
        rest -= binomial_u128(n, i as u64).expect("bounded by rest");
        terms.push((n, i));
        if i == 1 {
            break;
        }
        i -= 1;
    }
    debug_assert_eq!(rest, 0);
    Ok(MacaulayExpansion { d, terms })
}

/// `a^<d>`, with `0^<d> = 0`.
pub fn macaulay_upper(a: u64, d: u32) -> Result<u128> {
    if d == 0 {
        return Err(Error::PreconditionFailed("d must be positive".into()));
    }
    if a == 0 {
        return Ok(0);
    }
    Ok(macaulay_expansion(a, d)?.upper())
}

/// Hilbert function of a quotient of `k[x, y]`: `h(j) = j + 1` up to some
/// degree and weakly decreasing afterwards. Values past the end are zero.
pub fn is_valid_hilbert(h: &[u32]) -> bool {
    if h.first() != Some(&1) {
        return false;
    }
    let k = h
        .iter()
        .enumerate()
        .position(|(j, &v)| v as usize != j + 1)
        .unwrap_or(h.len());
    // h(k-1) = k and h stays weakly decreasing from k-1 on
    h[k - 1..].windows(2).all(|w| w[1] <= w[0])
}

/// `h(0) = 1` and `h(d+1) <= h(d)^<d>` for all `d >= 1` (any number of variables).
pub fn satisfies_macaulay_growth(h: &[u32]) -> bool {
    if h.first() != Some(&1) {
        return false;
    }
    (1..h.len().saturating_sub(1))
        .all(|d| macaulay_upper(h[d] as u64, d as u32).is_ok_and(|bound| h[d + 1] as u128 <= bound))
}

/// Width function of a monomial ideal: identically `d + 1`, or zero below some
/// `m > 0` and then `1 <= w(d) < w(d+1) <= d + 2`. All-zero prefixes are accepted.
pub fn is_valid_width(w: &[u32]) -> bool {
    if w.is_empty() {
        return false;
    }
    if w[0] != 0 {
        return w.iter().enumerate().all(|(d, &v)| v as usize == d + 1);
    }
    let Some(m) = w.iter().position(|&v| v != 0) else {
        return true;
    };
    w[m] as usize <= m + 1
        && w[m..].windows(2).enumerate().all(|(k, pair)| {
            let d = m + k;
            pair[0] < pair[1] && pair[1] as usize <= d + 2
        })
}

fn trim_hilbert(h: &[u32]) -> Result<&[u32]> {
    if !is_valid_hilbert(h) {
        return Err(Error::InvalidHilbert(format!("{h:?}")));
    }
    let len = h.iter().rposition(|&v| v != 0).map_or(0, |p| p + 1);
    Ok(&h[..len])
}

/// The monomial ideal whose degree-`d` part is exactly `slices[d]`, with every
/// monomial of degree `slices.len()` added so the quotient is artinian.
/// Fails if the slices are not closed under multiplication by `x` and `y`.
pub fn ideal_from_slices(slices: &[Vec<Monomial2>]) -> Result<MonomialIdeal2> {
    let top = slices.len() as u32;
    let gens = slices
        .iter()
        .flatten()
        .copied()
        .chain((0..=top).map(|i| Monomial2::in_degree(top, i)));
    let ideal = MonomialIdeal2::new(gens);
    for (d, slice) in slices.iter().enumerate() {
        let mut expected = slice.clone();
        expected.sort();
        if ideal.degree_slice(d as u32) != expected {
            return Err(Error::InvariantViolation(format!(
                "degree {d} slice is not closed under the ideal generated by lower degrees"
            )));
        }
    }
    Ok(ideal)
}

/// The top `count` monomials of degree `d`: `x^d, x^{d-1}y, ...`, ascending.
fn lex_top(d: u32, count: u32) -> Vec<Monomial2> {
    (d + 1 - count..=d)
        .map(|i| Monomial2::in_degree(d, i))
        .collect()
}

fn lex_slices(h: &[u32]) -> Vec<Vec<Monomial2>> {
    h.iter()
        .enumerate()
        .map(|(d, &v)| lex_top(d as u32, d as u32 + 1 - v))
        .collect()
}

/// The initial lexsegment ideal with Hilbert function `h` (zero past the end).
pub fn lex_ideal_from_hilbert(h: &[u32]) -> Result<MonomialIdeal2> {
    let h = trim_hilbert(h)?;
    ideal_from_slices(&lex_slices(h))
}

/// Hilbert function `h(d) = d + 1 - w(d)` of the initial lexsegment ideal with width `w`.
pub fn hilbert_from_width(w: &[u32]) -> Result<Vec<u32>> {
    if !is_valid_width(w) {
        return Err(Error::InvalidWidth(format!("{w:?}")));
    }
    Ok(w.iter()
        .enumerate()
        .map(|(d, &v)| d as u32 + 1 - v)
        .collect())
}

/// The initial lexsegment ideal with width function `w`, continued by
/// `w(d) = d + 1` past the given entries.
pub fn lex_ideal_from_width(w: &[u32]) -> Result<MonomialIdeal2> {
    let h = hilbert_from_width(w)?;
    if w[0] != 0 {
        return Ok(MonomialIdeal2::unit());
    }
    lex_ideal_from_hilbert(&h)
}

/// The entries of `w` before it reaches `d + 1`. Once `x^d` and `y^d` both lie
/// in the ideal the width stays `d + 1`, so this prefix determines the function.
pub fn canonical_width(w: &[u32]) -> &[u32] {
    let end = w
        .iter()
        .enumerate()
        .position(|(d, &v)| v as usize == d + 1)
        .unwrap_or(w.len());
    &w[..end]
}

/// Width `w(d)` continued as `d + 1` past the given entries.
fn width_ext(w: &[u32], d: usize) -> u32 {
    w.get(d).copied().unwrap_or(d as u32 + 1)
}

fn hilbert_ext(h: &[u32], d: usize) -> u32 {
    h.get(d).copied().unwrap_or(0)
}

fn first_h_violation(h: &[u32]) -> Option<usize> {
    (0..=h.len()).find(|&d| {
        hilbert_ext(h, d) > hilbert_ext(h, d + 1) && hilbert_ext(h, d + 1) != hilbert_ext(h, d + 2)
    })
}

fn first_w_violation(w: &[u32]) -> Option<usize> {
    (0..w.len()).find(|&d| width_ext(w, d + 1) > width_ext(w, d) + 2)
}

/// Every monomial ideal with Hilbert function `h` is lexsegment iff whenever
/// `h(d) > h(d+1)` also `h(d+1) = h(d+2)`.
pub fn h_forces_lexsegment(h: &[u32]) -> Result<bool> {
    let h = trim_hilbert(h)?;
    Ok(first_h_violation(h).is_none())
}

/// Every monomial ideal with width function `w` is lexsegment iff consecutive
/// widths never jump by more than two.
pub fn w_forces_lexsegment(w: &[u32]) -> Result<bool> {
    if !is_valid_width(w) {
        return Err(Error::InvalidWidth(format!("{w:?}")));
    }
    Ok(first_w_violation(w).is_none())
}

/// A non-lexsegment monomial ideal with Hilbert function `h`, obtained from the
/// initial lexsegment ideal by shifting the smallest degree-`(d+1)` monomial one
/// step down at the first degree `d` where the forcing condition fails.
pub fn non_lex_witness_from_h(h: &[u32]) -> Result<MonomialIdeal2> {
    let h = trim_hilbert(h)?;
    let d = first_h_violation(h).ok_or(Error::ForcingHolds)?;
    let mut slices = lex_slices(h);
    let e = d + 1;
    // h(d+1) > h(d+2) >= 0 forces e < h.len()
    let b = e as u32 + 1 - h[e];
    let slice = &mut slices[e];
    slice.remove(0);
    slice.insert(0, Monomial2::in_degree(e as u32, e as u32 + 1 - b - 1));
    let witness = ideal_from_slices(&slices)?;
    let got = witness.hilbert_function()?;
    if got.values != h || witness.is_lexsegment() {
        return Err(Error::InvariantViolation(format!(
            "h-witness {witness} does not realize {h:?} as a non-lexsegment ideal"
        )));
    }
    Ok(witness)
}

/// A non-lexsegment monomial ideal with width function `w`: at the first jump
/// `w(d+1) - w(d) >= 3`, drop the second-smallest monomial of the degree-`(d+1)`
/// lexsegment slice.
pub fn non_lex_witness_from_w(w: &[u32]) -> Result<MonomialIdeal2> {
    let h = hilbert_from_width(w)?;
    if w[0] != 0 {
        return Err(Error::ForcingHolds);
    }
    let d = first_w_violation(w).ok_or(Error::ForcingHolds)?;
    let e = d + 1;
    let mut h_ext = h;
    // the jump may land one degree past the given entries, where w(e) = e + 1
    if e >= h_ext.len() {
        h_ext.push(0);
    }
    let mut slices = lex_slices(&h_ext);
    slices[e].remove(1);
    let witness = ideal_from_slices(&slices)?;
    let target = canonical_width(w);
    let got = witness.width_upto(target.len() as u32 + 1);
    let reproduces = (0..got.len()).all(|k| got[k] == width_ext(target, k));
    if !reproduces || witness.is_lexsegment() {
        return Err(Error::InvariantViolation(format!(
            "w-witness {witness} does not realize {w:?} as a non-lexsegment ideal"
        )));
    }
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str) -> MonomialIdeal2 {
        s.parse().unwrap()
    }

    #[test]
    fn expansions() {
        let e = macaulay_expansion(5, 2).unwrap();
        assert_eq!(e.terms, vec![(3, 2), (2, 1)]);
        assert_eq!(e.value(), 5);
        assert_eq!(macaulay_expansion(1, 4).unwrap().terms, vec![(4, 4)]);
        assert_eq!(macaulay_expansion(10, 3).unwrap().terms, vec![(5, 3)]);
        assert!(macaulay_expansion(0, 3).is_err());
        for a in 1..200u64 {
            for d in 1..6 {
                let e = macaulay_expansion(a, d).unwrap();
                assert_eq!(e.value(), a as u128);
                assert!(e.terms.windows(2).all(|w| w[0].0 > w[1].0));
                assert!(e.terms.iter().all(|&(ai, i)| ai >= i as u64 && i >= 1));
            }
        }
    }

    #[test]
    fn upper() {
        assert_eq!(macaulay_upper(0, 3).unwrap(), 0);
        assert_eq!(macaulay_upper(2, 1).unwrap(), 3);
        assert_eq!(macaulay_upper(5, 2).unwrap(), 7);
        // in two variables a^<d> = a for a <= d, the growth allowed by h(1) = 2
        for d in 1..8 {
            for a in 1..=d as u64 {
                assert_eq!(macaulay_upper(a, d).unwrap(), a as u128);
            }
        }
    }

    #[test]
    fn hilbert_validity() {
        assert!(is_valid_hilbert(&[1, 2, 3, 4, 4, 2]));
        assert!(!is_valid_hilbert(&[1, 2, 1, 2]));
        assert!(!is_valid_hilbert(&[2, 3]));
        assert!(!is_valid_hilbert(&[1, 3]));
        assert!(is_valid_hilbert(&[1]));
        assert!(is_valid_hilbert(&[1, 1, 1, 0]));
        assert!(!is_valid_hilbert(&[]));
        assert!(satisfies_macaulay_growth(&[1, 3, 6, 10]));
        assert!(!satisfies_macaulay_growth(&[1, 2, 4]));
        assert!(satisfies_macaulay_growth(&[1, 2, 3, 2, 1]));
    }

    #[test]
    fn width_validity() {
        assert!(is_valid_width(&[0, 0, 0, 0, 1, 5]));
        assert!(!is_valid_width(&[0, 1, 1]));
        assert!(!is_valid_width(&[0, 1, 4]));
        assert!(is_valid_width(&[1, 2, 3]));
        assert!(!is_valid_width(&[1, 2, 2]));
        assert!(is_valid_width(&[0, 0, 0]));
        assert!(!is_valid_width(&[0, 3]));
    }

    #[test]
    fn lex_ideals() {
        assert_eq!(
            lex_ideal_from_hilbert(&[1, 2, 2, 1]).unwrap(),
            ideal("x^2, xy^2, y^4")
        );
        assert_eq!(lex_ideal_from_hilbert(&[1]).unwrap(), ideal("x, y"));
        assert_eq!(
            lex_ideal_from_hilbert(&[1, 2, 3, 2, 1]).unwrap(),
            ideal("x^3, x^2y, xy^3, y^5")
        );
        assert!(matches!(
            lex_ideal_from_hilbert(&[1, 2, 1, 2]),
            Err(Error::InvalidHilbert(_))
        ));
        let from_w = lex_ideal_from_width(&[0, 0, 0, 0, 1, 5]).unwrap();
        assert_eq!(
            from_w.hilbert_function().unwrap().values,
            vec![1, 2, 3, 4, 4, 1]
        );
        assert_eq!(
            from_w.width_function().unwrap().values,
            vec![0, 0, 0, 0, 1, 5]
        );
        assert_eq!(
            lex_ideal_from_width(&[1, 2, 3]).unwrap(),
            MonomialIdeal2::unit()
        );
        assert_eq!(lex_ideal_from_width(&[0, 1, 2]).unwrap(), ideal("x, y^3"));
    }

    #[test]
    fn forcing() {
        assert!(h_forces_lexsegment(&[1, 2, 2, 1, 1]).unwrap());
        assert!(!h_forces_lexsegment(&[1, 2, 3, 2, 1]).unwrap());
        assert!(w_forces_lexsegment(&[0, 0, 1, 3, 5]).unwrap());
        assert!(!w_forces_lexsegment(&[0, 0, 1, 4]).unwrap());
        // the jump into the full slice one past the end also counts
        assert!(!w_forces_lexsegment(&[0, 0, 1]).unwrap());
        assert!(!w_forces_lexsegment(&[0, 0, 3]).unwrap());
        assert!(matches!(
            w_forces_lexsegment(&[0, 1, 4]),
            Err(Error::InvalidWidth(_))
        ));
    }

    #[test]
    fn witnesses() {
        assert_eq!(
            non_lex_witness_from_h(&[1, 2, 3, 2, 1]).unwrap(),
            ideal("x^3, xy^2, y^5")
        );
        assert_eq!(
            non_lex_witness_from_h(&[1, 2, 2, 1]).unwrap(),
            ideal("x^2, y^3")
        );
        assert_eq!(
            non_lex_witness_from_h(&[1, 2, 2, 1, 1]),
            Err(Error::ForcingHolds)
        );
        let j = non_lex_witness_from_w(&[0, 0, 1, 4]).unwrap();
        assert_eq!(j, ideal("x^2, y^3"));
        assert_eq!(
            non_lex_witness_from_w(&[0, 0, 1, 3]),
            Err(Error::ForcingHolds)
        );
        assert!(matches!(
            non_lex_witness_from_w(&[0, 1, 4]),
            Err(Error::InvalidWidth(_))
        ));
        assert_eq!(
            non_lex_witness_from_w(&[0, 0, 3]).unwrap(),
            ideal("x^2, y^2")
        );
    }
}

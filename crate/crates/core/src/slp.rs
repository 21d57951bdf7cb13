//! The strong Lefschetz property of monomial artinian quotients of `k[x, y]`
//! with respect to `x + y`.
//!
//! Only the square pairs `h(d) = h(d+t) = d + 1` can fail to have maximal rank,
//! so a prime is bad exactly when it divides one of their closed-form
//! determinants.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::ideal::{Monomial2, MonomialIdeal2};
use crate::linalg::rank_mod_p;
use crate::macaulay::{h_forces_lexsegment, w_forces_lexsegment};
use crate::maps::{closed_form_det, multiplication_map_mod, square_pairs, FactoredDeterminant};
use crate::par::Execution;

/// A square pair whose map drops rank, with `|det N(d, d+t)|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub d: u32,
    pub t: u32,
    pub determinant: BigUint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub width_bound: u32,
    pub regularity_bound: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlpReport {
    pub ideal: MonomialIdeal2,
    /// The characteristic; `0` for characteristic zero.
    pub prime: u64,
    pub verdict: bool,
    /// All failing square pairs, ascending.
    pub witnesses: Vec<Witness>,
    pub bounds: Bounds,
}

/// Bad primes with the square pairs whose determinant each one divides.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadPrimeSet {
    pub primes: BTreeMap<u64, Vec<(u32, u32)>>,
}

impl BadPrimeSet {
    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.contains_key(&p)
    }

    pub fn primes(&self) -> Vec<u64> {
        self.primes.keys().copied().collect()
    }

    pub fn max(&self) -> Option<u64> {
        self.primes.keys().next_back().copied()
    }
}

fn check_characteristic(p: u64) -> Result<()> {
    if p != 0 && !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

fn require_artinian(ideal: &MonomialIdeal2) -> Result<u32> {
    ideal.regularity()
}

/// `max(w(reg), 1)`: every bad prime is smaller.
pub fn width_bound(ideal: &MonomialIdeal2) -> Result<u32> {
    let reg = require_artinian(ideal)?;
    Ok(ideal.width_at(reg).max(1))
}

/// `reg + 1`: every bad prime is smaller.
pub fn regularity_bound(ideal: &MonomialIdeal2) -> Result<u32> {
    Ok(require_artinian(ideal)? + 1)
}

pub fn bounds(ideal: &MonomialIdeal2) -> Result<Bounds> {
    Ok(Bounds {
        width_bound: width_bound(ideal)?,
        regularity_bound: regularity_bound(ideal)?,
    })
}

/// Closed-form determinants of every square pair.
pub fn square_determinants(
    ideal: &MonomialIdeal2,
    exec: Execution,
) -> Result<Vec<FactoredDeterminant>> {
    let pairs = square_pairs(ideal)?;
    exec.try_map(&pairs, |&(d, t)| closed_form_det(ideal, d, t))
}

pub fn has_slp(ideal: &MonomialIdeal2, p: u64) -> Result<SlpReport> {
    has_slp_with(ideal, p, Execution::Sequential)
}

pub fn has_slp_with(ideal: &MonomialIdeal2, p: u64, exec: Execution) -> Result<SlpReport> {
    check_characteristic(p)?;
    let bounds = bounds(ideal)?;
    let witnesses: Vec<Witness> = if p == 0 {
        Vec::new()
    } else {
        square_determinants(ideal, exec)?
            .into_iter()
            .filter(|f| f.divisible_by(p))
            .map(|f| Witness {
                d: f.d,
                t: f.t,
                determinant: f.value,
            })
            .collect()
    };
    Ok(SlpReport {
        ideal: ideal.clone(),
        prime: p,
        verdict: witnesses.is_empty(),
        witnesses,
        bounds,
    })
}

pub fn bad_primes(ideal: &MonomialIdeal2) -> Result<BadPrimeSet> {
    bad_primes_with(ideal, Execution::Sequential)
}

pub fn bad_primes_with(ideal: &MonomialIdeal2, exec: Execution) -> Result<BadPrimeSet> {
    let mut set = BadPrimeSet::default();
    for f in square_determinants(ideal, exec)? {
        for &p in f.prime_factorization.keys() {
            set.primes.entry(p).or_default().push((f.d, f.t));
        }
    }
    Ok(set)
}

/// Bad primes, failing with `InvariantViolation` if one of them reaches
/// either bound.
pub fn bad_primes_checked(ideal: &MonomialIdeal2) -> Result<BadPrimeSet> {
    let set = bad_primes(ideal)?;
    let b = bounds(ideal)?;
    if let Some(p) = set.max() {
        if p >= b.width_bound as u64 || p >= b.regularity_bound as u64 {
            return Err(Error::InvariantViolation(format!(
                "bad prime {p} of ({ideal}) violates {b:?}"
            )));
        }
    }
    Ok(set)
}

/// The SLP by definition: every map `×(x+y)^t : [R/I]_d -> [R/I]_{d+t}` with
/// `t >= 1` has maximal rank over `F_p`, by row reduction.
pub fn has_slp_by_rank(ideal: &MonomialIdeal2, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let reg = require_artinian(ideal)?;
    for d in 0..=reg {
        for e in d + 1..=reg {
            if !map_has_max_rank(ideal, d, e - d, p) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn map_has_max_rank(ideal: &MonomialIdeal2, d: u32, t: u32, p: u64) -> bool {
    let m = multiplication_map_mod(ideal, d, t, p);
    let expected = ideal.hilbert_at(d).min(ideal.hilbert_at(d + t)) as usize;
    rank_mod_p(m, p) == expected
}

/// Every consecutive map `×(x+y) : [R/I]_d -> [R/I]_{d+1}` has maximal rank over `F_p`.
pub fn consecutive_maps_max_rank(ideal: &MonomialIdeal2, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let reg = require_artinian(ideal)?;
    Ok((0..reg).all(|d| map_has_max_rank(ideal, d, 1, p)))
}

/// The smallest `j` in `[indeg, reg]` with positive lexsegment defect and
/// `w(j) - 1 = p`. Such a degree certifies that the SLP fails in characteristic `p`.
pub fn width_failure_degree(ideal: &MonomialIdeal2, p: u64) -> Result<Option<u32>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let reg = require_artinian(ideal)?;
    let indeg = ideal.indeg().unwrap_or(0);
    let j = (indeg..=reg).find(|&j| ideal.lex_defect(j) > 0 && ideal.width_at(j) as u64 == p + 1);
    if let Some(j) = j {
        if has_slp(ideal, p)?.verdict {
            return Err(Error::InvariantViolation(format!(
                "degree {j} certifies failure at {p} but ({ideal}) has the SLP"
            )));
        }
    }
    Ok(j)
}

/// The two sides of the width-sharpness criterion at `p = w(reg) - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthSharpness {
    pub prime: u64,
    /// `x^reg, y^reg ∈ I`.
    pub pure_powers: bool,
    /// The SLP fails in characteristic `prime`.
    pub fails_at_prime: bool,
}

impl WidthSharpness {
    /// Failure at `p` coincides with the presence of both pure powers.
    pub fn biconditional_holds(&self) -> bool {
        self.pure_powers == self.fails_at_prime
    }
}

/// For `p = w(reg) - 1` prime, compares "`x^reg, y^reg ∈ I`" with "the SLP
/// fails at `p`".
///
/// Pure powers force failure through [`width_failure_degree`] at `j = reg`,
/// which is checked. The converse does not hold in general: `(x^4, x^2y, y^3)`
/// has `w(3) - 1 = 2`, `x^3 ∉ I`, and `det N(1, 3) = 2`.
pub fn sharpness_width(ideal: &MonomialIdeal2) -> Result<WidthSharpness> {
    let reg = require_artinian(ideal)?;
    let w = ideal.width_at(reg);
    let p = (w as u64).saturating_sub(1);
    if !is_prime(p) {
        return Err(Error::PreconditionFailed(format!(
            "w(reg) - 1 = {} is not prime",
            w as i64 - 1
        )));
    }
    let out = WidthSharpness {
        prime: p,
        pure_powers: has_pure_powers(ideal, reg),
        fails_at_prime: bad_primes(ideal)?.contains(p),
    };
    if out.pure_powers && !out.fails_at_prime {
        return Err(Error::InvariantViolation(format!(
            "({ideal}) contains x^{reg} and y^{reg} but has the SLP at {p}"
        )));
    }
    Ok(out)
}

fn has_pure_powers(ideal: &MonomialIdeal2, e: u32) -> bool {
    ideal.contains(Monomial2::new(e, 0)) && ideal.contains(Monomial2::new(0, e))
}

/// Verdict for an ideal known only through its initial ideal `gin`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InitialIdealVerdict {
    /// What the pure-power criterion alone decides, if anything.
    pub from_pure_powers: Option<bool>,
    /// `has_slp(gin, p)`, which the SLP of the original ideal matches.
    pub from_initial_ideal: bool,
}

/// Decides the SLP in characteristic `p` of an ideal whose generic initial
/// ideal (lexicographic order) is the supplied monomial ideal.
///
/// `p = 0` or `p > reg` always succeed; `p <= reg` with `x^p, y^p ∈ gin` always
/// fails; `p = reg` prime without both powers succeeds. Other cases are left
/// to the determinants of `gin`.
pub fn slp_from_initial_ideal(gin: &MonomialIdeal2, p: u64) -> Result<InitialIdealVerdict> {
    check_characteristic(p)?;
    let reg = require_artinian(gin)? as u64;
    let from_pure_powers = if p == 0 || p > reg {
        Some(true)
    } else if has_pure_powers(gin, p as u32) {
        Some(false)
    } else if p == reg {
        Some(true)
    } else {
        None
    };
    let from_initial_ideal = has_slp(gin, p)?.verdict;
    if from_pure_powers.is_some_and(|v| v != from_initial_ideal) {
        return Err(Error::InvariantViolation(format!(
            "pure-power criterion and determinants disagree for ({gin}) at {p}"
        )));
    }
    Ok(InitialIdealVerdict {
        from_pure_powers,
        from_initial_ideal,
    })
}

/// SLP in every characteristic iff lexsegment; errors if the determinants disagree.
pub fn always_slp(ideal: &MonomialIdeal2) -> Result<bool> {
    let lex = ideal.is_lexsegment();
    let empty = bad_primes(ideal)?.is_empty();
    if lex != empty {
        return Err(Error::InvariantViolation(format!(
            "({ideal}): lexsegment {lex} but bad primes empty {empty}"
        )));
    }
    Ok(lex)
}

/// Every monomial ideal with Hilbert function `h` has the SLP in every characteristic.
pub fn h_forces_slp(h: &[u32]) -> Result<bool> {
    h_forces_lexsegment(h)
}

/// Every monomial ideal with width function `w` has the SLP in every characteristic.
pub fn w_forces_slp(w: &[u32]) -> Result<bool> {
    w_forces_lexsegment(w)
}

/// SLP of `(x^a, y^b)` for `b ∈ {2, 3}`, `a >= b`, in characteristic `p`:
/// for `b = 2` iff `p ∤ a`; for `b = 3` iff `p = 2` and `a ≡ 2 (mod 4)`, or
/// `p ≠ 2` and `a ≢ -1, 0, 1 (mod p)`. Checked against the determinants.
pub fn family_verdict_small(a: u32, b: u32, p: u64) -> Result<bool> {
    if !(b == 2 || b == 3) || a < b {
        return Err(Error::PreconditionFailed(format!(
            "need b in {{2, 3}} and a >= b, got a={a}, b={b}"
        )));
    }
    check_characteristic(p)?;
    let a64 = a as u64;
    let verdict = match (p, b) {
        (0, _) => true,
        (_, 2) => !a64.is_multiple_of(p),
        (2, _) => a64 % 4 == 2,
        _ => {
            let r = a64 % p;
            r != 0 && r != 1 && r != p - 1
        }
    };
    confirm(&MonomialIdeal2::complete_intersection(a, b), p, verdict)
}

/// SLP of `(x^d, y^d)`, `d >= 2`: iff `p = 0` or `2d - 2 < p^s` with `s` the
/// largest integer such that `p^{s-1}` divides `(2d-1)(2d+1)`. Checked against
/// the determinants.
pub fn family_verdict_dd(d: u32, p: u64) -> Result<bool> {
    if d < 2 {
        return Err(Error::PreconditionFailed(format!("need d >= 2, got {d}")));
    }
    check_characteristic(p)?;
    let verdict = p == 0 || {
        let mut n = (2 * d as u128 - 1) * (2 * d as u128 + 1);
        let p = p as u128;
        let mut ps = p;
        while n.is_multiple_of(p) {
            n /= p;
            ps *= p;
        }
        2 * d as u128 - 2 < ps
    };
    confirm(&MonomialIdeal2::complete_intersection(d, d), p, verdict)
}

fn confirm(ideal: &MonomialIdeal2, p: u64, verdict: bool) -> Result<bool> {
    let actual = has_slp(ideal, p)?.verdict;
    if actual != verdict {
        return Err(Error::InvariantViolation(format!(
            "closed-form verdict {verdict} for ({ideal}) at {p}, determinants say {actual}"
        )));
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str) -> MonomialIdeal2 {
        s.parse().unwrap()
    }

    #[test]
    fn verdicts() {
        let r = has_slp(&ideal("x^10, y^7"), 7).unwrap();
        assert!(!r.verdict);
        assert_eq!(
            r.witnesses
                .iter()
                .find(|w| (w.d, w.t) == (5, 5))
                .unwrap()
                .determinant,
            BigUint::from(210u32)
        );
        assert!(!has_slp(&ideal("x^2, y^3"), 3).unwrap().verdict);
        assert!(has_slp(&ideal("x^2, y^3"), 2).unwrap().verdict);
        for p in [0, 2, 3, 5, 7] {
            assert!(has_slp(&ideal("x^2, xy^2, y^4"), p).unwrap().verdict);
        }
        assert!(matches!(
            has_slp(&ideal("x^2, y^3"), 4),
            Err(Error::NotPrime(4))
        ));
        assert!(matches!(
            has_slp(&ideal("x^2"), 2),
            Err(Error::NotArtinian(_))
        ));
    }

    #[test]
    fn bad_prime_sets() {
        assert_eq!(bad_primes(&ideal("x^2, y^3")).unwrap().primes(), vec![3]);
        assert_eq!(
            bad_primes(&ideal("x^10, y^7")).unwrap().primes(),
            vec![2, 3, 5, 7, 11, 13]
        );
        assert!(bad_primes(&ideal("x^2, xy^2, y^4")).unwrap().is_empty());
        let seq = bad_primes_with(&ideal("x^10, y^7"), Execution::Sequential).unwrap();
        let par = bad_primes_with(&ideal("x^10, y^7"), Execution::Parallel).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn bound_values() {
        let i = ideal("x^6, x^3y, xy^4, y^5");
        assert_eq!(
            (width_bound(&i).unwrap(), regularity_bound(&i).unwrap()),
            (5, 6)
        );
        let i = ideal("x^10, y^7");
        assert_eq!(
            (width_bound(&i).unwrap(), regularity_bound(&i).unwrap()),
            (16, 16)
        );
        assert_eq!(width_bound(&ideal("x, y")).unwrap(), 1);
        assert_eq!(regularity_bound(&ideal("x, y")).unwrap(), 1);
    }

    #[test]
    fn width_failure() {
        assert_eq!(
            width_failure_degree(&ideal("x^3, y^4"), 5).unwrap(),
            Some(5)
        );
        assert_eq!(
            width_failure_degree(&ideal("x^2, xy^2, y^4"), 2).unwrap(),
            None
        );
        let j = width_failure_degree(&ideal("x^10, y^7"), 11)
            .unwrap()
            .unwrap();
        let i = ideal("x^10, y^7");
        assert_eq!(i.width_at(j), 12);
        assert!(i.lex_defect(j) > 0);
    }

    #[test]
    fn width_sharpness() {
        let s = sharpness_width(&ideal("x^3, y^4")).unwrap();
        assert!(s.pure_powers && s.fails_at_prime && s.prime == 5);
        assert!(matches!(
            sharpness_width(&ideal("x^4, y^2")),
            Err(Error::PreconditionFailed(_))
        ));
        let s = sharpness_width(&ideal("x^2, xy^2, y^4")).unwrap();
        assert!(s.biconditional_holds() && !s.pure_powers);
        // failure at w(reg) - 1 without the pure powers
        let s = sharpness_width(&ideal("x^4, x^2y, y^3")).unwrap();
        assert_eq!(s.prime, 2);
        assert!(!s.pure_powers && s.fails_at_prime);
        assert_eq!(
            width_failure_degree(&ideal("x^4, x^2y, y^3"), 2).unwrap(),
            Some(3)
        );
        assert!(!has_slp_by_rank(&ideal("x^4, x^2y, y^3"), 2).unwrap());
    }

    #[test]
    fn initial_ideal_entry_point() {
        // reg = 5 = p with both fifth powers: fails
        let v = slp_from_initial_ideal(&ideal("x^3, y^4"), 5).unwrap();
        assert_eq!(v.from_pure_powers, Some(false));
        assert!(!v.from_initial_ideal);
        let v = slp_from_initial_ideal(&ideal("x^3, y^4"), 7).unwrap();
        assert_eq!(v.from_pure_powers, Some(true));
        // reg 3 prime, y^3 not in the ideal: succeeds
        let v = slp_from_initial_ideal(&ideal("x^2, xy^2, y^4"), 3).unwrap();
        assert_eq!(v.from_pure_powers, Some(true));
        assert!(v.from_initial_ideal);
    }

    #[test]
    fn always() {
        assert!(always_slp(&ideal("x^2, xy^2, y^4")).unwrap());
        assert!(!always_slp(&ideal("x^3, y^3")).unwrap());
        assert_eq!(bad_primes(&ideal("x^3, y^3")).unwrap().primes(), vec![2, 3]);
        for a in 1..10 {
            assert!(always_slp(&MonomialIdeal2::complete_intersection(a, 1)).unwrap());
        }
    }

    #[test]
    fn forcing() {
        assert!(h_forces_slp(&[1, 2, 2, 1, 1]).unwrap());
        assert!(!h_forces_slp(&[1, 2, 3, 2, 1]).unwrap());
        assert!(!bad_primes(&ideal("x^3, xy^2, y^5")).unwrap().is_empty());
        assert!(w_forces_slp(&[0, 0, 1, 3, 5]).unwrap());
    }

    #[test]
    fn families() {
        assert!(!family_verdict_small(4, 2, 2).unwrap());
        assert!(family_verdict_small(4, 2, 3).unwrap());
        assert!(family_verdict_small(6, 3, 2).unwrap());
        assert!(!family_verdict_small(3, 3, 2).unwrap());
        assert!(!family_verdict_small(5, 3, 5).unwrap());
        assert!(family_verdict_dd(3, 5).unwrap());
        assert!(!family_verdict_dd(3, 3).unwrap());
        assert!(family_verdict_dd(7, 0).unwrap());
        for p in [2, 3, 5, 7] {
            assert!(!family_verdict_dd(p as u32, p).unwrap());
        }
        assert!(family_verdict_small(2, 4, 3).is_err());
    }

    #[test]
    fn sharpness_family() {
        for n in 1..=5 {
            let i = MonomialIdeal2::complete_intersection(1 << n, 2);
            assert_eq!(bad_primes(&i).unwrap().primes(), vec![2]);
            assert_eq!(width_bound(&i).unwrap(), (1 << n) + 1);
        }
    }

    #[test]
    fn rank_oracle_agrees() {
        for s in [
            "x^10, y^7",
            "x^3, y^3",
            "x^6, x^3y, xy^4, y^5",
            "x^2, xy^2, y^4",
        ] {
            let i = ideal(s);
            for p in [2, 3, 5, 7, 11, 13] {
                assert_eq!(
                    has_slp_by_rank(&i, p).unwrap(),
                    has_slp(&i, p).unwrap().verdict,
                    "{s} at {p}"
                );
                assert!(consecutive_maps_max_rank(&i, p).unwrap());
            }
        }
    }
}

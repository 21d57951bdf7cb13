//! Monomial artinian quotients of `k[x, y, z]`: the weak Lefschetz property
//! for `x + y + z`, its bad primes, and its relation to the strong Lefschetz
//! property of `k[x, y]/I` through `I + (z^t)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{factor_big, is_prime};
use crate::error::{Error, Result};
use crate::ideal::{Monomial2, MonomialIdeal2};
use crate::linalg::{diagonalize, rank_mod_p};
use crate::maps::multiplication_map;
use crate::par::Execution;
use crate::parse::parse_monomial_list;

/// Largest side of a matrix handed to integer diagonalization.
pub const MAX_DIAGONALIZE_DIM: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial3 {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Monomial3 {
    pub fn new(x: u32, y: u32, z: u32) -> Self {
        Monomial3 { x, y, z }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y + self.z
    }

    pub fn divides(self, other: Monomial3) -> bool {
        self.x <= other.x && self.y <= other.y && self.z <= other.z
    }

    fn exps(self) -> [u32; 3] {
        [self.x, self.y, self.z]
    }

    fn from_exps(e: [u32; 3]) -> Self {
        Monomial3::new(e[0], e[1], e[2])
    }
}

impl fmt::Display for Monomial3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        for (v, e) in ['x', 'y', 'z'].into_iter().zip(self.exps()) {
            match e {
                0 => {}
                1 => write!(f, "{v}")?,
                _ => write!(f, "{v}^{e}")?,
            }
        }
        Ok(())
    }
}

/// A monomial ideal of `k[x, y, z]` by its minimal generators, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MonomialIdeal3 {
    generators: Vec<Monomial3>,
}

impl MonomialIdeal3 {
    pub fn new(raw: impl IntoIterator<Item = Monomial3>) -> Self {
        let mut all: Vec<Monomial3> = raw.into_iter().collect();
        all.sort_by_key(|m| (m.degree(), *m));
        all.dedup();
        let mut generators: Vec<Monomial3> = Vec::new();
        for m in all {
            if !generators.iter().any(|g| g.divides(m)) {
                generators.push(m);
            }
        }
        generators.sort();
        MonomialIdeal3 { generators }
    }

    /// `I + (z^t)` for a bivariate `I`.
    pub fn from_bivariate(ideal: &MonomialIdeal2, t: u32) -> Self {
        MonomialIdeal3::new(
            ideal
                .generators()
                .iter()
                .map(|m| Monomial3::new(m.x, m.y, 0))
                .chain([Monomial3::new(0, 0, t)]),
        )
    }

    pub fn generators(&self) -> &[Monomial3] {
        &self.generators
    }

    pub fn contains(&self, m: Monomial3) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    fn pure_power(&self, var: usize) -> Option<u32> {
        self.generators
            .iter()
            .filter(|g| {
                let e = g.exps();
                (0..3).all(|k| k == var || e[k] == 0)
            })
            .map(|g| g.exps()[var])
            .min()
    }

    pub fn is_artinian(&self) -> bool {
        (0..3).all(|v| self.pure_power(v).is_some())
    }

    /// Standard monomials of degree `d`, ascending.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial3> {
        let mut out = Vec::new();
        for x in 0..=d {
            for y in 0..=d - x {
                let m = Monomial3::new(x, y, d - x - y);
                if !self.contains(m) {
                    out.push(m);
                }
            }
        }
        out
    }

    /// Exchanges the variable at position `var` with `z`.
    fn swap_with_z(&self, var: usize) -> Self {
        MonomialIdeal3::new(self.generators.iter().map(|g| {
            let mut e = g.exps();
            e.swap(var, 2);
            Monomial3::from_exps(e)
        }))
    }
}

impl fmt::Display for MonomialIdeal3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for MonomialIdeal3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let list = parse_monomial_list(s, &['x', 'y', 'z'])?;
        Ok(MonomialIdeal3::new(
            list.into_iter().map(|e| Monomial3::new(e[0], e[1], e[2])),
        ))
    }
}

impl Serialize for MonomialIdeal3 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn require_artinian3(ideal: &MonomialIdeal3) -> Result<()> {
    if ideal.is_artinian() {
        Ok(())
    } else {
        Err(Error::NotArtinian(ideal.to_string()))
    }
}

/// The h-vector of `S/J` up to its regularity.
pub fn hilbert3(ideal: &MonomialIdeal3) -> Result<Vec<u32>> {
    require_artinian3(ideal)?;
    if ideal.contains(Monomial3::default()) {
        return Err(Error::UnitIdeal);
    }
    let mut h = Vec::new();
    for d in 0.. {
        let n = ideal.standard_monomials(d).len() as u32;
        if n == 0 {
            break;
        }
        h.push(n);
    }
    Ok(h)
}

pub fn regularity3(ideal: &MonomialIdeal3) -> Result<u32> {
    Ok(hilbert3(ideal)?.len() as u32 - 1)
}

fn map_matrix(sources: &[Monomial3], targets: &[Monomial3]) -> Vec<Vec<i64>> {
    let index: HashMap<Monomial3, usize> =
        targets.iter().enumerate().map(|(k, &m)| (m, k)).collect();
    sources
        .iter()
        .map(|m| {
            let mut row = vec![0i64; targets.len()];
            for k in 0..3 {
                let mut e = m.exps();
                e[k] += 1;
                if let Some(&j) = index.get(&Monomial3::from_exps(e)) {
                    row[j] = 1;
                }
            }
            row
        })
        .collect()
}

/// `×(x+y+z) : [S/J]_d -> [S/J]_{d+1}`; rows are sources and columns targets,
/// both standard monomials in ascending order.
pub fn wlp3_matrix(ideal: &MonomialIdeal3, d: u32) -> Result<Vec<Vec<i64>>> {
    require_artinian3(ideal)?;
    Ok(map_matrix(
        &ideal.standard_monomials(d),
        &ideal.standard_monomials(d + 1),
    ))
}

fn rank_in_characteristic(matrix: &[Vec<i64>], p: u64) -> usize {
    if p == 0 {
        return diagonalize(matrix).rank;
    }
    let reduced = matrix
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    rank_mod_p(reduced, p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRank {
    pub d: u32,
    pub expected: usize,
    pub achieved: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wlp3Report {
    pub ideal: MonomialIdeal3,
    pub prime: u64,
    pub verdict: bool,
    /// `×(x+y+z)` from each degree `d < reg` to the next.
    pub ranks: Vec<DegreeRank>,
}

impl Wlp3Report {
    pub fn failing_degrees(&self) -> Vec<u32> {
        self.ranks
            .iter()
            .filter(|r| r.achieved < r.expected)
            .map(|r| r.d)
            .collect()
    }
}

pub fn has_wlp3(ideal: &MonomialIdeal3, p: u64) -> Result<Wlp3Report> {
    has_wlp3_with(ideal, p, Execution::Sequential)
}

pub fn has_wlp3_with(ideal: &MonomialIdeal3, p: u64, exec: Execution) -> Result<Wlp3Report> {
    if p != 0 && !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let h = hilbert3(ideal)?;
    let degrees: Vec<u32> = (0..h.len() as u32 - 1).collect();
    let ranks = exec.map(&degrees, |&d| {
        let m = map_matrix(
            &ideal.standard_monomials(d),
            &ideal.standard_monomials(d + 1),
        );
        DegreeRank {
            d,
            expected: h[d as usize].min(h[d as usize + 1]) as usize,
            achieved: rank_in_characteristic(&m, p),
        }
    });
    Ok(Wlp3Report {
        ideal: ideal.clone(),
        prime: p,
        verdict: ranks.iter().all(|r| r.achieved == r.expected),
        ranks,
    })
}

/// Primes in which the WLP fails, each with the degrees `d` where
/// `×(x+y+z) : [S/J]_d -> [S/J]_{d+1}` drops rank.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wlp3BadPrimes {
    pub primes: BTreeMap<BigUint, Vec<u32>>,
    /// Degrees where the map is not of maximal rank even over the rationals,
    /// so the WLP fails in every characteristic.
    pub rank_deficient_degrees: Vec<u32>,
}

impl Wlp3BadPrimes {
    pub fn prime_list(&self) -> Vec<BigUint> {
        self.primes.keys().cloned().collect()
    }

    /// Whether the WLP fails in characteristic `p` (`0` for the rationals).
    pub fn fails_at(&self, p: u64) -> bool {
        !self.rank_deficient_degrees.is_empty()
            || (p != 0 && self.primes.contains_key(&BigUint::from(p)))
    }
}

/// Bad primes from the elementary divisors of every consecutive map: the
/// product of the diagonal entries is the gcd of the maximal minors, so the
/// rank drops modulo `p` exactly when `p` divides one of them.
pub fn wlp3_bad_primes(ideal: &MonomialIdeal3) -> Result<Wlp3BadPrimes> {
    wlp3_bad_primes_with(ideal, Execution::Sequential)
}

pub fn wlp3_bad_primes_with(ideal: &MonomialIdeal3, exec: Execution) -> Result<Wlp3BadPrimes> {
    let h = hilbert3(ideal)?;
    let degrees: Vec<u32> = (0..h.len() as u32 - 1).collect();
    let per_degree = exec.try_map(&degrees, |&d| -> Result<(u32, bool, Vec<BigUint>)> {
        let m = map_matrix(
            &ideal.standard_monomials(d),
            &ideal.standard_monomials(d + 1),
        );
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        if rows > MAX_DIAGONALIZE_DIM || cols > MAX_DIAGONALIZE_DIM {
            return Err(Error::ResourceLimit(format!(
                "{rows}x{cols} map in degree {d} exceeds the {MAX_DIAGONALIZE_DIM} dimension limit"
            )));
        }
        let diag = diagonalize(&m);
        let expected = rows.min(cols);
        let mut primes = Vec::new();
        for e in diag.entries.iter().filter(|e| !e.is_one()) {
            let e = e.to_biguint().expect("absolute values");
            primes.extend(factor_big(&e)?.into_keys());
        }
        Ok((d, diag.rank < expected, primes))
    })?;
    let mut out = Wlp3BadPrimes::default();
    for (d, deficient, primes) in per_degree {
        if deficient {
            out.rank_deficient_degrees.push(d);
        }
        for p in primes {
            let degs = out.primes.entry(p).or_default();
            if degs.last() != Some(&d) {
                degs.push(d);
            }
        }
    }
    Ok(out)
}

/// Checks candidate primes by rank computations modulo each one; returns the
/// degrees where each prime causes a rank drop (empty when it does not).
pub fn verify_wlp3_primes(
    ideal: &MonomialIdeal3,
    primes: &[u64],
    exec: Execution,
) -> Result<BTreeMap<u64, Vec<u32>>> {
    if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::NotPrime(p));
    }
    let reports = exec.try_map(primes, |&p| has_wlp3(ideal, p))?;
    Ok(primes
        .iter()
        .zip(reports)
        .map(|(&p, r)| (p, r.failing_degrees()))
        .collect())
}

/// `J` with the one variable dividing exactly one minimal generator moved to
/// `z`, split as `I + (z^t)` with `I` bivariate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingleZSplit {
    /// `0`, `1`, `2` for `x`, `y`, `z`.
    pub variable: usize,
    pub bivariate: MonomialIdeal2,
    pub t: u32,
}

pub fn split_single_z_generator(ideal: &MonomialIdeal3) -> Result<SingleZSplit> {
    require_artinian3(ideal)?;
    for var in [2, 1, 0] {
        let involving: Vec<&Monomial3> = ideal
            .generators
            .iter()
            .filter(|g| g.exps()[var] > 0)
            .collect();
        if involving.len() != 1 {
            continue;
        }
        let swapped = ideal.swap_with_z(var);
        let t = swapped.pure_power(2).expect("artinian");
        let bivariate = MonomialIdeal2::new(
            swapped
                .generators
                .iter()
                .filter(|g| g.z == 0)
                .map(|g| Monomial2::new(g.x, g.y)),
        );
        return Ok(SingleZSplit {
            variable: var,
            bivariate,
            t,
        });
    }
    Err(Error::ShapeMismatch(format!(
        "no variable divides exactly one minimal generator of ({ideal})"
    )))
}

/// For `J` with exactly one generator involving some variable: when
/// `p >= reg(S/J)`, `S/J` has the WLP. Returns whether that implication holds
/// at `p` (vacuously true below the bound).
pub fn wlp_bound_holds(ideal: &MonomialIdeal3, p: u64) -> Result<bool> {
    split_single_z_generator(ideal)?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let reg = regularity3(ideal)? as u64;
    if p < reg {
        return Ok(true);
    }
    Ok(has_wlp3(ideal, p)?.verdict)
}

/// Maximal rank of `×(x+y)^t` on `[R/I]_d` and of `×(x+y+z)` on
/// `[S/(I+(z^t))]_{d+t-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeCheck {
    pub bivariate_max_rank: bool,
    pub trivariate_max_rank: bool,
}

impl BridgeCheck {
    pub fn holds(&self) -> bool {
        self.bivariate_max_rank == self.trivariate_max_rank
    }
}

pub fn cokernel_bridge(ideal: &MonomialIdeal2, t: u32, d: u32, p: u64) -> Result<BridgeCheck> {
    ideal.regularity()?;
    if t == 0 {
        return Err(Error::PreconditionFailed("t must be positive".into()));
    }
    if p != 0 && !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let biv: Vec<Vec<i64>> = multiplication_map(ideal, d, t)
        .iter()
        .map(|r| {
            r.iter()
                .map(|v: &BigInt| v.to_i64().expect("binomial fits"))
                .collect()
        })
        .collect();
    let biv_expected = ideal.hilbert_at(d).min(ideal.hilbert_at(d + t)) as usize;
    let j = MonomialIdeal3::from_bivariate(ideal, t);
    let e = d + t - 1;
    let tri = map_matrix(&j.standard_monomials(e), &j.standard_monomials(e + 1));
    let tri_expected = tri.len().min(j.standard_monomials(e + 1).len());
    let check = BridgeCheck {
        bivariate_max_rank: rank_in_characteristic(&biv, p) == biv_expected,
        trivariate_max_rank: rank_in_characteristic(&tri, p) == tri_expected,
    };
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal3(s: &str) -> MonomialIdeal3 {
        s.parse().unwrap()
    }

    #[test]
    fn hilbert() {
        assert_eq!(hilbert3(&ideal3("x, y, z")).unwrap(), vec![1]);
        assert_eq!(
            hilbert3(&ideal3("x^2, y^2, z^2")).unwrap(),
            vec![1, 3, 3, 1]
        );
        assert!(matches!(
            hilbert3(&ideal3("x^2, y^2")),
            Err(Error::NotArtinian(_))
        ));
        assert_eq!(ideal3("x^2, x^3y, y^2, z").to_string(), "z, y^2, x^2");
    }

    #[test]
    fn matrices() {
        let j = ideal3("x^2, y^2, z^2");
        let m = wlp3_matrix(&j, 1).unwrap();
        assert_eq!((m.len(), m[0].len()), (3, 3));
        for c in 0..3 {
            assert_eq!(m.iter().map(|r| r[c]).sum::<i64>(), 2);
        }
        assert!(wlp3_matrix(&ideal3("x, y, z"), 0).unwrap()[0].is_empty());
    }

    #[test]
    fn small_verdicts() {
        let j = ideal3("x^2, y^2, z^2");
        // x+y+z squared is 2(xy+xz+yz) in degree 2
        assert!(!has_wlp3(&j, 2).unwrap().verdict);
        for p in [0, 3, 5, 7] {
            assert!(has_wlp3(&j, p).unwrap().verdict);
        }
        let bad = wlp3_bad_primes(&j).unwrap();
        assert_eq!(bad.prime_list(), vec![BigUint::from(2u32)]);
        assert!(bad.rank_deficient_degrees.is_empty());
        assert!(wlp3_bad_primes(&ideal3("x, y, z"))
            .unwrap()
            .primes
            .is_empty());
    }

    #[test]
    fn single_z_generator() {
        let j = MonomialIdeal3::from_bivariate(&"x^6, x^3y, xy^4, y^5".parse().unwrap(), 3);
        let split = split_single_z_generator(&j).unwrap();
        assert_eq!((split.variable, split.t), (2, 3));
        let reg = regularity3(&j).unwrap();
        assert_eq!(reg, 5 + 3 - 1);
        assert!(wlp_bound_holds(&j, 11).unwrap());
        let j = ideal3("x^2, y^3, z^4");
        assert!(wlp_bound_holds(&j, 5).unwrap());
        // x plays the role of z
        let j = ideal3("x^3, y^2, y z, z^4");
        assert_eq!(split_single_z_generator(&j).unwrap().variable, 0);
        assert!(matches!(
            split_single_z_generator(&ideal3("x^20, y^20, z^20, x^3y^8z^13")),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn bridge() {
        let i: MonomialIdeal2 = "x^10, y^7".parse().unwrap();
        let b = cokernel_bridge(&i, 5, 5, 7).unwrap();
        assert!(b.holds() && !b.bivariate_max_rank);
        let i: MonomialIdeal2 = "x^2, xy^2, y^4".parse().unwrap();
        for (d, t) in [(0, 1), (1, 1), (1, 2), (0, 3)] {
            let b = cokernel_bridge(&i, t, d, 2).unwrap();
            assert!(b.holds() && b.bivariate_max_rank);
        }
        let i: MonomialIdeal2 = "x^2, y^3".parse().unwrap();
        let b = cokernel_bridge(&i, 3, 0, 3).unwrap();
        assert!(b.holds() && !b.trivariate_max_rank);
    }
}

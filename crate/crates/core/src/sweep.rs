//! Exhaustive and randomized verification drivers over families of ideals.
//!
//! Each driver checks one property on every ideal of a family and collects
//! counterexamples instead of stopping at the first one.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::codim3::{cokernel_bridge, regularity3, wlp3_bad_primes, MonomialIdeal3};
use crate::enumerate::{all_artinian_ideals, ideals_in_box, random_artinian_ideals};
use crate::ideal::MonomialIdeal2;
use crate::lattice::lgv_verify;
use crate::macaulay::{
    canonical_width, h_forces_lexsegment, non_lex_witness_from_h, non_lex_witness_from_w,
    w_forces_lexsegment,
};
use crate::maps::{build_matrix, closed_form_det, det_exact, square_pairs};
use crate::par::Execution;
use crate::slp::{
    bad_primes, bounds, consecutive_maps_max_rank, family_verdict_dd, family_verdict_small,
    has_slp, has_slp_by_rank, sharpness_width, width_failure_degree,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub name: String,
    /// Number of individual checks performed.
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Per-ideal outcome: number of checks and failure descriptions.
type Outcome = (usize, Vec<String>);

fn run<T, F>(name: &str, items: &[T], exec: Execution, check: F) -> SweepReport
where
    T: Sync,
    F: Fn(&T) -> Outcome + Sync + Send,
{
    let outcomes = exec.map(items, check);
    let mut report = SweepReport {
        name: name.to_string(),
        checked: 0,
        failures: Vec::new(),
    };
    for (n, f) in outcomes {
        report.checked += n;
        report.failures.extend(f);
    }
    report
}

fn error_outcome(ideal: &MonomialIdeal2, e: crate::Error) -> Outcome {
    (1, vec![format!("({ideal}): {e}")])
}

pub use crate::arith::primes_up_to;

/// No bad primes exactly for lexsegment ideals.
pub fn always_slp_sweep(max_reg: u32, exec: Execution) -> SweepReport {
    let ideals = all_artinian_ideals(max_reg);
    run(
        "bad primes empty iff lexsegment",
        &ideals,
        exec,
        |i| match bad_primes(i) {
            Ok(b) if b.is_empty() == i.is_lexsegment() => (1, vec![]),
            Ok(b) => (
                1,
                vec![format!(
                    "({i}): lexsegment {} but bad primes {:?}",
                    i.is_lexsegment(),
                    b.primes()
                )],
            ),
            Err(e) => error_outcome(i, e),
        },
    )
}

/// The closed form equals `|det|` from Bareiss on every square pair of
/// `count` seeded random ideals.
pub fn closed_form_sweep(count: usize, max_reg: u32, seed: u64, exec: Execution) -> SweepReport {
    let ideals = random_artinian_ideals(count, max_reg, seed);
    run(
        "closed form equals Bareiss determinant",
        &ideals,
        exec,
        |i| {
            let pairs = match square_pairs(i) {
                Ok(p) => p,
                Err(e) => return error_outcome(i, e),
            };
            let mut failures = Vec::new();
            for &(d, t) in &pairs {
                let closed = closed_form_det(i, d, t);
                let exact = build_matrix(i, d, t).map(|m| det_exact(&m));
                match (closed, exact) {
                    (Ok(c), Ok(x)) if BigInt::from(c.value.clone()) == x.abs() => {}
                    (Ok(c), Ok(x)) => failures.push(format!(
                        "({i}) at ({d},{t}): closed form {} vs Bareiss {x}",
                        c.value
                    )),
                    (Err(e), _) | (_, Err(e)) => failures.push(format!("({i}) at ({d},{t}): {e}")),
                }
            }
            (pairs.len(), failures)
        },
    )
}

/// Every consecutive map `×(x+y)` has maximal rank modulo each prime.
pub fn consecutive_rank_sweep(max_reg: u32, primes: &[u64], exec: Execution) -> SweepReport {
    let ideals = all_artinian_ideals(max_reg);
    run("consecutive maps have maximal rank", &ideals, exec, |i| {
        let mut failures = Vec::new();
        for &p in primes {
            match consecutive_maps_max_rank(i, p) {
                Ok(true) => {}
                Ok(false) => failures.push(format!("({i}) mod {p}")),
                Err(e) => failures.push(format!("({i}): {e}")),
            }
        }
        (primes.len(), failures)
    })
}

/// Every bad prime is below `w(reg)` and at most `reg`.
pub fn bounds_sweep(max_reg: u32, exec: Execution) -> SweepReport {
    let ideals = all_artinian_ideals(max_reg);
    run(
        "bad primes within the width and regularity bounds",
        &ideals,
        exec,
        |i| {
            let (b, bad, reg) = match (bounds(i), bad_primes(i), i.regularity()) {
                (Ok(b), Ok(bad), Ok(reg)) => (b, bad, reg),
                (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return error_outcome(i, e),
            };
            let failures = bad
                .primes()
                .into_iter()
                .filter(|&p| p >= b.width_bound as u64 || p > reg as u64)
                .map(|p| format!("({i}): bad prime {p} with {b:?}"))
                .collect();
            (1, failures)
        },
    )
}

/// Whenever `p = w(reg) - 1` is prime, the SLP fails at `p` iff
/// `x^reg, y^reg ∈ I`.
pub fn width_sharpness_sweep(max_reg: u32, exec: Execution) -> SweepReport {
    let ideals = all_artinian_ideals(max_reg);
    run(
        "width sharpness biconditional",
        &ideals,
        exec,
        |i| match sharpness_width(i) {
            Ok(s) if s.biconditional_holds() => (1, vec![]),
            Ok(s) => (
                1,
                vec![format!(
                    "({i}): p = {}, pure powers {}, fails at p {}",
                    s.prime, s.pure_powers, s.fails_at_prime
                )],
            ),
            Err(crate::Error::PreconditionFailed(_)) => (0, vec![]),
            Err(e) => error_outcome(i, e),
        },
    )
}

/// A degree certifying failure at `p` through the width and lexsegment defect
/// always comes with an actual failure, for every prime `p <= reg + 1`.
pub fn width_failure_sweep(max_reg: u32, exec: Execution) -> SweepReport {
    let ideals = all_artinian_ideals(max_reg);
    run("width failure degrees are failures", &ideals, exec, |i| {
        let reg = i.regularity().unwrap_or(0) as u64;
        let mut failures = Vec::new();
        let mut checked = 0;
        for p in primes_up_to(reg + 1) {
            checked += 1;
            if let Err(e) = width_failure_degree(i, p) {
                failures.push(format!("({i}) at {p}: {e}"));
            }
        }
        (checked, failures)
    })
}

/// Determinant factorization and direct row reduction of every map give the
/// same SLP verdict.
pub fn rank_oracle_sweep(max_reg: u32, primes: &[u64], exec: Execution) -> SweepReport {
    let ideals = all_artinian_ideals(max_reg);
    run(
        "determinant verdict matches row reduction",
        &ideals,
        exec,
        |i| {
            let mut failures = Vec::new();
            for &p in primes {
                match (has_slp(i, p), has_slp_by_rank(i, p)) {
                    (Ok(a), Ok(b)) if a.verdict == b => {}
                    (Ok(a), Ok(b)) => failures.push(format!("({i}) mod {p}: {} vs {b}", a.verdict)),
                    (Err(e), _) | (_, Err(e)) => failures.push(format!("({i}): {e}")),
                }
            }
            (primes.len(), failures)
        },
    )
}

/// Non-intersecting path families match `|det|` on every square pair.
pub fn lgv_sweep(max_reg: u32, cap: u64, exec: Execution) -> SweepReport {
    let ideals = all_artinian_ideals(max_reg);
    run("path families equal determinants", &ideals, exec, |i| {
        let pairs = square_pairs(i).unwrap_or_default();
        let failures = pairs
            .iter()
            .filter_map(|&(d, t)| match lgv_verify(i, d, t, cap) {
                Ok(true) => None,
                Ok(false) => Some(format!("({i}) at ({d},{t})")),
                Err(e) => Some(format!("({i}) at ({d},{t}): {e}")),
            })
            .collect();
        (pairs.len(), failures)
    })
}

/// `×(x+y)^t` on `[R/I]_d` has maximal rank iff `×(x+y+z)` does on
/// `[S/(I+(z^t))]_{d+t-1}`, for every square pair and prime.
pub fn bridge_sweep(max_reg: u32, primes: &[u64], exec: Execution) -> SweepReport {
    let ideals = all_artinian_ideals(max_reg);
    run("cokernel bridge", &ideals, exec, |i| {
        let pairs = square_pairs(i).unwrap_or_default();
        let mut failures = Vec::new();
        for &(d, t) in &pairs {
            for &p in primes {
                match cokernel_bridge(i, t, d, p) {
                    Ok(b) if b.holds() => {}
                    Ok(b) => failures.push(format!("({i}) at ({d},{t}) mod {p}: {b:?}")),
                    Err(e) => failures.push(format!("({i}) at ({d},{t}): {e}")),
                }
            }
        }
        (pairs.len() * primes.len(), failures)
    })
}

/// `S/(I+(z^t))` has the WLP in every characteristic `p >= reg(S/J)`: the
/// elementary divisors of all consecutive maps have no prime factor that
/// large and the maps have maximal rank over the rationals.
pub fn wlp_bound_sweep(max_reg: u32, max_t: u32, exec: Execution) -> SweepReport {
    let ideals = all_artinian_ideals(max_reg);
    run("WLP at or above the regularity", &ideals, exec, |i| {
        let mut failures = Vec::new();
        for t in 1..=max_t {
            let j = MonomialIdeal3::from_bivariate(i, t);
            match (regularity3(&j), wlp3_bad_primes(&j)) {
                (Ok(reg), Ok(bad)) => {
                    let reg = BigUint::from(reg);
                    let large: Vec<&BigUint> = bad.primes.keys().filter(|&p| *p >= reg).collect();
                    if !large.is_empty() || !bad.rank_deficient_degrees.is_empty() {
                        failures.push(format!(
                            "({j}): reg {reg}, bad primes {large:?}, rank deficient in {:?}",
                            bad.rank_deficient_degrees
                        ));
                    }
                }
                (Err(e), _) | (_, Err(e)) => failures.push(format!("({j}): {e}")),
            }
        }
        (max_t as usize, failures)
    })
}

/// `h_forces_lexsegment` agrees with checking every monomial ideal of the
/// family with that h-vector, and each witness is valid.
pub fn h_forcing_sweep(max_reg: u32, exec: Execution) -> SweepReport {
    let ideals = all_artinian_ideals(max_reg);
    let mut classes: HashMap<Vec<u32>, bool> = HashMap::new();
    for i in &ideals {
        let h = i.hilbert_function().expect("artinian").values;
        *classes.entry(h).or_insert(true) &= i.is_lexsegment();
    }
    let classes: Vec<(Vec<u32>, bool)> = BTreeMap::from_iter(classes).into_iter().collect();
    run("h forces lexsegment", &classes, exec, |(h, all_lex)| {
        let mut failures = Vec::new();
        match h_forces_lexsegment(h) {
            Ok(f) if f == *all_lex => {}
            Ok(f) => failures.push(format!("h={h:?}: predicate {f}, brute force {all_lex}")),
            Err(e) => failures.push(format!("h={h:?}: {e}")),
        }
        if !all_lex {
            match non_lex_witness_from_h(h) {
                Ok(w) => {
                    let ok = w
                        .hilbert_function()
                        .map(|f| f.values == *h)
                        .unwrap_or(false)
                        && !w.is_lexsegment();
                    if !ok {
                        failures.push(format!("h={h:?}: bad witness ({w})"));
                    }
                }
                Err(e) => failures.push(format!("h={h:?}: witness {e}")),
            }
        }
        (1, failures)
    })
}

/// Canonical width function of an artinian ideal.
pub fn canonical_width_of(ideal: &MonomialIdeal2) -> Vec<u32> {
    let top = ideal
        .x_power()
        .unwrap_or(0)
        .max(ideal.y_power().unwrap_or(0));
    canonical_width(&ideal.width_upto(top)).to_vec()
}

/// `w_forces_lexsegment` agrees with checking every monomial ideal sharing the
/// width function, for each width function of an ideal with `reg <= max_reg`.
///
/// Ideals sharing a canonical width of length `L` contain `x^L` and `y^L`, and
/// `L <= max_reg + 1`, so the `(max_reg+1)`-box holds every one of them.
pub fn w_forcing_sweep(max_reg: u32, exec: Execution) -> SweepReport {
    let mut classes: HashMap<Vec<u32>, bool> = HashMap::new();
    for i in ideals_in_box(max_reg + 1) {
        *classes.entry(canonical_width_of(&i)).or_insert(true) &= i.is_lexsegment();
    }
    let targets: Vec<Vec<u32>> = {
        let mut seen: Vec<Vec<u32>> = all_artinian_ideals(max_reg)
            .iter()
            .map(canonical_width_of)
            .collect();
        seen.sort();
        seen.dedup();
        seen
    };
    run("w forces lexsegment", &targets, exec, |w| {
        let all_lex = classes[w];
        let mut failures = Vec::new();
        match w_forces_lexsegment(w) {
            Ok(f) if f == all_lex => {}
            Ok(f) => failures.push(format!("w={w:?}: predicate {f}, brute force {all_lex}")),
            Err(e) => failures.push(format!("w={w:?}: {e}")),
        }
        if !all_lex {
            match non_lex_witness_from_w(w) {
                Ok(i) => {
                    if canonical_width_of(&i) != *w || i.is_lexsegment() {
                        failures.push(format!("w={w:?}: bad witness ({i})"));
                    }
                }
                Err(e) => failures.push(format!("w={w:?}: witness {e}")),
            }
        }
        (1, failures)
    })
}

/// The closed-form verdicts for `(x^a, y^b)` with `b ∈ {2, 3}`, `b <= a <= max_a`
/// and for `(x^d, y^d)` with `2 <= d <= max_d` agree with ranks modulo `p`;
/// `(x^p, y^p)` fails at `p`.
pub fn family_sweep(max_a: u32, max_d: u32, primes: &[u64], exec: Execution) -> SweepReport {
    // (a, b, p, whether to use the (d, d) formula)
    let mut cases: Vec<(u32, u32, u64, bool)> = Vec::new();
    for p in primes.iter().copied() {
        for b in 2..=3 {
            cases.extend((3..=max_a).map(|a| (a, b, p, false)));
        }
        cases.extend((2..=max_d).map(|d| (d, d, p, true)));
    }
    let mut report = run(
        "closed-form family verdicts",
        &cases,
        exec,
        |&(a, b, p, dd)| {
            let ideal = MonomialIdeal2::complete_intersection(a, b);
            let verdict = if dd {
                family_verdict_dd(a, p)
            } else {
                family_verdict_small(a, b, p)
            };
            let failures = match (verdict, has_slp_by_rank(&ideal, p)) {
                (Ok(v), Ok(r)) if v == r => vec![],
                (Ok(v), Ok(r)) => vec![format!("({ideal}) at {p}: closed form {v}, rank {r}")],
                (Err(e), _) | (_, Err(e)) => vec![format!("({ideal}) at {p}: {e}")],
            };
            (1, failures)
        },
    );
    for p in primes
        .iter()
        .copied()
        .filter(|&p| p >= 2 && p <= max_d as u64)
    {
        report.checked += 1;
        if !matches!(family_verdict_dd(p as u32, p), Ok(false)) {
            report
                .failures
                .push(format!("(x^{p}, y^{p}) does not fail at {p}"));
        }
    }
    report
}

/// `(x^{2^n}, y^2)` has bad primes exactly `{2}` for `1 <= n <= max_n`.
pub fn sharpness_family_sweep(max_n: u32, exec: Execution) -> SweepReport {
    let ns: Vec<u32> = (1..=max_n).collect();
    run("(x^(2^n), y^2) fails only at 2", &ns, exec, |&n| {
        let ideal = MonomialIdeal2::complete_intersection(1 << n, 2);
        match bad_primes(&ideal) {
            Ok(b) if b.primes() == [2] => (1, vec![]),
            Ok(b) => (1, vec![format!("({ideal}): bad primes {:?}", b.primes())]),
            Err(e) => error_outcome(&ideal, e),
        }
    })
}

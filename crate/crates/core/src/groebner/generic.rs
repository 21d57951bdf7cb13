//! The strong Lefschetz property of a homogeneous ideal over the algebraic
//! closure of `F_p`, with the Lefschetz element `x + c·y` for an indeterminate `c`.

use serde::{Deserialize, Serialize};

use crate::arith::binomial_mod;
use crate::error::{Error, Result};
use crate::ideal::{Monomial2, MonomialIdeal2};
use crate::linalg::rank_mod_p;
use crate::par::Execution;
use crate::parse::Term;

use super::buchberger::{buchberger, GroebnerBasis2};
use super::field::{FieldSpec, PrimeField, Rationals};
use super::poly::BivariatePoly;
use super::upoly::{rank_over_function_field, UPoly};

/// How the rank of one map over `F_p(c)` was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RankCertificate {
    /// The rank is already maximal at `c = value`.
    Specialization { value: u64 },
    /// Fraction-free elimination with polynomial entries.
    FunctionField,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRank {
    pub d: u32,
    pub t: u32,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub certificate: RankCertificate,
}

impl PairRank {
    pub fn is_max_rank(&self) -> bool {
        self.rank == self.rows.min(self.cols)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericSlpReport {
    pub prime: u64,
    pub initial_ideal: MonomialIdeal2,
    pub verdict: bool,
    /// One entry per pair `0 <= d < d + t <= reg`, for `ℓ = x + c·y`.
    pub pairs: Vec<PairRank>,
}

/// How many specializations `c = 0, 1, ...` to try before eliminating over `F_p(c)`.
const SPECIALIZATIONS: u64 = 16;

fn homogeneous_basis(gens: &[Vec<Term>], field: &PrimeField) -> Result<GroebnerBasis2<PrimeField>> {
    let polys = parse_polys(gens, field)?;
    if let Some(p) = polys
        .iter()
        .find(|p| !p.is_zero() && p.homogeneous_degree().is_none())
    {
        return Err(Error::NotHomogeneous(p.render(field)));
    }
    buchberger(&polys, field)
}

fn parse_polys<F: super::field::Field>(
    gens: &[Vec<Term>],
    field: &F,
) -> Result<Vec<BivariatePoly<F::Elem>>> {
    gens.iter()
        .map(|t| BivariatePoly::from_parsed(field, t))
        .collect()
}

/// Normal forms of the degree-`e` monomials `x^a y^{e-a}` as coordinate
/// vectors on the standard monomials of degree `e`.
fn normal_forms(gb: &GroebnerBasis2<PrimeField>, e: u32) -> Vec<Vec<u64>> {
    let basis = gb.quotient_basis(e);
    let f = &gb.field;
    (0..=e)
        .map(|a| {
            let nf = gb.normal_form(&BivariatePoly::monomial(f, Monomial2::in_degree(e, a)));
            basis
                .iter()
                .map(|&m| nf.coefficient(m).copied().unwrap_or(0))
                .collect()
        })
        .collect()
}

/// Matrix of `×ℓ^t : [R/I]_d -> [R/I]_{d+t}` with entries in `F_p[c]`, for
/// `ℓ = x + c·y`, or `ℓ = y + c·x` when `swap` is set.
fn generic_matrix(
    gb: &GroebnerBasis2<PrimeField>,
    nf: &[Vec<u64>],
    d: u32,
    t: u32,
    swap: bool,
) -> Vec<Vec<UPoly>> {
    let p = gb.field.p();
    let cols = nf.first().map_or(0, Vec::len);
    gb.quotient_basis(d)
        .iter()
        .map(|m| {
            (0..cols)
                .map(|j| {
                    // ℓ^t = Σ_k C(t,k) c^k (y^k x^{t-k}), or with x and y exchanged
                    let coeffs = (0..=t)
                        .map(|k| {
                            let a = if swap { m.x + k } else { m.x + t - k };
                            binomial_mod(t as u64, k as u64, p) * nf[a as usize][j] % p
                        })
                        .collect();
                    UPoly::from_coeffs(coeffs)
                })
                .collect()
        })
        .collect()
}

fn generic_rank(matrix: Vec<Vec<UPoly>>, p: u64) -> (usize, RankCertificate) {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let full = rows.min(cols);
    for c in 0..SPECIALIZATIONS.min(p) {
        let m: Vec<Vec<u64>> = matrix
            .iter()
            .map(|r| r.iter().map(|v| v.eval(c, p)).collect())
            .collect();
        if rank_mod_p(m, p) == full {
            return (full, RankCertificate::Specialization { value: c });
        }
    }
    (
        rank_over_function_field(matrix, p),
        RankCertificate::FunctionField,
    )
}

fn pair_ranks(
    gb: &GroebnerBasis2<PrimeField>,
    reg: u32,
    swap: bool,
    exec: Execution,
) -> Vec<PairRank> {
    let p = gb.field.p();
    let forms: Vec<Vec<Vec<u64>>> = (0..=reg).map(|e| normal_forms(gb, e)).collect();
    let pairs: Vec<(u32, u32)> = (0..=reg)
        .flat_map(|d| (d + 1..=reg).map(move |e| (d, e - d)))
        .collect();
    exec.map(&pairs, |&(d, t)| {
        let m = generic_matrix(gb, &forms[(d + t) as usize], d, t, swap);
        let rows = m.len();
        let cols = m.first().map_or(gb.quotient_basis(d + t).len(), Vec::len);
        let (rank, certificate) = generic_rank(m, p);
        PairRank {
            d,
            t,
            rows,
            cols,
            rank,
            certificate,
        }
    })
}

/// Decides the SLP of `R/I` over the algebraic closure of `F_p` for the
/// homogeneous ideal generated by `gens`.
///
/// Both `x + c·y` and `y + c·x` are evaluated and must agree.
pub fn has_slp_generic(gens: &[Vec<Term>], p: u64) -> Result<GenericSlpReport> {
    has_slp_generic_with(gens, p, Execution::Sequential)
}

pub fn has_slp_generic_with(
    gens: &[Vec<Term>],
    p: u64,
    exec: Execution,
) -> Result<GenericSlpReport> {
    let field = PrimeField::new(p)?;
    let gb = homogeneous_basis(gens, &field)?;
    let initial_ideal = gb.initial_ideal();
    let reg = initial_ideal.regularity()?;
    let pairs = pair_ranks(&gb, reg, false, exec);
    let verdict = pairs.iter().all(PairRank::is_max_rank);
    let swapped = pair_ranks(&gb, reg, true, exec);
    if swapped.iter().all(PairRank::is_max_rank) != verdict {
        return Err(Error::InvariantViolation(format!(
            "x + c·y and y + c·x give different verdicts in characteristic {p}"
        )));
    }
    Ok(GenericSlpReport {
        prime: p,
        initial_ideal,
        verdict,
        pairs,
    })
}

/// `Some(true)` when the initial ideal is lexsegment, which transfers the SLP
/// from `in(I)` to `I`; `None` otherwise, since the converse is unavailable.
pub fn slp_via_initial(gens: &[Vec<Term>], field: FieldSpec) -> Result<Option<bool>> {
    let initial = groebner_summary(gens, field)?.initial_ideal;
    initial.regularity()?;
    Ok(initial.is_lexsegment().then_some(true))
}

/// A Gröbner basis with its initial ideal and, when artinian, the Hilbert function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerSummary {
    pub field: FieldSpec,
    pub basis: Vec<String>,
    pub initial_ideal: MonomialIdeal2,
    pub artinian: bool,
    pub hilbert: Option<Vec<u32>>,
    pub lexsegment: bool,
}

pub fn groebner_summary(gens: &[Vec<Term>], field: FieldSpec) -> Result<GroebnerSummary> {
    let (basis, initial_ideal) = match field {
        FieldSpec::Prime(p) => {
            let f = PrimeField::new(p)?;
            let gb = buchberger(&parse_polys(gens, &f)?, &f)?;
            (gb.render(), gb.initial_ideal())
        }
        FieldSpec::Rationals => {
            let gb = buchberger(&parse_polys(gens, &Rationals)?, &Rationals)?;
            (gb.render(), gb.initial_ideal())
        }
    };
    let artinian = initial_ideal.is_artinian();
    let hilbert = if artinian && !initial_ideal.is_unit() {
        Some(initial_ideal.hilbert_function()?.values)
    } else {
        None
    };
    Ok(GroebnerSummary {
        field,
        basis,
        lexsegment: initial_ideal.is_lexsegment(),
        initial_ideal,
        artinian,
        hilbert,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial_list;

    fn gens(s: &str) -> Vec<Vec<Term>> {
        parse_polynomial_list(s).unwrap()
    }

    #[test]
    fn complete_intersections() {
        for p in [2, 3, 5] {
            assert!(
                !has_slp_generic(&gens(&format!("x^{p}, y^{p}")), p)
                    .unwrap()
                    .verdict
            );
        }
        assert!(has_slp_generic(&gens("x^2, y^3"), 2).unwrap().verdict);
        assert!(!has_slp_generic(&gens("x^2, y^3"), 3).unwrap().verdict);
    }

    #[test]
    fn non_monomial() {
        for b in 2..=5 {
            for p in [2, 3, 5] {
                let g = gens(&format!("x^2, xy^{} + y^{b}", b - 1));
                assert!(has_slp_generic(&g, p).unwrap().verdict, "b={b} p={p}");
            }
        }
        assert!(
            has_slp_generic(&gens("x^3, x^2y + y^3"), 3)
                .unwrap()
                .verdict
        );
    }

    #[test]
    fn summaries() {
        let s = groebner_summary(&gens("x^2 + y^2, x^3 + y^3"), FieldSpec::Rationals).unwrap();
        assert_eq!(s.hilbert, Some(vec![1, 2, 2, 1]));
        assert!(s.lexsegment);
        let s = groebner_summary(&gens("x^2 + y^2, x^3 + y^3"), FieldSpec::Prime(2)).unwrap();
        assert!(!s.artinian);
        assert_eq!(s.hilbert, None);
        let s = groebner_summary(&gens("x, y"), FieldSpec::Rationals).unwrap();
        assert_eq!(s.hilbert, Some(vec![1]));
    }

    #[test]
    fn via_initial() {
        let g = gens("x^2 + y^2, x^3 + y^3");
        assert_eq!(
            slp_via_initial(&g, FieldSpec::Prime(3)).unwrap(),
            Some(true)
        );
        assert!(matches!(
            slp_via_initial(&g, FieldSpec::Prime(2)),
            Err(Error::NotArtinian(_))
        ));
        let g = gens("x^5, x^3y^2 + y^5");
        assert_eq!(slp_via_initial(&g, FieldSpec::Prime(5)).unwrap(), None);
        assert!(matches!(
            has_slp_generic(&gens("x^2 + y, y^2"), 3),
            Err(Error::NotHomogeneous(_))
        ));
    }
}

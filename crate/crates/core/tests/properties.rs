use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

use lefschetz_core::codim3::{has_wlp3, wlp3_bad_primes, Monomial3, MonomialIdeal3};
use lefschetz_core::enumerate::from_column_heights;
use lefschetz_core::groebner::{groebner_summary, has_slp_generic, FieldSpec};
use lefschetz_core::lattice::{lgv_compare, DEFAULT_CAP};
use lefschetz_core::macaulay::{
    h_forces_lexsegment, is_valid_hilbert, lex_ideal_from_hilbert, non_lex_witness_from_h,
};
use lefschetz_core::maps::{build_matrix, closed_form_det, det_exact, square_pairs};
use lefschetz_core::parse::parse_polynomial_list;
use lefschetz_core::slp::{bad_primes_with, has_slp, has_slp_by_rank};
use lefschetz_core::{Execution, MonomialIdeal2};

const SMALL_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

/// Artinian ideals given by nonincreasing column heights.
fn ideal(max_cols: usize, max_height: u32) -> impl Strategy<Value = MonomialIdeal2> {
    prop::collection::vec(1..=max_height, 1..=max_cols).prop_map(|mut h| {
        h.sort_unstable_by(|a, b| b.cmp(a));
        from_column_heights(&h)
    })
}

fn ideal3() -> impl Strategy<Value = MonomialIdeal3> {
    (
        2u32..6,
        2u32..6,
        2u32..6,
        prop::collection::vec((0u32..5, 0u32..5, 0u32..5), 0..3),
    )
        .prop_map(|(a, b, c, extra)| {
            let mut gens = vec![
                Monomial3::new(a, 0, 0),
                Monomial3::new(0, b, 0),
                Monomial3::new(0, 0, c),
            ];
            gens.extend(extra.into_iter().map(|(x, y, z)| Monomial3::new(x, y, z)));
            MonomialIdeal3::new(gens)
        })
        .prop_filter("proper ideal", |j| {
            !j.generators().iter().any(|g| g.degree() == 0)
        })
}

fn form(deg: u32, coeffs: &[i32]) -> String {
    let mut out = String::new();
    for (i, &c) in (0..=deg).zip(coeffs).filter(|(_, &c)| c != 0) {
        let sign = if c < 0 {
            "-"
        } else if out.is_empty() {
            ""
        } else {
            "+"
        };
        out.push_str(&format!(" {sign} {}*x^{}*y^{}", c.abs(), deg - i, i));
    }
    if out.is_empty() {
        format!("x^{deg}")
    } else {
        out
    }
}

/// Hilbert function of a complete intersection of type `(a, b)`.
fn complete_intersection_h(a: u32, b: u32) -> Vec<u32> {
    (0..a + b - 1)
        .map(|d| (0..a).filter(|&i| i <= d && d - i < b).count() as u32)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ideal_text_round_trips(i in ideal(8, 8)) {
        let back: MonomialIdeal2 = i.to_string().parse().unwrap();
        prop_assert_eq!(back, i);
    }

    #[test]
    fn hilbert_and_width_are_consistent(i in ideal(9, 9)) {
        let h = i.hilbert_function().unwrap();
        prop_assert!(is_valid_hilbert(&h.values));
        for d in 0..=h.reg + 1 {
            let w = i.width_at(d);
            prop_assert_eq!(w + h.at(d), d + 1 + i.lex_defect(d));
            prop_assert_eq!(i.standard_monomials(d).len() as u32, h.at(d));
        }
        prop_assert_eq!(i.lex_defect(h.reg + 1), 0);
    }

    #[test]
    fn closed_form_matches_bareiss(i in ideal(12, 12)) {
        for (d, t) in square_pairs(&i).unwrap() {
            let closed = closed_form_det(&i, d, t).unwrap();
            let exact = det_exact(&build_matrix(&i, d, t).unwrap());
            prop_assert_eq!(BigInt::from(closed.value.clone()), exact.abs());
            let rebuilt: BigInt = closed
                .prime_factorization
                .iter()
                .map(|(&p, &e)| BigInt::from(p).pow(e))
                .product();
            prop_assert_eq!(rebuilt, exact.abs());
        }
    }

    #[test]
    fn execution_modes_agree(i in ideal(10, 10)) {
        let seq = bad_primes_with(&i, Execution::Sequential).unwrap();
        let par = bad_primes_with(&i, Execution::Parallel).unwrap();
        prop_assert_eq!(seq, par);
    }

    #[test]
    fn determinant_verdict_matches_rank(i in ideal(7, 7)) {
        let bad = bad_primes_with(&i, Execution::Sequential).unwrap();
        for p in SMALL_PRIMES {
            let verdict = has_slp(&i, p).unwrap().verdict;
            prop_assert_eq!(verdict, !bad.contains(p));
            prop_assert_eq!(verdict, has_slp_by_rank(&i, p).unwrap(), "p={}", p);
        }
        prop_assert_eq!(bad.is_empty(), i.is_lexsegment());
    }

    #[test]
    fn generic_form_agrees_on_monomial_input(i in ideal(6, 6), k in 0usize..4) {
        let p = SMALL_PRIMES[k];
        let gens = parse_polynomial_list(&i.to_string()).unwrap();
        let generic = has_slp_generic(&gens, p).unwrap();
        prop_assert_eq!(&generic.initial_ideal, &i);
        prop_assert_eq!(generic.verdict, has_slp(&i, p).unwrap().verdict);
    }

    #[test]
    fn lattice_families_count_determinant(i in ideal(8, 8)) {
        for (d, t) in square_pairs(&i).unwrap() {
            prop_assert!(lgv_compare(&i, d, t, DEFAULT_CAP).unwrap().agree());
        }
    }

    #[test]
    fn two_forms_give_complete_intersection(
        a in 1u32..5,
        b in 1u32..5,
        f in prop::collection::vec(-3i32..=3, 5),
        g in prop::collection::vec(-3i32..=3, 5),
        field in prop::sample::select(vec![0u64, 2, 3, 5, 101]),
    ) {
        let text = format!("{}, {}", form(a, &f), form(b, &g));
        let gens = parse_polynomial_list(&text).unwrap();
        let s = groebner_summary(&gens, FieldSpec::from_characteristic(field).unwrap()).unwrap();
        if s.artinian {
            let h = s.hilbert.clone().unwrap();
            prop_assert_eq!(h, complete_intersection_h(a, b), "{}", text);
            prop_assert_eq!(s.initial_ideal.is_artinian(), true);
        }
    }

    #[test]
    fn lex_ideal_realizes_valid_hilbert(i in ideal(8, 8)) {
        let h = i.hilbert_function().unwrap().values;
        let lex = lex_ideal_from_hilbert(&h).unwrap();
        prop_assert_eq!(lex.hilbert_function().unwrap().values, h.clone());
        prop_assert!(lex.is_lexsegment());
        if !h_forces_lexsegment(&h).unwrap() {
            let w = non_lex_witness_from_h(&h).unwrap();
            prop_assert_eq!(w.hilbert_function().unwrap().values, h);
            prop_assert!(!w.is_lexsegment());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn wlp3_bad_primes_match_per_prime(j in ideal3()) {
        let bad = wlp3_bad_primes(&j).unwrap();
        for p in lefschetz_core::arith::primes_up_to(60) {
            prop_assert_eq!(!has_wlp3(&j, p).unwrap().verdict, bad.fails_at(p), "{} p={}", j, p);
        }
        prop_assert_eq!(has_wlp3(&j, 0).unwrap().verdict, bad.rank_deficient_degrees.is_empty());
    }
}

use std::time::Instant;

use lefschetz_core::groebner::{groebner_summary, has_slp_generic, slp_via_initial, FieldSpec};
use lefschetz_core::parse::parse_polynomial_list;
use lefschetz_core::MonomialIdeal2;

const FIELDS: [u64; 6] = [0, 2, 3, 5, 7, 101];

fn y_pow(e: u32) -> String {
    match e {
        0 => String::new(),
        1 => "y".to_string(),
        _ => format!("y^{e}"),
    }
}

fn x_pow(e: u32) -> String {
    match e {
        0 => String::new(),
        1 => "x".to_string(),
        _ => format!("x^{e}"),
    }
}

fn mono(a: u32, b: u32) -> String {
    format!("{}{}", x_pow(a), y_pow(b))
}

fn summary(gens: &str, p: u64) -> lefschetz_core::groebner::GroebnerSummary {
    let g = parse_polynomial_list(gens).unwrap();
    groebner_summary(&g, FieldSpec::from_characteristic(p).unwrap()).unwrap()
}

#[test]
fn first_small_family_basis() {
    for b in 2..=8 {
        let gens = format!("x^2, {} + y^{b}", mono(1, b - 1));
        let expected = vec![
            "x^2".to_string(),
            format!("{} + y^{b}", mono(1, b - 1)),
            format!("y^{}", b + 1),
        ];
        let initial: MonomialIdeal2 = format!("x^2, {}, y^{}", mono(1, b - 1), b + 1)
            .parse()
            .unwrap();
        for p in FIELDS {
            let s = summary(&gens, p);
            assert_eq!(s.basis, expected, "b={b} p={p}");
            assert_eq!(s.initial_ideal, initial);
            assert!(s.artinian && s.lexsegment);
        }
    }
}

#[test]
fn second_small_family_basis() {
    for b in 3..=8 {
        let gens = format!("x^3, {} + y^{b}", mono(2, b - 2));
        let expected = vec![
            "x^3".to_string(),
            format!("{} + y^{b}", mono(2, b - 2)),
            mono(1, b),
            format!("y^{}", b + 2),
        ];
        let initial: MonomialIdeal2 =
            format!("x^3, {}, {}, y^{}", mono(2, b - 2), mono(1, b), b + 2)
                .parse()
                .unwrap();
        for p in FIELDS {
            let s = summary(&gens, p);
            assert_eq!(s.basis, expected, "b={b} p={p}");
            assert_eq!(s.initial_ideal, initial);
            assert!(s.artinian && s.lexsegment);
        }
    }
}

#[test]
fn sum_of_powers_depends_on_characteristic() {
    let gens = "x^2 + y^2, x^3 + y^3";
    let s = summary(gens, 2);
    assert!(!s.artinian);
    assert_eq!(s.hilbert, None);
    for p in [0, 3, 5, 7, 11, 13] {
        let s = summary(gens, p);
        assert_eq!(
            s.basis,
            ["x^2 + y^2", "xy^2 - y^3", "y^4"]
                .map(String::from)
                .to_vec(),
            "p={p}"
        );
        assert_eq!(s.initial_ideal, "x^2, xy^2, y^4".parse().unwrap());
        assert_eq!(s.hilbert, Some(vec![1, 2, 2, 1]));
        assert!(s.lexsegment);
        let g = parse_polynomial_list(gens).unwrap();
        assert_eq!(
            slp_via_initial(&g, FieldSpec::from_characteristic(p).unwrap()).unwrap(),
            Some(true)
        );
    }
}

fn conjecture_gens(p: u32) -> String {
    format!("x^{p}, {} + y^{p}", mono(p.div_ceil(2), (p - 1) / 2))
}

#[test]
fn conjecture_ideal_bases() {
    for p in [3u32, 5, 7, 11, 13] {
        let expected = vec![
            format!("x^{p}"),
            format!("{} + y^{p}", mono(p.div_ceil(2), (p - 1) / 2)),
            mono((p - 1) / 2, p),
            format!("y^{}", (3 * p).div_ceil(2)),
        ];
        for q in [0, 2, 3, 5, 7, 11, 13] {
            let s = summary(&conjecture_gens(p), q);
            assert_eq!(s.basis, expected, "p={p} char={q}");
            assert!(s.artinian);
            assert_eq!(s.lexsegment, p == 3, "p={p}");
        }
    }
}

#[test]
fn conjecture_instances_have_slp() {
    for p in [3u32, 5, 7, 11, 13] {
        let start = Instant::now();
        let g = parse_polynomial_list(&conjecture_gens(p)).unwrap();
        let report = has_slp_generic(&g, p as u64).unwrap();
        assert!(report.verdict, "p={p}");
        // the monomial complete intersection of the same type fails
        let ci = parse_polynomial_list(&format!("x^{p}, y^{p}")).unwrap();
        assert!(!has_slp_generic(&ci, p as u64).unwrap().verdict, "p={p}");
        eprintln!(
            "p={p}: {} pairs in {:?}",
            report.pairs.len(),
            start.elapsed()
        );
    }
}

#[test]
#[ignore = "slow: primes up to 41"]
fn conjecture_instances_up_to_41() {
    for p in [17u32, 19, 23, 29, 31, 37, 41] {
        let start = Instant::now();
        let g = parse_polynomial_list(&conjecture_gens(p)).unwrap();
        assert!(has_slp_generic(&g, p as u64).unwrap().verdict, "p={p}");
        eprintln!("p={p}: {:?}", start.elapsed());
    }
}

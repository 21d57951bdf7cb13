use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use lefschetz_core::codim3::{wlp3_bad_primes_with, MonomialIdeal3};
use lefschetz_core::enumerate::all_artinian_ideals;
use lefschetz_core::slp::bad_primes_with;
use lefschetz_core::sweep::{always_slp_sweep, closed_form_sweep, consecutive_rank_sweep};
use lefschetz_core::{Execution, MonomialIdeal2};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn exhaustive(c: &mut Criterion) {
    let mut g = c.benchmark_group("exhaustive");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new("always_slp", name), &exec, |b, &exec| {
            b.iter(|| assert!(always_slp_sweep(6, exec).passed()))
        });
        g.bench_with_input(
            BenchmarkId::new("consecutive_rank", name),
            &exec,
            |b, &exec| b.iter(|| assert!(consecutive_rank_sweep(5, &[2, 3, 5], exec).passed())),
        );
        g.bench_with_input(BenchmarkId::new("closed_form", name), &exec, |b, &exec| {
            b.iter(|| assert!(closed_form_sweep(200, 12, 1, exec).passed()))
        });
    }
    g.finish();
}

fn square_pair_scan(c: &mut Criterion) {
    let mut g = c.benchmark_group("square_pairs");
    let ideals = all_artinian_ideals(7);
    let big: MonomialIdeal2 = "x^40, x^25y^3, x^12y^11, x^5y^20, y^31".parse().unwrap();
    for (name, exec) in MODES {
        g.bench_with_input(
            BenchmarkId::new("bad_primes_reg7", name),
            &exec,
            |b, &exec| {
                b.iter(|| {
                    ideals
                        .iter()
                        .filter(|i| !bad_primes_with(i, exec).unwrap().is_empty())
                        .count()
                })
            },
        );
        g.bench_with_input(
            BenchmarkId::new("bad_primes_single", name),
            &exec,
            |b, &exec| b.iter(|| bad_primes_with(&big, exec).unwrap()),
        );
    }
    g.finish();
}

fn codim3(c: &mut Criterion) {
    let mut g = c.benchmark_group("wlp3");
    g.sample_size(10);
    let j: MonomialIdeal3 = "x^10, y^10, z^10, x^2y^4z^5".parse().unwrap();
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new("bad_primes", name), &exec, |b, &exec| {
            b.iter(|| wlp3_bad_primes_with(&j, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, exhaustive, square_pair_scan, codim3);
criterion_main!(benches);

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hankel_bench::catalan_hankel;
use hankel_core::{cigler_matrix, det_bareiss, det_laplace, eval_general};

fn elimination_vs_formula(c: &mut Criterion) {
    let mut group = c.benchmark_group("catalan_hankel_r5");
    group.sample_size(20);
    for n in [10usize, 25, 50, 100] {
        let m = catalan_hankel(n, 5);
        group.bench_with_input(BenchmarkId::new("bareiss", n), &m, |b, m| {
            b.iter(|| det_bareiss(black_box(m)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("cigler", n), &n, |b, &n| {
            b.iter(|| det_bareiss(&cigler_matrix(black_box(n), 5)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("closed_form", n), &n, |b, &n| {
            b.iter(|| eval_general(black_box(n), 5).unwrap())
        });
    }
    group.finish();
}

fn laplace_vs_bareiss(c: &mut Criterion) {
    let mut group = c.benchmark_group("small_determinants");
    for n in [3usize, 5, 7] {
        let m = catalan_hankel(n, 2);
        group.bench_with_input(BenchmarkId::new("laplace", n), &m, |b, m| {
            b.iter(|| det_laplace(black_box(m)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("bareiss", n), &m, |b, m| {
            b.iter(|| det_bareiss(black_box(m)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, elimination_vs_formula, laplace_vs_bareiss);
criterion_main!(benches);

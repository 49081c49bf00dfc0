//! Engine timing: explicit vs cofactor vs permutation, and (with the
//! `parallel` feature) the sequential vs rayon permutation expansion.
//!
//! Run `cargo bench -p cubedet` for the parallel build and
//! `cargo bench -p cubedet --no-default-features` for the sequential one;
//! criterion writes comparable reports under `target/criterion`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

#[cfg(feature = "parallel")]
use cubedet::det::permutation::det_permutation_parallel;
use cubedet::det::permutation::det_permutation_serial;
use cubedet::{det2_explicit, det3_explicit, det_cofactor, CubicMatrix};

fn matrix(order: usize) -> CubicMatrix<i64> {
    CubicMatrix::random(order, 0xC0FFEE, -9, 9).unwrap()
}

fn bench_engines(c: &mut Criterion) {
    let mut group = c.benchmark_group("det");
    for order in 2..=5usize {
        let a = matrix(order);
        if order == 2 {
            group.bench_with_input(BenchmarkId::new("explicit", order), &a, |b, a| {
                b.iter(|| det2_explicit(black_box(a)).unwrap())
            });
        }
        if order == 3 {
            group.bench_with_input(BenchmarkId::new("explicit", order), &a, |b, a| {
                b.iter(|| det3_explicit(black_box(a)).unwrap())
            });
        }
        group.bench_with_input(BenchmarkId::new("cofactor", order), &a, |b, a| {
            b.iter(|| det_cofactor(black_box(a)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("permutation", order), &a, |b, a| {
            b.iter(|| det_permutation_serial(black_box(a)).unwrap())
        });
    }
    group.finish();
}

/// Sequential and parallel expansions side by side on the orders where the
/// fan-out starts to matter.
fn bench_parallelism(c: &mut Criterion) {
    let mut group = c.benchmark_group("permutation-expansion");
    group.sample_size(20);
    for order in 5..=6usize {
        let a = matrix(order);
        group.bench_with_input(BenchmarkId::new("serial", order), &a, |b, a| {
            b.iter(|| det_permutation_serial(black_box(a)).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", order), &a, |b, a| {
            b.iter(|| det_permutation_parallel(black_box(a)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_engines, bench_parallelism);
criterion_main!(benches);

use std::hint::black_box;

use aseries_bench::{sweep_generators, COMPOSITE_INPUTS};
use aseries_core::{
    enumerate_series, factorize, representations_consecutive, representations_diff2, verify_range,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bench_generators(c: &mut Criterion) {
    let mut group = c.benchmark_group("generators");
    for n in COMPOSITE_INPUTS {
        group.bench_with_input(BenchmarkId::new("diff2", n), &n, |b, &n| {
            b.iter(|| representations_diff2(black_box(n)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("consecutive", n), &n, |b, &n| {
            b.iter(|| representations_consecutive(black_box(n)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("oracle_step1", n), &n, |b, &n| {
            b.iter(|| enumerate_series(black_box(n), 1).unwrap())
        });
    }
    group.finish();
}

fn bench_factorize(c: &mut Criterion) {
    c.bench_function("factorize_fermat_f5", |b| {
        b.iter(|| factorize(black_box(4_294_967_297)).unwrap())
    });
    c.bench_function("factorize_mersenne_61_times_6", |b| {
        b.iter(|| factorize(black_box(6 * ((1u64 << 61) - 1))).unwrap())
    });
}

fn bench_sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    group.bench_function("generators_2_to_10000", |b| {
        b.iter(|| sweep_generators(2, black_box(10_000)).unwrap())
    });
    group.bench_function("verify_range_2_to_10000", |b| {
        b.iter(|| verify_range(2, black_box(10_000)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_generators, bench_factorize, bench_sweeps);
criterion_main!(benches);

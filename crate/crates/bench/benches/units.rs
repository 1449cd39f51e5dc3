//! Timings for the hot paths: unit construction, inversion through the
//! matrix embedding, the two multiplication routes, and the grouped versus
//! naive determinant on a dense inverse matrix.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use promislow::{build_unit, invert_unit, CosetAction, CosetTable};
use promislow_bench::sample_points;

fn bench_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_unit");
    for (name, params) in sample_points() {
        group.bench_function(name, |b| b.iter(|| build_unit(black_box(&params)).unwrap()));
    }
    group.finish();
}

fn bench_invert(c: &mut Criterion) {
    let mut group = c.benchmark_group("invert_unit");
    // the corner point is excluded: inversion there takes ~250 ms and the
    // default sample count would stretch the run past a minute
    for (name, params) in sample_points().into_iter().take(3) {
        let u = build_unit(&params).unwrap();
        group.bench_function(name, |b| b.iter(|| invert_unit(black_box(&u)).unwrap()));
    }
    group.finish();
}

fn bench_multiplication_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("mul");
    let (_, params) = sample_points()[1];
    let u = build_unit(&params).unwrap();
    let v = invert_unit(&u).unwrap();
    let ctx = params.ctx();
    let action = CosetAction::new(ctx);
    let table = CosetTable::derive(ctx).unwrap();
    group.bench_function("matrix_route", |b| {
        b.iter(|| black_box(&u).mul_matrix(black_box(&v)).unwrap())
    });
    group.bench_function("crossed_route", |b| {
        b.iter(|| {
            black_box(&u)
                .mul_crossed(black_box(&v), &action, &table)
                .unwrap()
        })
    });
    group.finish();
}

fn bench_determinant(c: &mut Criterion) {
    let mut group = c.benchmark_group("det");
    let (_, params) = sample_points()[1];
    let m_inv = build_unit(&params)
        .unwrap()
        .embed()
        .unwrap()
        .inverse()
        .unwrap();
    group.bench_function("grouped_minors", |b| {
        b.iter(|| black_box(&m_inv).det().unwrap())
    });
    group.bench_function("permutation_sum", |b| {
        b.iter(|| black_box(&m_inv).det_permutation_sum().unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_build,
    bench_invert,
    bench_multiplication_routes,
    bench_determinant
);
criterion_main!(benches);

//! Forest-verification benchmarks. Both suites fan out per term or per
//! level when the `parallel` feature is on; rebuild with
//! `--no-default-features` to compare the sequential fallback.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use dyck::{forest_check, forest_partition};

fn bench_forest_partition(c: &mut Criterion) {
    let mut group = c.benchmark_group("forest_partition");
    group.sample_size(10);
    for bound in [12u32, 16] {
        group.bench_with_input(BenchmarkId::from_parameter(bound), &bound, |b, &bound| {
            b.iter(|| black_box(forest_partition(bound).unwrap()))
        });
    }
    group.finish();
}

fn bench_forest_check(c: &mut Criterion) {
    let mut group = c.benchmark_group("ternary_forest_check");
    group.sample_size(10);
    for bound in [12u32, 16] {
        group.bench_with_input(BenchmarkId::from_parameter(bound), &bound, |b, &bound| {
            b.iter(|| black_box(forest_check(bound).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_forest_partition, bench_forest_check);
criterion_main!(benches);

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use tansum::{
    derive_period24_table, newman_sum, s3_fast, sigma, sigma_combinatorial, Budget, SigmaCache,
};

fn recurrence(c: &mut Criterion) {
    let mut group = c.benchmark_group("sigma_recurrence");
    for (n, p) in [(11, 100), (101, 30), (101, 300)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{n}/{p}")),
            &(n, p),
            |b, &(n, p)| b.iter(|| sigma(black_box(n), black_box(p)).unwrap()),
        );
    }
    group.bench_function("table_101x30", |b| {
        b.iter(|| {
            for n in (3..=101u64).step_by(2) {
                black_box(SigmaCache::new(n).unwrap().take(30));
            }
        })
    });
    group.finish();
}

fn three_methods(c: &mut Criterion) {
    let mut group = c.benchmark_group("sigma_9_3");
    group.bench_function("recurrence", |b| b.iter(|| sigma(black_box(9), 3).unwrap()));
    group.bench_function("combinatorial", |b| {
        b.iter(|| sigma_combinatorial(black_box(9), 3).unwrap())
    });
    group.bench_function("digit_enumeration", |b| {
        b.iter(|| newman_sum(black_box(9), 262_144, Budget::DEFAULT).unwrap())
    });
    group.finish();
}

fn s3(c: &mut Criterion) {
    let table = derive_period24_table(10_000).unwrap();
    c.bench_function("s3_fast_1e18", |b| {
        b.iter(|| s3_fast(black_box(1_000_000_000_000_000_000), &table))
    });
    c.bench_function("s3_brute_1e6", |b| {
        b.iter(|| newman_sum(3, black_box(1_000_000), Budget::DEFAULT).unwrap())
    });
}

criterion_group!(benches, recurrence, three_methods, s3);
criterion_main!(benches);

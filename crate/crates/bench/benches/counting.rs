use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use latrect::kernels::{eval_ten, KernelQuery};
use latrect::{compute_table, Algorithm};

fn one_value(c: &mut Criterion) {
    let mut group = c.benchmark_group("one_value");
    group.sample_size(10);
    let sizes = [
        (Algorithm::Baseline, 9..=11),
        (Algorithm::Sqrt, 10..=12),
        (Algorithm::Cuberoot, 12..=14),
        (Algorithm::Tenmoment, 12..=15),
        (Algorithm::Divisorlayer, 14..=18),
    ];
    for (algo, ks) in sizes {
        for k in ks {
            let n = 1u64 << k;
            group.bench_with_input(BenchmarkId::new(algo.id(), n), &n, |b, &n| b.iter(|| algo.run(n).unwrap()));
        }
    }
    group.finish();
}

fn all_values(c: &mut Criterion) {
    let mut group = c.benchmark_group("all_values");
    group.sample_size(10);
    for k in [12, 14, 16] {
        let n = 1u64 << k;
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| compute_table(n).unwrap()));
    }
    group.finish();
}

fn kernel(c: &mut Criterion) {
    let q = KernelQuery::new(1 << 20, 1_000_003, 999_983, 12_345).unwrap();
    c.bench_function("eval_ten", |b| b.iter(|| eval_ten(std::hint::black_box(q)).unwrap()));
}

criterion_group!(benches, one_value, all_values, kernel);
criterion_main!(benches);

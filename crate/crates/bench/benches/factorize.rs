use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use minorprime::corpus;
use minorprime::{factorize_guan, factorize_mlp};

fn factorize(c: &mut Criterion) {
    let mut group = c.benchmark_group("factorize");
    group.sample_size(10).measurement_time(Duration::from_secs(5));
    for case in corpus::appendix() {
        let f = case.document.parse_matrix().unwrap();
        group.bench_with_input(BenchmarkId::new("guan", &case.name), &f, |b, f| {
            b.iter(|| factorize_guan(f).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("new", &case.name), &f, |b, f| {
            b.iter(|| factorize_mlp(f).unwrap())
        });
    }
    group.finish();
}

fn pipeline(c: &mut Criterion) {
    let f = corpus::case("F4").unwrap().document.parse_matrix().unwrap();
    let r = f.rank().rank;
    c.bench_function("d_r F4", |b| b.iter(|| f.determinantal_divisor(r).unwrap()));
    c.bench_function("rank F4", |b| b.iter(|| f.rank()));
}

criterion_group!(benches, factorize, pipeline);
criterion_main!(benches);

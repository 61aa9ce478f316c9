use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use pavings::enumerate::{enumerate_pavings, EnumerateConfig};
use pavings::fixtures;
use pavings::perm::canonical_labeling;

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for n in [6usize, 8] {
        g.bench_with_input(BenchmarkId::new("plain", n), &n, |b, &n| {
            b.iter(|| enumerate_pavings(black_box(n), &EnumerateConfig::classify()).unwrap())
        });
        let fixed = EnumerateConfig {
            fix_alpha: true,
            ..EnumerateConfig::classify()
        };
        g.bench_with_input(BenchmarkId::new("fixed-alpha", n), &n, |b, &n| {
            b.iter(|| enumerate_pavings(black_box(n), &fixed).unwrap())
        });
    }
    g.finish();
}

fn canonical(c: &mut Criterion) {
    let t = fixtures::thurston();
    let gens = t.involutions();
    c.bench_function("canonical labelling, 24 darts", |b| b.iter(|| canonical_labeling(black_box(&gens))));
}

criterion_group!(benches, enumeration, canonical);
criterion_main!(benches);

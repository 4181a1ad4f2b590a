//! Benchmarks for the composition kernels (per instance size) and a small
//! configuration of the randomized property suite.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use frelkit_core::{
    compose_adaptive, compose_max_t, compose_s_t, compose_similarity, run_suite, FuzzyRelation,
    FuzzyVector, SuiteConfig, TConormKind, TNormKind,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn instance(rows: usize, cols: usize, seed: u64) -> (FuzzyVector, FuzzyRelation) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x: Vec<f64> = (0..rows).map(|_| rng.random()).collect();
    let a: Vec<Vec<f64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.random()).collect())
        .collect();
    (
        FuzzyVector::from_degrees(&x).expect("draws lie in [0, 1)"),
        FuzzyRelation::from_degrees(&a).expect("draws lie in [0, 1)"),
    )
}

fn bench_kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("compose");
    for &(rows, cols) in &[(8usize, 8usize), (32, 32), (128, 128)] {
        let (x, a) = instance(rows, cols, 0xBEAC_0001);
        let size = format!("{rows}x{cols}");
        group.throughput(Throughput::Elements((rows * cols) as u64));
        group.bench_with_input(BenchmarkId::new("max-min", &size), &size, |b, _| {
            b.iter(|| compose_max_t(black_box(&x), black_box(&a), TNormKind::Min).unwrap());
        });
        group.bench_with_input(BenchmarkId::new("max-product", &size), &size, |b, _| {
            b.iter(|| compose_max_t(black_box(&x), black_box(&a), TNormKind::Product).unwrap());
        });
        group.bench_with_input(BenchmarkId::new("similarity", &size), &size, |b, _| {
            b.iter(|| compose_similarity(black_box(&x), black_box(&a)).unwrap());
        });
        group.bench_with_input(BenchmarkId::new("adaptive", &size), &size, |b, _| {
            b.iter(|| compose_adaptive(black_box(&x), black_box(&a)).unwrap());
        });
        group.bench_with_input(BenchmarkId::new("convex-lukasiewicz", &size), &size, |b, _| {
            let sconorm = TConormKind::convex(0.5).unwrap();
            b.iter(|| {
                compose_s_t(black_box(&x), black_box(&a), TNormKind::Lukasiewicz, sconorm).unwrap()
            });
        });
    }
    group.finish();
}

fn bench_suite(c: &mut Criterion) {
    let config = SuiteConfig {
        trials: 50,
        max_rows: 4,
        max_cols: 4,
        axiom_samples: 100,
        ..SuiteConfig::default()
    };
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    group.bench_function("50-trials-4x4", |b| {
        b.iter(|| run_suite(black_box(&config)).unwrap());
    });
    group.finish();
}

criterion_group!(benches, bench_kernels, bench_suite);
criterion_main!(benches);

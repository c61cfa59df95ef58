//! Compares sequential and batch compilation over many independent units.
//!
//! With the default `parallel` feature, `compile_batch` fans units out
//! over the rayon pool; built with `--no-default-features` it degrades
//! to the sequential loop and the two measurements coincide.

use criterion::{criterion_group, criterion_main, Criterion};
use driftscript::conformance::{random_program, seeded_rng};
use driftscript::{compile_batch, compile_source};
use std::hint::black_box;

const UNITS: usize = 2048;
const MAX_RESULTS: usize = 64;

fn bench_batch(c: &mut Criterion) {
    let mut rng = seeded_rng(42);
    let units: Vec<String> = (0..UNITS).map(|_| random_program(&mut rng, false)).collect();

    let mut group = c.benchmark_group(format!("compile_{}_units", UNITS));
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let outcomes: Vec<_> = units
                .iter()
                .map(|u| compile_source(u, MAX_RESULTS))
                .collect();
            black_box(outcomes)
        })
    });
    group.bench_function("batch", |b| {
        b.iter(|| black_box(compile_batch(&units, MAX_RESULTS)))
    });
    group.finish();
}

criterion_group!(benches, bench_batch);
criterion_main!(benches);

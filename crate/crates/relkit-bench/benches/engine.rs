//! Benchmarks for the hot paths: composition, symmetric quotient,
//! existential image and the lifted-algebra construction.

use criterion::{criterion_group, criterion_main, Criterion};
use relkit_core::images::existential_image;
use relkit_core::powerset::membership;
use relkit_core::{boolalg, Relation, Universe};

fn numbered(name: &str, n: usize) -> Universe {
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    Universe::atomic(name, &refs).expect("fresh labels")
}

/// Deterministic mid-density relation: a fixed quadratic residue pattern.
fn scattered(src: &Universe, tgt: &Universe) -> Relation {
    let m = tgt.size().max(1);
    Relation::from_fn(src, tgt, |i, j| (i * i + 3 * i * j + j) % 7 < 3)
        .union(&Relation::from_fn(src, tgt, move |i, j| (i + j) % m == 0))
        .expect("same type")
}

fn bench_compose(c: &mut Criterion) {
    let x = numbered("X", 256);
    let r = scattered(&x, &x);
    let s = scattered(&x, &x).converse();
    c.bench_function("compose/256x256", |b| {
        b.iter(|| std::hint::black_box(r.compose(&s).expect("same type")))
    });
}

fn bench_syq(c: &mut Criterion) {
    let base = numbered("B", 8);
    let eps = membership(&base).expect("small base").epsilon.clone();
    c.bench_function("syq/eps-8", |b| {
        b.iter(|| std::hint::black_box(eps.syq(&eps).expect("same source")))
    });
}

fn bench_existential_image(c: &mut Criterion) {
    let x = numbered("X", 8);
    let r = scattered(&x, &x);
    c.bench_function("existential-image/8x8", |b| {
        b.iter(|| std::hint::black_box(existential_image(&r).expect("small base")))
    });
}

fn bench_lifted(c: &mut Criterion) {
    let base = numbered("B", 3);
    c.bench_function("lifted-algebra/3", |b| {
        b.iter(|| std::hint::black_box(boolalg::lifted(&base).expect("small base")))
    });
}

fn config() -> Criterion {
    Criterion::default().sample_size(10)
}

criterion_group! {
    name = engine;
    config = config();
    targets = bench_compose, bench_syq, bench_existential_image, bench_lifted
}
criterion_main!(engine);

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use pbzlab_core::canon::canonical_form;
use pbzlab_core::catalog;
use pbzlab_core::congruence::all_congruences;
use pbzlab_core::enumerate::{enumerate_lattices, enumerate_pbz, EnumerationSpec};

fn lattices(c: &mut Criterion) {
    // levels and base corpora are cached per process; these measure the
    // cached lookup plus cloning, the cold build shows up in the first sample
    let mut g = c.benchmark_group("enumerate_lattices");
    for n in [6, 8] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| enumerate_lattices(black_box(n)).unwrap().len()));
    }
    g.finish();
}

fn pbz(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_pbz");
    g.sample_size(10);
    for n in [6, 7] {
        let spec = EnumerationSpec::pbz(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| enumerate_pbz(black_box(n), &spec).unwrap().len()));
    }
    g.finish();
}

fn canonical(c: &mut Criterion) {
    let mut g = c.benchmark_group("canonical_form");
    for name in ["D8", "B8", "MO2⊞D3", "B16"] {
        let a = catalog::get(name).unwrap();
        g.bench_function(name, |b| b.iter(|| canonical_form(black_box(&a))));
    }
    g.finish();
}

fn congruences(c: &mut Criterion) {
    // the congruence search is bounded at 12 elements
    let mut g = c.benchmark_group("all_congruences");
    for name in ["D8", "B8", "MO2⊞D3"] {
        let a = catalog::get(name).unwrap();
        g.bench_function(name, |b| b.iter(|| all_congruences(black_box(&a)).unwrap().len()));
    }
    let d12 = catalog::kleene_chain(12);
    g.bench_function("D12", |b| b.iter(|| all_congruences(black_box(&d12)).unwrap().len()));
    g.finish();
}

criterion_group!(benches, lattices, pbz, canonical, congruences);
criterion_main!(benches);

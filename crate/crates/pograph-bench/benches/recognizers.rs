//! Benchmarks for the hot paths: table construction, graph building, and
//! the class recognizers on representative groups.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use pograph::classes::{is_chordal, is_clawfree, is_cograph, is_perfect, is_split, Budget};
use pograph::{build_gamma, Group, UGraph};

fn gamma_of(spec: &str) -> UGraph {
    build_gamma(&Group::parse(spec).unwrap())
}

fn bench_construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct");
    for spec in ["S:5", "GL:2:5", "PSL:2:7", "C:8 x C:16"] {
        group.bench_with_input(BenchmarkId::from_parameter(spec), spec, |b, spec| {
            b.iter(|| Group::parse(black_box(spec)).unwrap());
        });
    }
    group.finish();
}

fn bench_gamma(c: &mut Criterion) {
    let mut group = c.benchmark_group("gamma");
    for spec in ["A:5", "D:105", "SL:2:7"] {
        let g = Group::parse(spec).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(spec), &g, |b, g| {
            b.iter(|| build_gamma(black_box(g)));
        });
    }
    group.finish();
}

fn bench_perfect(c: &mut Criterion) {
    let mut group = c.benchmark_group("perfect");
    for spec in ["S:4", "C:2 x SD:7:3:2", "D:105", "PSL:2:7", "Q:16 x C:9"] {
        let graph = gamma_of(spec);
        group.bench_with_input(BenchmarkId::from_parameter(spec), &graph, |b, g| {
            b.iter(|| is_perfect(black_box(g), Budget::default()));
        });
    }
    group.finish();
}

fn bench_certified_recognizers(c: &mut Criterion) {
    let cograph_graph = gamma_of("C:4 x C:4");
    c.bench_function("cograph/C:4 x C:4", |b| {
        b.iter(|| is_cograph(black_box(&cograph_graph)))
    });

    let chordal_graph = gamma_of("Q:64");
    c.bench_function("chordal/Q:64", |b| {
        b.iter(|| is_chordal(black_box(&chordal_graph)))
    });

    let claw_graph = gamma_of("A:5");
    c.bench_function("clawfree/A:5", |b| {
        b.iter(|| is_clawfree(black_box(&claw_graph)))
    });

    let split_graph = gamma_of("C:64");
    c.bench_function("split/C:64", |b| {
        b.iter(|| is_split(black_box(&split_graph)))
    });
}

criterion_group!(
    benches,
    bench_construction,
    bench_gamma,
    bench_perfect,
    bench_certified_recognizers
);
criterion_main!(benches);

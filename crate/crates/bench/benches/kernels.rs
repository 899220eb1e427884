use std::hint::black_box;

use comax_core::embedding::{find_triple_certificate, planarity};
use comax_core::hypergraph::{build_comaximal_graph, build_hypergraph, incidence_graph, maximal_cliques};
use comax_core::lattice::GroupParam;
use comax_core::structure::{chromatic_number, diameter, is_helly, is_hypertree};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const SIZES: [u64; 4] = [12, 30, 48, 60];

fn gp(n: u64) -> GroupParam {
    GroupParam::new(n).unwrap()
}

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construction");
    for n in SIZES {
        group.bench_with_input(BenchmarkId::new("comaximal_graph", n), &n, |b, &n| {
            b.iter(|| build_comaximal_graph(black_box(gp(n))))
        });
        let g = build_comaximal_graph(gp(n));
        group.bench_with_input(BenchmarkId::new("maximal_cliques", n), &g, |b, g| b.iter(|| maximal_cliques(g)));
        group.bench_with_input(BenchmarkId::new("hypergraph", n), &n, |b, &n| {
            b.iter(|| build_hypergraph(black_box(gp(n))))
        });
    }
    group.finish();
}

fn structure(c: &mut Criterion) {
    let mut group = c.benchmark_group("structure");
    for n in SIZES {
        let h = build_hypergraph(gp(n));
        group.bench_with_input(BenchmarkId::new("diameter", n), &h, |b, h| b.iter(|| diameter(h)));
        group.bench_with_input(BenchmarkId::new("chromatic", n), &h, |b, h| b.iter(|| chromatic_number(h)));
        group.bench_with_input(BenchmarkId::new("helly", n), &h, |b, h| b.iter(|| is_helly(h)));
        group.bench_with_input(BenchmarkId::new("hypertree", n), &h, |b, h| b.iter(|| is_hypertree(h)));
    }
    group.finish();
}

fn embedding(c: &mut Criterion) {
    let mut group = c.benchmark_group("embedding");
    for n in [16, 30, 36, 40] {
        let h = build_hypergraph(gp(n));
        let inc = incidence_graph(&h);
        group.bench_with_input(BenchmarkId::new("planarity", n), &inc, |b, inc| b.iter(|| planarity(inc)));
        group.bench_with_input(BenchmarkId::new("triple_k7", n), &h, |b, h| {
            b.iter(|| find_triple_certificate(h, 7).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, construction, structure, embedding);
criterion_main!(benches);

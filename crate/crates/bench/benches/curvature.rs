//! Criterion benchmarks for the hot paths: local curvature by both
//! routes, Cayley-graph generation, dense eigenvalue extraction, and
//! exhaustive isoperimetric verification.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ricci_core::corpus::{complete_bipartite, petersen};
use ricci_core::coxeter::{weak_order_graph, GroupModel};
use ricci_core::curvature::{global_ricci, local_ricci, local_ricci_oracle};
use ricci_core::graph::Graph;
use ricci_core::linalg::eigenvalues_symmetric_f64;
use ricci_core::spectral::{verify_isoperimetry_seeded, DEFAULT_SEED};

fn laplacian_rows(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.vertex_count();
    let mut rows = vec![vec![0.0; n]; n];
    for i in 0..n {
        rows[i][i] = g.degree_idx(i) as f64;
        for &j in g.neighbors_idx(i) {
            rows[i][j] = -1.0;
        }
    }
    rows
}

fn bench_local_curvature(c: &mut Criterion) {
    let g = petersen();
    c.bench_function("local_ricci petersen vertex o0", |b| {
        b.iter(|| local_ricci(black_box(&g), black_box("o0")).unwrap())
    });
    c.bench_function("local_ricci_oracle petersen vertex o0", |b| {
        b.iter(|| local_ricci_oracle(black_box(&g), black_box("o0")).unwrap())
    });
}

fn bench_global_curvature(c: &mut Criterion) {
    let g = weak_order_graph(&GroupModel::Signed(3)).unwrap();
    c.bench_function("global_ricci 48-vertex weak order", |b| {
        b.iter(|| global_ricci(black_box(&g)).unwrap())
    });
}

fn bench_cayley_generation(c: &mut Criterion) {
    c.bench_function("weak_order_graph B3 (48 elements)", |b| {
        b.iter(|| weak_order_graph(black_box(&GroupModel::Signed(3))).unwrap())
    });
}

fn bench_eigenvalues(c: &mut Criterion) {
    let g = weak_order_graph(&GroupModel::Signed(3)).unwrap();
    let rows = laplacian_rows(&g);
    c.bench_function("eigenvalues 48x48 laplacian", |b| {
        b.iter(|| eigenvalues_symmetric_f64(black_box(&rows)).unwrap())
    });
}

fn bench_isoperimetry(c: &mut Criterion) {
    let g = complete_bipartite(3, 3).unwrap();
    c.bench_function("verify_isoperimetry K33 exhaustive", |b| {
        b.iter(|| verify_isoperimetry_seeded(black_box(&g), DEFAULT_SEED).unwrap())
    });
}

criterion_group!(
    benches,
    bench_local_curvature,
    bench_global_curvature,
    bench_cayley_generation,
    bench_eigenvalues,
    bench_isoperimetry
);
criterion_main!(benches);

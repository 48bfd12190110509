use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use zeon::spectra;
use zeon::verify;
use zeon::{exec, oracle, Graph, Labeling};

fn graphs(m: usize) -> Vec<Graph> {
    (0..4).map(|s| Graph::random(m, 0.5, s).unwrap()).collect()
}

fn eigen_census(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigenvalue-census");
    group.sample_size(10);
    for m in [6, 8] {
        let gs = graphs(m);
        for (name, threads) in [("sequential", 1), ("parallel", 0)] {
            group.bench_with_input(BenchmarkId::new(name, m), &gs, |b, gs| {
                b.iter(|| {
                    exec::with_threads(threads, || {
                        for g in gs {
                            let data = verify::eigen_data(g, &Labeling::identity_f(g.m())).unwrap();
                            verify::check_eigenvalue_census(g, &data).unwrap();
                            black_box(&data);
                        }
                    })
                })
            });
        }
    }
    group.finish();
}

fn power_products(c: &mut Criterion) {
    let mut group = c.benchmark_group("psi-powers");
    group.sample_size(10);
    let g = Graph::random(10, 0.5, 7).unwrap();
    for (name, threads) in [("sequential", 1), ("parallel", 0)] {
        group.bench_function(name, |b| {
            b.iter(|| exec::with_threads(threads, || black_box(spectra::psi_powers(&g).unwrap())))
        });
    }
    group.finish();
}

fn exp_vs_dfs(c: &mut Criterion) {
    let mut group = c.benchmark_group("cycles-at-vertex");
    let g = Graph::random(8, 0.5, 3).unwrap();
    group.bench_function("exponential", |b| {
        b.iter(|| black_box(spectra::cycle_census_from_exp(&g, 1).unwrap()))
    });
    group.bench_function("dfs", |b| b.iter(|| black_box(oracle::all_cycles(&g, 1))));
    group.finish();
}

criterion_group!(benches, eigen_census, power_products, exp_vs_dfs);
criterion_main!(benches);

//! Parallel-versus-sequential comparison of the data-parallel hot paths:
//! the same entry points run under a one-thread rayon pool and under a
//! full pool. Results are identical either way; only the wall time moves.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use mapkit::enumerate::{census, enumerate_maps, enumerate_type_graphs, EnumerationConstraint};
use mapkit::io::build_named;
use mapkit::ops::truncate;
use mapkit::symmetry::automorphism_group;

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
}

fn bench_enumerate_maps(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_maps_12");
    for threads in [1, 0] {
        let label = if threads == 1 { "sequential" } else { "parallel" };
        group.bench_with_input(BenchmarkId::from_parameter(label), &threads, |b, &t| {
            let pool = pool(t);
            b.iter(|| pool.install(|| enumerate_maps(12).unwrap().len()));
        });
    }
    group.finish();
}

fn bench_enumerate_type_graphs(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_type_graphs_8");
    for threads in [1, 0] {
        let label = if threads == 1 { "sequential" } else { "parallel" };
        group.bench_with_input(BenchmarkId::from_parameter(label), &threads, |b, &t| {
            let pool = pool(t);
            b.iter(|| {
                pool.install(|| {
                    enumerate_type_graphs(8, EnumerationConstraint::All)
                        .unwrap()
                        .len()
                })
            });
        });
    }
    group.finish();
}

fn bench_census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census_12");
    group.sample_size(10);
    for threads in [1, 0] {
        let label = if threads == 1 { "sequential" } else { "parallel" };
        group.bench_with_input(BenchmarkId::from_parameter(label), &threads, |b, &t| {
            let pool = pool(t);
            b.iter(|| pool.install(|| census(12).unwrap().len()));
        });
    }
    group.finish();
}

fn bench_automorphisms(c: &mut Criterion) {
    let big = truncate(&build_named("icosahedron").unwrap()).map;
    let mut group = c.benchmark_group("automorphisms_truncated_icosahedron");
    for threads in [1, 0] {
        let label = if threads == 1 { "sequential" } else { "parallel" };
        group.bench_with_input(BenchmarkId::from_parameter(label), &threads, |b, &t| {
            let pool = pool(t);
            b.iter(|| pool.install(|| automorphism_group(&big).len()));
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_enumerate_maps,
    bench_enumerate_type_graphs,
    bench_census,
    bench_automorphisms
);
criterion_main!(benches);

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use raag::automorphisms::{enumerate_laurence_generators, finite_nonabelian_witness, nontrivial_graph_automorphism};
use raag_bench::graph;

fn automorphisms(c: &mut Criterion) {
    let mut bench = c.benchmark_group("automorphisms");
    for n in [8, 12, 16] {
        let g = graph(n, 0.5, n as u64);
        bench.bench_with_input(BenchmarkId::new("graph_automorphism", n), &g, |b, g| {
            b.iter(|| nontrivial_graph_automorphism(g))
        });
        bench.bench_with_input(BenchmarkId::new("laurence", n), &g, |b, g| b.iter(|| enumerate_laurence_generators(g)));
        bench.bench_with_input(BenchmarkId::new("witness", n), &g, |b, g| b.iter(|| finite_nonabelian_witness(g)));
    }
    bench.finish();
}

criterion_group!(benches, automorphisms);
criterion_main!(benches);

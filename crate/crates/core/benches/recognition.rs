use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use graphpart::generate::{generate, GenKind, GenParams};
use graphpart::{recognize_batch, Execution, Graph, Solver};

fn instances(kind: GenKind, n: usize, k: usize, count: u64) -> Vec<Graph> {
    (0..count).map(|seed| generate(&GenParams::new(kind, n, k, 0.05, seed)).unwrap().graph).collect()
}

fn batch(c: &mut Criterion) {
    let cases = [
        (Solver::Monopolar, instances(GenKind::PlantedMonopolar, 400, 3, 32)),
        (Solver::SubcoloringASide, instances(GenKind::PlantedSubcoloring, 200, 2, 32)),
        (Solver::SubcoloringTotal, instances(GenKind::PlantedSubcoloring, 200, 2, 32)),
    ];
    let mut group = c.benchmark_group("batch");
    group.sample_size(10);
    for (solver, graphs) in &cases {
        let k = if *solver == Solver::SubcoloringTotal { 4 } else { 3 };
        for (label, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            group.bench_with_input(BenchmarkId::new(format!("{solver:?}"), label), graphs, |b, gs| {
                b.iter(|| recognize_batch(black_box(gs), *solver, k, exec))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, batch);
criterion_main!(benches);

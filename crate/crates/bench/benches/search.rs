use criterion::{black_box, criterion_group, criterion_main, BatchSize, Criterion};
use varikon::solver::{SetupPolicy, Solver, TargetMode};
use varikon::varikon::{enumerate_reachable, VarikonConfig, REACHABLE};
use varikon::words::WordTable;
use varikon::DistanceTable;
use varikon_bench::sample_configs;

fn ranking(c: &mut Criterion) {
    let configs = sample_configs(1024, 1);
    c.bench_function("rank 1024", |b| {
        b.iter(|| configs.iter().map(|c| black_box(c).rank()).sum::<usize>())
    });
    c.bench_function("unrank 1008", |b| {
        b.iter(|| {
            for r in (0..REACHABLE).step_by(20) {
                black_box(VarikonConfig::unrank(black_box(r)));
            }
        })
    });
}

fn search(c: &mut Criterion) {
    c.bench_function("enumerate reachable", |b| b.iter(enumerate_reachable));
    c.bench_function("distance table", |b| b.iter(DistanceTable::build));
    c.bench_function("A6 word table", |b| b.iter(WordTable::a6));
}

fn solving(c: &mut Criterion) {
    let solver = Solver::new(TargetMode::Center, SetupPolicy::BestOrientation).unwrap();
    let configs = sample_configs(256, 2);
    c.bench_function("optimal 256", |b| {
        b.iter(|| {
            configs
                .iter()
                .map(|c| solver.solve_optimal(c).unwrap().length)
                .sum::<usize>()
        })
    });
    c.bench_function("heuristic a6 256", |b| {
        b.iter(|| {
            configs
                .iter()
                .map(|c| solver.solve_heuristic_a6(c).unwrap().length)
                .sum::<usize>()
        })
    });
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("compare all", |b| {
        b.iter_batched(
            || (),
            |_| solver.compare_all().unwrap(),
            BatchSize::PerIteration,
        )
    });
    group.finish();
}

criterion_group!(benches, ranking, search, solving);
criterion_main!(benches);

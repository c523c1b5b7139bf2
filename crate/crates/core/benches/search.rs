//! Compares the parallel and sequential search engines on representative
//! workloads. Run with `cargo bench -p tug-core`; the parallel entries
//! disappear under `--no-default-features`.

use std::hint::black_box;

use criterion::{Criterion, criterion_group, criterion_main};

use tug_core::axioms::{
    AxiomId, SearchStrategy, search_counterexample, search_counterexample_sequential,
};
use tug_core::rational::rint;
use tug_core::solutions::{SolutionSpec, shapley};
use tug_core::Game;

fn grid_strategy(n: usize) -> SearchStrategy {
    SearchStrategy::Exhaustive { grid: vec![rint(-1), rint(0), rint(1)], n, max_instances: None }
}

fn bench_exhaustive_pass(c: &mut Criterion) {
    // A passing search has to enumerate its whole domain, so it is the
    // interesting case for throughput.
    let mut group = c.benchmark_group("exhaustive_npp_shapley");
    let strategy = grid_strategy(3);
    group.sample_size(10);
    group.bench_function("engine", |b| {
        b.iter(|| {
            search_counterexample(
                black_box(AxiomId::NullPlayerProperty),
                &SolutionSpec::Shapley,
                &strategy,
            )
            .unwrap()
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            search_counterexample_sequential(
                black_box(AxiomId::NullPlayerProperty),
                &SolutionSpec::Shapley,
                &strategy,
            )
            .unwrap()
        })
    });
    group.finish();
}

fn bench_neutrality_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("exhaustive_npn_equal_division");
    let strategy = grid_strategy(3);
    group.sample_size(10);
    group.bench_function("engine", |b| {
        b.iter(|| {
            search_counterexample(
                black_box(AxiomId::NullPlayerNeutrality),
                &SolutionSpec::EqualDivision,
                &strategy,
            )
            .unwrap()
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            search_counterexample_sequential(
                black_box(AxiomId::NullPlayerNeutrality),
                &SolutionSpec::EqualDivision,
                &strategy,
            )
            .unwrap()
        })
    });
    group.finish();
}

fn bench_random_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("random_linearity_egalitarian");
    let strategy = SearchStrategy::Random { n: 4, trials: 2000, seed: 9 };
    let solution = SolutionSpec::egalitarian(rint(-1));
    group.sample_size(10);
    group.bench_function("engine", |b| {
        b.iter(|| {
            search_counterexample(black_box(AxiomId::Linearity), &solution, &strategy).unwrap()
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            search_counterexample_sequential(black_box(AxiomId::Linearity), &solution, &strategy)
                .unwrap()
        })
    });
    group.finish();
}

fn bench_shapley_eval(c: &mut Criterion) {
    let game = Game::unanimity(6, tug_core::Coalition::from_mask(0b010110)).unwrap();
    c.bench_function("shapley_n6", |b| b.iter(|| shapley(black_box(&game))));
}

criterion_group!(
    benches,
    bench_exhaustive_pass,
    bench_neutrality_search,
    bench_random_search,
    bench_shapley_eval
);
criterion_main!(benches);

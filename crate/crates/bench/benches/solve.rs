use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use penney_bench::{example_game, large_game};
use penney_core::oracle::{absorption_probabilities, build_automaton, simulate};
use penney_core::{best_response, build_matrix_b, solve, winning_probabilities, SourceModel};

fn closed_forms(c: &mut Criterion) {
    let small = example_game();
    let large = large_game();
    c.bench_function("winning_probabilities/example", |b| {
        b.iter(|| winning_probabilities(black_box(&small)).unwrap())
    });
    c.bench_function("winning_probabilities/large", |b| {
        b.iter(|| winning_probabilities(black_box(&large)).unwrap())
    });
    c.bench_function("det_b/large", |b| {
        let m = build_matrix_b(&large);
        b.iter(|| black_box(&m).determinant())
    });
    c.bench_function("solve/large", |b| b.iter(|| solve(black_box(&large)).unwrap()));
}

fn oracle(c: &mut Criterion) {
    let large = large_game();
    c.bench_function("absorption/large", |b| {
        let a = build_automaton(&large);
        b.iter(|| absorption_probabilities(black_box(&a), large.model()).unwrap())
    });
    c.bench_function("simulate/example_10k", |b| {
        let spec = example_game();
        b.iter(|| simulate(black_box(&spec), 10_000, 0).unwrap())
    });
}

fn search(c: &mut Criterion) {
    let coin = SourceModel::fair_coin();
    let opp = vec![penney_core::parse_pattern("HTHH", &coin).unwrap()];
    c.bench_function("best_response/len4", |b| {
        b.iter(|| best_response(black_box(&opp), 4, &coin).unwrap())
    });
}

criterion_group!(benches, closed_forms, oracle, search);
criterion_main!(benches);

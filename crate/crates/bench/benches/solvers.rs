use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tropgame_bench::{random_ext, random_game, random_matrix};
use tropgame_core::convexity::cone_support;
use tropgame_core::games::{power_algorithm, solve_exact};
use tropgame_core::rank::{columns_independent, optimal_assignment, tropical_permanent};

fn games(c: &mut Criterion) {
    let mut group = c.benchmark_group("games");
    for size in [4usize, 8, 16, 32] {
        let op = random_game(size, size, 10, size as u64);
        group.bench_with_input(BenchmarkId::new("solve_exact", size), &op, |b, op| {
            b.iter(|| solve_exact(black_box(op)).unwrap())
        });
        // The power algorithm is pseudo-polynomial; keep weights small.
        let small = random_game(size, size, 3, size as u64);
        group.bench_with_input(BenchmarkId::new("power_algorithm", size), &small, |b, op| {
            b.iter(|| power_algorithm(black_box(op)).unwrap())
        });
    }
    group.finish();
}

fn cones(c: &mut Criterion) {
    let mut group = c.benchmark_group("cones");
    for size in [4usize, 8, 16] {
        let op = random_game(2 * size, size, 10, 100 + size as u64);
        group.bench_with_input(BenchmarkId::new("cone_support", size), &op, |b, op| {
            b.iter(|| cone_support(black_box(op.a()), black_box(op.b())).unwrap())
        });
    }
    group.finish();
}

fn rank(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank");
    for size in [8usize, 32, 128] {
        let m = random_matrix(size, size, 1000, size as u64);
        group.bench_with_input(BenchmarkId::new("optimal_assignment", size), &m, |b, m| {
            b.iter(|| optimal_assignment(black_box(m)).unwrap())
        });
        let e = random_ext(size, size, 1000, size as u64);
        group.bench_with_input(BenchmarkId::new("tropical_permanent", size), &e, |b, e| {
            b.iter(|| tropical_permanent(black_box(e)).unwrap())
        });
    }
    for (m, n) in [(4usize, 3usize), (6, 4), (8, 5)] {
        let e = random_ext(m, n, 5, (m * n) as u64);
        group.bench_with_input(BenchmarkId::new("columns_independent", format!("{m}x{n}")), &e, |b, e| {
            b.iter(|| columns_independent(black_box(e)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, games, cones, rank);
criterion_main!(benches);

//! Seeded random instances for the solver benchmarks.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tropgame_core::linalg::Matrix;
use tropgame_core::{ExtMatrix, ExtNumber, MinMaxOperator, TropMatrix, Weight};

fn weight(rng: &mut StdRng, bottom: f64, bound: i128) -> Weight {
    if rng.gen_bool(bottom) {
        Weight::Bottom
    } else {
        Weight::Finite(rng.gen_range(-bound..=bound))
    }
}

/// An `m x n` game with weights in `[-bound, bound]`, repaired so that every
/// column of `A` and every row of `B` has a finite entry.
pub fn random_game(m: usize, n: usize, bound: i128, seed: u64) -> MinMaxOperator {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut a: TropMatrix = Matrix::from_fn(m, n, |_, _| weight(&mut rng, 0.5, bound));
    let mut b: TropMatrix = Matrix::from_fn(m, n, |_, _| weight(&mut rng, 0.5, bound));
    for j in 0..n {
        if !a.col_has_finite(j) {
            a.set(rng.gen_range(0..m), j, Weight::Finite(rng.gen_range(-bound..=bound)));
        }
    }
    for i in 0..m {
        if !b.row_has_finite(i) {
            b.set(i, rng.gen_range(0..n), Weight::Finite(rng.gen_range(-bound..=bound)));
        }
    }
    MinMaxOperator::new(a, b).expect("same shapes")
}

/// A dense real matrix with entries in `[-bound, bound]`.
pub fn random_matrix(m: usize, n: usize, bound: i128, seed: u64) -> TropMatrix {
    let mut rng = StdRng::seed_from_u64(seed);
    Matrix::from_fn(m, n, |_, _| Weight::Finite(rng.gen_range(-bound..=bound)))
}

/// An extended matrix where one entry in six is ghost and one in six is zero.
pub fn random_ext(m: usize, n: usize, bound: i128, seed: u64) -> ExtMatrix {
    let mut rng = StdRng::seed_from_u64(seed);
    Matrix::from_fn(m, n, |_, _| match rng.gen_range(0..6) {
        0 => ExtNumber::ZERO,
        1 => ExtNumber::ghost_of(rng.gen_range(-bound..=bound)),
        _ => ExtNumber::real(rng.gen_range(-bound..=bound)),
    })
}

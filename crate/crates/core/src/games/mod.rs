//! Mean payoff games coded by a pair of matrices.
//!
//! All solvers need both assumptions: every column of `A` and every row of
//! `B` has a finite entry. Values are exact rationals.

mod cycles;
mod graph;
mod iteration;
pub mod oracle;
mod policy;

pub use graph::{build_game, GameGraph, Strategy};
pub use iteration::{
    power_algorithm, power_horizon, value_iteration, winning_horizon, winning_states,
    winning_threshold, PowerTrace, StopCondition, TRACE_CAP,
};
pub use policy::{
    apply_rational, certify_strategy, dual, solve_exact, super_eigenvector, GameValue,
    POLICY_ITERATION_CAP,
};

/// Exact rational, used for values and potentials.
pub type Rational = num_rational::Ratio<i128>;

//! Tropical permanents, singularity, linear independence and rank over the
//! extended semiring. Plain max-plus matrices enter through
//! [`TropMatrix::to_ext`](crate::linalg::TropMatrix::to_ext).

mod assignment;
mod cramer;
mod independence;

pub use assignment::{
    is_tropically_nonsingular, is_tropically_singular, optimal_assignment, permanent_assignment,
    permanent_by_enumeration, tropical_permanent, AssignmentResult,
};
pub use cramer::{adjugate, cramer_solve, solves};
pub use independence::{
    columns_independent, independence_matrices, independence_operator, independence_verdict,
    max_dependence_witness, nonsingular_submatrix, nonsingular_submatrix_exhaustive, rank_at_least,
    rank_by_minors, tropical_rank, IndependenceGame, IndependenceReport, RANK_SUBSET_CAP,
};

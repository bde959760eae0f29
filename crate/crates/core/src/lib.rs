//! Exact tropical convexity and mean payoff game solvers.
//!
//! A system of max-plus inequalities `Ax <= Bx` is the same object as the
//! dynamic programming operator `f = A^# B` of a deterministic mean payoff
//! game. The [`convexity`] module decides feasibility and support of such
//! systems through the solvers in [`games`]; [`rank`] applies the same
//! machinery to tropical linear independence.

pub mod convexity;
pub mod error;
pub mod games;
pub mod io;
pub mod linalg;
pub mod rank;
pub mod semiring;

#[cfg(test)]
mod fixtures;

pub use error::{Error, Result};
pub use linalg::{ExtMatrix, MinMaxOperator, TropMatrix};
pub use games::Rational;
pub use semiring::{ExtNumber, Multiplicity, Weight};

//! Tropical matrices, residuation and min-max operators `f = A^# B`.

mod matrix;
mod operator;
#[cfg(test)]
mod tests;

pub use matrix::{check_balance_zero, ext_matvec, matvec, ExtMatrix, Matrix, TropMatrix};
pub use operator::{
    compose, enforce_assumptions, homogenize, minmax_apply, residual_apply, Elimination, Extended,
    MinMaxOperator, RowLabel, COMPOSE_ROW_CAP,
};

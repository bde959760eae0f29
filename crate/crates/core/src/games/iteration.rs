use crate::error::Result;
use crate::linalg::{minmax_apply, MinMaxOperator};
use crate::semiring::Weight;

/// `f^N(x0)`.
pub fn value_iteration(op: &MinMaxOperator, x0: &[Weight], n_steps: u128) -> Result<Vec<Weight>> {
    let mut x = x0.to_vec();
    for _ in 0..n_steps {
        let next = minmax_apply(op, &x)?;
        if next == x {
            break;
        }
        x = next;
    }
    Ok(x)
}

fn size_factor(op: &MinMaxOperator) -> u128 {
    let s = (op.n() + op.m()) as u128;
    s * s * op.max_weight() as u128
}

/// `K = 2(n+m)^2 M + 1`.
pub fn power_horizon(op: &MinMaxOperator) -> u128 {
    2 * size_factor(op) + 1
}

/// `N* = 4(n+m)^2 M + 1`.
pub fn winning_horizon(op: &MinMaxOperator) -> u128 {
    4 * size_factor(op) + 1
}

/// `-2(n+m)M`: after `N*` steps a state is winning iff its value is at least this.
pub fn winning_threshold(op: &MinMaxOperator) -> i128 {
    -2 * (op.n() + op.m()) as i128 * op.max_weight()
}

/// Decides `{j : χ_j(f) >= 0}` by value iteration from `0`.
pub fn winning_states(op: &MinMaxOperator) -> Result<Vec<bool>> {
    op.require_assumptions()?;
    let v = value_iteration(op, &vec![Weight::ZERO; op.n()], winning_horizon(op))?;
    let threshold = Weight::Finite(winning_threshold(op));
    Ok(v.iter().map(|&x| x >= threshold).collect())
}

/// Why the power algorithm stopped.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum StopCondition {
    /// Every component of `x^k` is negative: `χ̄ < 0`.
    AllNegative,
    /// `g(x^k) = x^k`.
    FixedPoint,
    /// `y^k`, obtained from `x^k` by setting the decreasing coordinates to
    /// `-inf`, is a fixed point of `g`.
    PartialFixedPoint,
    /// `K` iterations without any other stop: `χ̄ >= 0`, no witness.
    Horizon,
}

/// Iterates kept in a [`PowerTrace`]; later ones are counted but not stored.
pub const TRACE_CAP: usize = 4096;

/// Run of the power algorithm `x^{k+1} = min(f(x^k), x^k)`, `x^0 = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerTrace {
    /// `x^0, x^1, ...` up to the stopping index (at most [`TRACE_CAP`]).
    pub iterates: Vec<Vec<Weight>>,
    /// Index `k` at which the algorithm stopped.
    pub steps: u128,
    pub stop: StopCondition,
    /// A vector `u ≢ -inf` with `u <= f(u)`, for fixed-point stops.
    pub witness: Option<Vec<Weight>>,
    pub horizon: u128,
}

impl PowerTrace {
    /// Whether `χ̄(f) >= 0`.
    pub fn nonnegative(&self) -> bool {
        self.stop != StopCondition::AllNegative
    }
}

fn g(op: &MinMaxOperator, x: &[Weight]) -> Result<Vec<Weight>> {
    Ok(minmax_apply(op, x)?
        .into_iter()
        .zip(x)
        .map(|(fx, &xj)| fx.min(xj))
        .collect())
}

/// Decides the sign of `χ̄(f)`; both assumptions must hold.
pub fn power_algorithm(op: &MinMaxOperator) -> Result<PowerTrace> {
    op.require_assumptions()?;
    let horizon = power_horizon(op);
    let mut x = vec![Weight::ZERO; op.n()];
    let mut iterates = vec![x.clone()];
    let mut k: u128 = 0;
    let record = |iterates: &mut Vec<Vec<Weight>>, v: &Vec<Weight>| {
        if iterates.len() < TRACE_CAP {
            iterates.push(v.clone());
        }
    };
    let (stop, witness) = loop {
        if x.iter().all(|&v| v < Weight::ZERO) {
            break (StopCondition::AllNegative, None);
        }
        if k == horizon {
            break (StopCondition::Horizon, None);
        }
        let next = g(op, &x)?;
        if next == x {
            break (StopCondition::FixedPoint, Some(x.clone()));
        }
        record(&mut iterates, &next);
        if next.iter().zip(&x).any(|(a, b)| a == b) {
            let y: Vec<Weight> = next
                .iter()
                .zip(&x)
                .map(|(&a, &b)| if a < b { Weight::Bottom } else { b })
                .collect();
            if g(op, &y)? == y {
                break (StopCondition::PartialFixedPoint, Some(y));
            }
        }
        x = next;
        k += 1;
    };
    Ok(PowerTrace {
        iterates,
        steps: k,
        stop,
        witness,
        horizon,
    })
}

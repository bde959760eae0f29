//! Exhaustive strategy enumeration, for cross-checking on small games.

use itertools::Itertools;

use super::graph::Strategy;
use super::policy::certify_strategy_bruteforce;
use super::Rational;
use crate::error::{Error, Result};
use crate::linalg::MinMaxOperator;

/// Strategy profiles above this count are refused.
pub const ENUMERATION_CAP: usize = 100_000;

/// Per-state values over all positional strategies.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EnumeratedValues {
    /// `max_σ χ(g^σ)`.
    pub max_over_sigma: Vec<Rational>,
    /// `min_π χ(h^π)`.
    pub min_over_pi: Vec<Rational>,
}

fn choices(per_node: Vec<Vec<usize>>) -> Result<Vec<Vec<usize>>> {
    let count = per_node
        .iter()
        .try_fold(1usize, |acc, c| acc.checked_mul(c.len()))
        .filter(|&c| c <= ENUMERATION_CAP)
        .ok_or_else(|| Error::SizeCap(format!("more than {ENUMERATION_CAP} strategies")))?;
    if per_node.is_empty() {
        return Ok(vec![Vec::new()]);
    }
    let all: Vec<Vec<usize>> = per_node.into_iter().multi_cartesian_product().collect();
    debug_assert_eq!(all.len(), count);
    Ok(all)
}

/// Evaluates every positional strategy of both players, each by enumerating
/// the simple cycles of the one-player graph.
pub fn enumerate_values(op: &MinMaxOperator) -> Result<EnumeratedValues> {
    op.require_assumptions()?;
    let (a, b, n, m) = (op.a(), op.b(), op.n(), op.m());
    let sigmas = choices(
        (0..m)
            .map(|i| (0..n).filter(|&k| b.get(i, k).is_finite()).collect())
            .collect(),
    )?;
    let pis = choices(
        (0..n)
            .map(|j| (0..m).filter(|&i| a.get(i, j).is_finite()).collect())
            .collect(),
    )?;
    let fold = |strategies: Vec<Strategy>, better: fn(Rational, Rational) -> Rational| {
        strategies
            .iter()
            .map(|s| certify_strategy_bruteforce(op, s))
            .reduce(|acc, vals| acc.into_iter().zip(vals).map(|(x, y)| better(x, y)).collect())
            .unwrap_or_default()
    };
    Ok(EnumeratedValues {
        max_over_sigma: fold(sigmas.into_iter().map(Strategy::Max).collect(), Ord::max),
        min_over_pi: fold(pis.into_iter().map(Strategy::Min).collect(), Ord::min),
    })
}

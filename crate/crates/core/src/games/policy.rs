use std::collections::HashSet;

use num_traits::{One, Zero};

use super::cycles::{max_reachable_cycle_mean, Adjacency};
use super::graph::Strategy;
use super::Rational;
use crate::error::{Error, Result};
use crate::linalg::{MinMaxOperator, TropMatrix};

/// Exact values and optimal positional strategies of a game.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GameValue {
    /// `χ_j(f)` per circle node.
    pub chi: Vec<Rational>,
    /// Bias `v`: `f(v + tη) = v + (t+1)η` for all large `t`, with `η = χ`.
    pub potential: Vec<Rational>,
    /// Optimal Max strategy `σ`, row to column.
    pub max_strategy: Vec<usize>,
    /// Optimal Min strategy `π`, column to row.
    pub min_strategy: Vec<usize>,
    /// Number of Min strategies evaluated.
    pub iterations: usize,
}

impl GameValue {
    /// `χ̄(f) = max_j χ_j`; `None` when there are no states.
    pub fn upper(&self) -> Option<Rational> {
        self.chi.iter().copied().max()
    }

    /// `min_j χ_j`.
    pub fn lower(&self) -> Option<Rational> {
        self.chi.iter().copied().min()
    }

    /// Mask of states with `χ_j >= 0`.
    pub fn winning(&self) -> Vec<bool> {
        self.chi.iter().map(|c| *c >= Rational::zero()).collect()
    }
}

/// One-player graph on circles where Max moves after Min plays `π`.
fn min_fixed_graph(op: &MinMaxOperator, pi: &[usize]) -> Adjacency {
    let (a, b) = (op.a(), op.b());
    pi.iter()
        .enumerate()
        .map(|(j, &i)| {
            let c = -a.get(i, j).finite().unwrap();
            (0..op.n())
                .filter_map(|k| b.get(i, k).finite().map(|w| (k, c + w)))
                .collect()
        })
        .collect()
}

/// One-player graph on circles where Min moves against `σ`, weights negated
/// so that maximizing the mean gives Min's optimum.
fn max_fixed_graph(op: &MinMaxOperator, sigma: &[usize]) -> Adjacency {
    let (a, b) = (op.a(), op.b());
    (0..op.n())
        .map(|j| {
            (0..op.m())
                .filter_map(|i| {
                    let aij = a.get(i, j).finite()?;
                    let w = b.get(i, sigma[i]).finite().unwrap();
                    Some((sigma[i], aij - w))
                })
                .collect()
        })
        .collect()
}

/// `χ(g^σ)` for a Max strategy or `χ(h^π)` for a Min strategy.
pub fn certify_strategy(op: &MinMaxOperator, s: &Strategy) -> Result<Vec<Rational>> {
    op.require_assumptions()?;
    s.validate(op)?;
    Ok(match s {
        Strategy::Min(pi) => max_reachable_cycle_mean(&min_fixed_graph(op, pi)),
        Strategy::Max(sigma) => max_reachable_cycle_mean(&max_fixed_graph(op, sigma))
            .into_iter()
            .map(|x| -x)
            .collect(),
    })
}

/// Same as [`certify_strategy`], evaluated by simple-cycle enumeration.
pub(crate) fn certify_strategy_bruteforce(op: &MinMaxOperator, s: &Strategy) -> Vec<Rational> {
    use super::cycles::max_reachable_cycle_mean_bruteforce as brute;
    match s {
        Strategy::Min(pi) => brute(&min_fixed_graph(op, pi)),
        Strategy::Max(sigma) => brute(&max_fixed_graph(op, sigma)).into_iter().map(|x| -x).collect(),
    }
}

/// Gain and bias of the one-player game fixed by `π`.
fn evaluate(
    op: &MinMaxOperator,
    pi: &[usize],
    previous: Option<(&[Rational], &[Rational])>,
) -> (Vec<Rational>, Vec<Rational>) {
    let n = op.n();
    let adj = min_fixed_graph(op, pi);
    let eta = max_reachable_cycle_mean(&adj);

    // Longest paths in the graph of level arcs with reduced weights.
    let mut dist: Vec<Vec<Option<Rational>>> = vec![vec![None; n]; n];
    let mut arcs = Vec::new();
    for (j, out) in adj.iter().enumerate() {
        dist[j][j] = Some(Rational::zero());
        for &(k, w) in out {
            if eta[k] == eta[j] {
                let r = Rational::from_integer(w) - eta[j];
                arcs.push((j, k, r));
                if dist[j][k].is_none_or(|d| r > d) {
                    dist[j][k] = Some(r);
                }
            }
        }
    }
    for t in 0..n {
        for i in 0..n {
            let Some(dit) = dist[i][t] else { continue };
            for k in 0..n {
                if let Some(dtk) = dist[t][k] {
                    let cand = dit + dtk;
                    if dist[i][k].is_none_or(|d| cand > d) {
                        dist[i][k] = Some(cand);
                    }
                }
            }
        }
    }

    let mut critical = vec![false; n];
    for &(j, k, r) in &arcs {
        if dist[k][j].is_some_and(|back| r + back == Rational::zero()) {
            critical[j] = true;
            critical[k] = true;
        }
    }
    let mut reps: Vec<(usize, Rational)> = Vec::new();
    for c in (0..n).filter(|&c| critical[c]) {
        let same_class = reps.iter().any(|&(r, _)| {
            matches!((dist[r][c], dist[c][r]), (Some(x), Some(y)) if x + y == Rational::zero())
        });
        if !same_class {
            let value = match previous {
                Some((old_eta, old_v)) if old_eta[c] == eta[c] => old_v[c],
                _ => Rational::zero(),
            };
            reps.push((c, value));
        }
    }
    let v = (0..n)
        .map(|j| {
            reps.iter()
                .filter_map(|&(c, vc)| dist[j][c].map(|d| d + vc))
                .max()
                .expect("every node reaches a critical class")
        })
        .collect();
    (eta, v)
}

/// Lexicographic value of row `i` at `(η, v)`: the best level reachable in one
/// Max move, then the best `B_ik + v_k` at that level.
fn row_key(b: &TropMatrix, i: usize, eta: &[Rational], v: &[Rational]) -> (Rational, Rational) {
    let level = (0..b.cols())
        .filter(|&k| b.get(i, k).is_finite())
        .map(|k| eta[k])
        .max()
        .expect("assumption 2");
    let best = (0..b.cols())
        .filter_map(|k| {
            let w = b.get(i, k).finite()?;
            (eta[k] == level).then(|| Rational::from_integer(w) + v[k])
        })
        .max()
        .unwrap();
    (level, best)
}

fn min_key(
    op: &MinMaxOperator,
    j: usize,
    i: usize,
    keys: &[(Rational, Rational)],
) -> Option<(Rational, Rational)> {
    let aij = op.a().get(i, j).finite()?;
    let (level, best) = keys[i];
    Some((level, best - Rational::from_integer(aij)))
}

/// Upper bound on evaluated strategies before the solver reports an internal error.
pub const POLICY_ITERATION_CAP: usize = 1_000_000;

/// Exact `χ(f)` with optimal strategies, by policy iteration on Min.
pub fn solve_exact(op: &MinMaxOperator) -> Result<GameValue> {
    op.require_assumptions()?;
    let (n, m) = (op.n(), op.m());
    let b = op.b();
    let zero_v = vec![Rational::zero(); n];
    let zero_keys: Vec<_> = (0..m).map(|i| row_key(b, i, &zero_v, &zero_v)).collect();
    let mut pi: Vec<usize> = (0..n)
        .map(|j| {
            (0..m)
                .filter_map(|i| min_key(op, j, i, &zero_keys).map(|k| (k, i)))
                .min()
                .unwrap()
                .1
        })
        .collect();

    let mut seen = HashSet::new();
    let mut state: Option<(Vec<Rational>, Vec<Rational>)> = None;
    loop {
        if !seen.insert(pi.clone()) || seen.len() > POLICY_ITERATION_CAP {
            return Err(Error::Internal(format!(
                "policy iteration revisited a strategy after {} steps",
                seen.len()
            )));
        }
        let (eta, v) = evaluate(op, &pi, state.as_ref().map(|(e, v)| (&e[..], &v[..])));
        let keys: Vec<_> = (0..m).map(|i| row_key(b, i, &eta, &v)).collect();
        let mut improved = false;
        for j in 0..n {
            let current = min_key(op, j, pi[j], &keys).unwrap();
            debug_assert_eq!(current, (eta[j], v[j] + eta[j]));
            let (best, i) = (0..m)
                .filter_map(|i| min_key(op, j, i, &keys).map(|k| (k, i)))
                .min()
                .unwrap();
            if best < current {
                pi[j] = i;
                improved = true;
            }
        }
        if !improved {
            let sigma: Vec<usize> = (0..m)
                .map(|i| {
                    (0..n)
                        .filter_map(|k| {
                            let w = b.get(i, k).finite()?;
                            Some(((eta[k], Rational::from_integer(w) + v[k]), std::cmp::Reverse(k)))
                        })
                        .max()
                        .unwrap()
                        .1
                        .0
                })
                .collect();
            let value = GameValue {
                chi: eta,
                potential: v,
                max_strategy: sigma,
                min_strategy: pi,
                iterations: seen.len(),
            };
            verify(op, &value)?;
            return Ok(value);
        }
        state = Some((eta, v));
    }
}

/// Both strategies must certify the same value: then it is `χ(f)`.
fn verify(op: &MinMaxOperator, value: &GameValue) -> Result<()> {
    let lower = certify_strategy(op, &Strategy::Max(value.max_strategy.clone()))?;
    let upper = certify_strategy(op, &Strategy::Min(value.min_strategy.clone()))?;
    if lower != value.chi || upper != value.chi {
        return Err(Error::Internal(format!(
            "strategy certificates disagree: {lower:?} / {:?} / {upper:?}",
            value.chi
        )));
    }
    Ok(())
}

/// `f` on finite rational vectors; both assumptions must hold.
pub fn apply_rational(op: &MinMaxOperator, x: &[Rational]) -> Result<Vec<Rational>> {
    op.require_assumptions()?;
    if x.len() != op.n() {
        return Err(Error::DimensionMismatch(format!(
            "expected length {}, got {}",
            op.n(),
            x.len()
        )));
    }
    let (a, b) = (op.a(), op.b());
    let bx: Vec<Rational> = (0..op.m())
        .map(|i| {
            (0..op.n())
                .filter_map(|k| b.get(i, k).finite().map(|w| Rational::from_integer(w) + x[k]))
                .max()
                .unwrap()
        })
        .collect();
    Ok((0..op.n())
        .map(|j| {
            (0..op.m())
                .filter_map(|i| a.get(i, j).finite().map(|w| bx[i] - Rational::from_integer(w)))
                .min()
                .unwrap()
        })
        .collect())
}

/// A point `w = v + tη` of the invariant half-line, so `f(w) = w + χ`.
pub fn super_eigenvector(op: &MinMaxOperator, value: &GameValue) -> Result<Vec<Rational>> {
    let point = |t: Rational| -> Vec<Rational> {
        value.potential.iter().zip(&value.chi).map(|(&v, &e)| v + t * e).collect()
    };
    let mut t = Rational::one();
    for _ in 0..100 {
        let w = point(t);
        if apply_rational(op, &w)? == point(t + Rational::one()) {
            return Ok(w);
        }
        t *= Rational::from_integer(2);
    }
    Err(Error::Internal("no point of the invariant half-line found".into()))
}

/// The operator `y ↦ -B A^#(-y)`, i.e. `(B^T)^# A^T`, obtained by swapping the players.
///
/// Works on the `m` squares instead of the `n` circles; its upper value is
/// `-min_j χ_j(f)` and `dual(dual(op)) = op`.
pub fn dual(op: &MinMaxOperator) -> MinMaxOperator {
    MinMaxOperator::new(op.b().transpose(), op.a().transpose()).expect("same shapes")
}

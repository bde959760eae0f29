use std::fmt::Write;

use crate::error::{Error, Result};
use crate::linalg::MinMaxOperator;

/// The bipartite game coded by `(A, B)`.
///
/// Circles are the `n` columns, where Min moves; squares are the `m` rows,
/// where Max moves. Min pays `-A_ij` to go from circle `j` to square `i`, Max
/// receives `B_ik` to go from square `i` to circle `k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GameGraph {
    n: usize,
    m: usize,
    min_arcs: Vec<(usize, usize, i128)>,
    max_arcs: Vec<(usize, usize, i128)>,
    max_weight: i128,
}

impl GameGraph {
    pub fn circles(&self) -> usize {
        self.n
    }

    pub fn squares(&self) -> usize {
        self.m
    }

    /// Arcs `(circle j, square i, -A_ij)`.
    pub fn min_arcs(&self) -> &[(usize, usize, i128)] {
        &self.min_arcs
    }

    /// Arcs `(square i, circle k, B_ik)`.
    pub fn max_arcs(&self) -> &[(usize, usize, i128)] {
        &self.max_arcs
    }

    /// `M`, the largest absolute arc weight.
    pub fn max_weight(&self) -> i128 {
        self.max_weight
    }

    /// Graphviz rendering; squares are `r<i>`, circles `c<j>`, 1-based.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph game {\n");
        for j in 1..=self.n {
            writeln!(s, "  c{j} [shape=circle];").unwrap();
        }
        for i in 1..=self.m {
            writeln!(s, "  r{i} [shape=box];").unwrap();
        }
        for &(j, i, w) in &self.min_arcs {
            writeln!(s, "  c{} -> r{} [label=\"{w}\"];", j + 1, i + 1).unwrap();
        }
        for &(i, k, w) in &self.max_arcs {
            writeln!(s, "  r{} -> c{} [label=\"{w}\"];", i + 1, k + 1).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

/// Builds the game graph; both assumptions must hold.
pub fn build_game(op: &MinMaxOperator) -> Result<GameGraph> {
    op.require_assumptions()?;
    let (a, b) = (op.a(), op.b());
    let mut min_arcs = Vec::new();
    for j in 0..op.n() {
        for i in 0..op.m() {
            if let Some(v) = a.get(i, j).finite() {
                min_arcs.push((j, i, -v));
            }
        }
    }
    let mut max_arcs = Vec::new();
    for i in 0..op.m() {
        for k in 0..op.n() {
            if let Some(v) = b.get(i, k).finite() {
                max_arcs.push((i, k, v));
            }
        }
    }
    Ok(GameGraph {
        n: op.n(),
        m: op.m(),
        min_arcs,
        max_arcs,
        max_weight: op.max_weight(),
    })
}

/// A positional strategy, 0-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Strategy {
    /// `σ`: square `i` moves to circle `σ[i]`; needs `B_{iσ(i)}` finite.
    Max(Vec<usize>),
    /// `π`: circle `j` moves to square `π[j]`; needs `A_{π(j)j}` finite.
    Min(Vec<usize>),
}

impl Strategy {
    pub fn validate(&self, op: &MinMaxOperator) -> Result<()> {
        let (choices, len, what) = match self {
            Strategy::Max(s) => (s, op.m(), "max"),
            Strategy::Min(p) => (p, op.n(), "min"),
        };
        if choices.len() != len {
            return Err(Error::InvalidStrategy(format!(
                "{what} strategy has {} moves, expected {len}",
                choices.len()
            )));
        }
        for (from, &to) in choices.iter().enumerate() {
            let ok = match self {
                Strategy::Max(_) => to < op.n() && op.b().get(from, to).is_finite(),
                Strategy::Min(_) => to < op.m() && op.a().get(to, from).is_finite(),
            };
            if !ok {
                return Err(Error::InvalidStrategy(format!(
                    "{what} move {} -> {} is not an arc",
                    from + 1,
                    to + 1
                )));
            }
        }
        Ok(())
    }
}

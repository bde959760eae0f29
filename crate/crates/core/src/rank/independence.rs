use itertools::Itertools;

use super::assignment::{is_tropically_nonsingular, tropical_permanent};
use crate::convexity::{cone_nontrivial, cone_support};
use crate::error::{Error, Result};
use crate::games::{power_algorithm, solve_exact, super_eigenvector, PowerTrace, Rational};
use crate::linalg::{
    check_balance_zero, enforce_assumptions, ExtMatrix, Matrix, MinMaxOperator, RowLabel,
    TropMatrix,
};
use crate::semiring::{inject, ExtNumber, Weight};

/// The game of the columns of `A`, or the column that settles the question.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IndependenceGame {
    /// `f = C^# D` on rows `(i, j)`.
    Operator(MinMaxOperator),
    /// This column has only ghost or zero entries: the columns are dependent.
    GhostColumn(usize),
}

fn ghost_column(a: &ExtMatrix) -> Option<usize> {
    (0..a.cols()).find(|&j| (0..a.rows()).all(|i| a.get(i, j).is_ghost()))
}

/// `C_{(i,j),k} = B_ij` if `k = j` and `A_ij` is real non-zero, and
/// `D_{(i,j),k} = B_ik` if `k != j`, where `B` holds the magnitudes of `A`.
/// `f_j(x) = min_{(i,j)} (-B_ij + max_{k != j} (B_ik + x_k))`.
pub fn independence_operator(a: &ExtMatrix) -> Result<IndependenceGame> {
    if let Some(j) = ghost_column(a) {
        return Ok(IndependenceGame::GhostColumn(j));
    }
    let (m, n) = (a.rows(), a.cols());
    let (c, d) = independence_matrices(a);
    let labels = (0..m * n).map(|r| RowLabel::Pair(r / n, r % n)).collect();
    Ok(IndependenceGame::Operator(MinMaxOperator::with_labels(c, d, labels)?))
}

/// `(C, D)` as above; `Cx <= Dx` iff `A x^∨ ∇ 0`, ghost columns or not.
pub fn independence_matrices(a: &ExtMatrix) -> (TropMatrix, TropMatrix) {
    let (m, n) = (a.rows(), a.cols());
    let b = a.project();
    let c = Matrix::from_fn(m * n, n, |r, k| {
        let (i, j) = (r / n, r % n);
        if k == j && a.get(i, j).is_invertible() {
            b.get(i, j)
        } else {
            Weight::Bottom
        }
    });
    let d = Matrix::from_fn(m * n, n, |r, k| if k != r % n { b.get(r / n, k) } else { Weight::Bottom });
    (c, d)
}

/// Verdict on the columns of `A` with its evidence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndependenceReport {
    pub independent: bool,
    /// `x ≢ -inf` with `A x^∨ ∇ 0`, when dependent.
    pub witness: Option<Vec<Weight>>,
    /// Rows of a tropically nonsingular `n x n` submatrix, when independent.
    pub rows: Option<Vec<usize>>,
    /// Power algorithm run on the (preprocessed) independence game.
    pub trace: Option<PowerTrace>,
}

fn unit(n: usize, j: usize) -> Vec<Weight> {
    (0..n).map(|k| if k == j { Weight::ZERO } else { Weight::Bottom }).collect()
}

fn verify_dependence(a: &ExtMatrix, x: &[Weight]) -> Result<()> {
    let ext: Vec<ExtNumber> = x.iter().map(|&v| inject(v)).collect();
    if x.iter().all(|v| v.is_bottom()) || !check_balance_zero(a, &ext)? {
        return Err(Error::Internal(format!("dependence witness {x:?} does not balance")));
    }
    Ok(())
}

fn split(op: &MinMaxOperator) -> (&TropMatrix, &TropMatrix) {
    (op.a(), op.b())
}

/// Tropical linear independence of the columns, by the power algorithm.
pub fn columns_independent(a: &ExtMatrix) -> Result<IndependenceReport> {
    let n = a.cols();
    let op = match independence_operator(a)? {
        IndependenceGame::GhostColumn(j) => {
            let x = unit(n, j);
            verify_dependence(a, &x)?;
            return Ok(IndependenceReport {
                independent: false,
                witness: Some(x),
                rows: None,
                trace: None,
            });
        }
        IndependenceGame::Operator(op) => op,
    };
    let (c, d) = split(&op);
    let report = cone_nontrivial(c, d)?;
    if report.feasible {
        let x = report.witness.unwrap();
        verify_dependence(a, &x)?;
        return Ok(IndependenceReport {
            independent: false,
            witness: Some(x),
            rows: None,
            trace: report.trace,
        });
    }
    if a.rows() < n {
        return Err(Error::Internal("more columns than rows cannot be independent".into()));
    }
    let rows = nonsingular_rows(a, &op)?;
    Ok(IndependenceReport {
        independent: true,
        witness: None,
        rows: Some(rows),
        trace: report.trace,
    })
}

/// Dependence witness of maximal support, or `None` if independent.
pub fn max_dependence_witness(a: &ExtMatrix) -> Result<Option<Vec<Weight>>> {
    let (c, d) = independence_matrices(a);
    let witness = cone_support(&c, &d)?.witness;
    if let Some(x) = &witness {
        verify_dependence(a, x)?;
    }
    Ok(witness)
}

/// Row set `I` of size `n` with `A[I, ·]` tropically nonsingular, when the
/// columns are independent.
pub fn nonsingular_submatrix(a: &ExtMatrix) -> Result<Option<Vec<usize>>> {
    if a.rows() < a.cols() {
        return Ok(None);
    }
    let op = match independence_operator(a)? {
        IndependenceGame::GhostColumn(_) => return Ok(None),
        IndependenceGame::Operator(op) => op,
    };
    let (c, d) = split(&op);
    if cone_nontrivial(c, d)?.feasible {
        return Ok(None);
    }
    nonsingular_rows(a, &op).map(Some)
}

/// Extracts `I` from a point `w` with `f(w) <= λ + w`, `λ < 0`.
///
/// `f` itself may violate the second assumption, so `w` is taken from the
/// operator whose missing `D` entries are replaced by `-L`, `L = 2nM + 1`:
/// that operator dominates `f` and still has negative upper value.
fn nonsingular_rows(a: &ExtMatrix, op: &MinMaxOperator) -> Result<Vec<usize>> {
    let (m, n) = (a.rows(), a.cols());
    let b = a.project();
    let real = |i: usize, j: usize| a.get(i, j).is_invertible();
    let sigma: Vec<usize> = if n == 1 {
        vec![(0..m).find(|&i| real(i, 0)).expect("column has a real entry")]
    } else {
        let l = 2 * n as i128 * b.max_abs() + 1;
        let d = op.b().map(|w| if w.is_bottom() { Weight::Finite(-l) } else { w });
        let d = Matrix::from_fn(m * n, n, |r, k| if k == r % n { Weight::Bottom } else { d.get(r, k) });
        let perturbed = MinMaxOperator::new(op.a().clone(), d)?;
        let value = solve_exact(&perturbed)?;
        if value.upper().is_some_and(|u| u >= Rational::from_integer(0)) {
            return Err(Error::Internal("perturbed independence game has a winning state".into()));
        }
        let w = super_eigenvector(&perturbed, &value)?;
        (0..n)
            .map(|j| {
                (0..m)
                    .filter(|&i| real(i, j))
                    .map(|i| {
                        let best = (0..n)
                            .filter(|&k| k != j)
                            .filter_map(|k| b.get(i, k).finite().map(|v| Rational::from_integer(v) + w[k]))
                            .max();
                        let cost = best.map(|x| x - Rational::from_integer(b.get(i, j).finite().unwrap()));
                        (cost.is_some(), cost, i)
                    })
                    .min()
                    .unwrap()
                    .2
            })
            .collect()
    };
    let rows: Vec<usize> = sigma.iter().copied().sorted().dedup().collect();
    if rows.len() != n || !is_tropically_nonsingular(&a.select_rows(&rows))? {
        return Err(Error::Internal(format!("row set {rows:?} is not nonsingular")));
    }
    Ok(rows)
}

/// Exhaustive search for a nonsingular `n x n` row subset.
pub fn nonsingular_submatrix_exhaustive(a: &ExtMatrix) -> Result<Option<Vec<usize>>> {
    for rows in (0..a.rows()).combinations(a.cols()) {
        if is_tropically_nonsingular(&a.select_rows(&rows))? {
            return Ok(Some(rows));
        }
    }
    Ok(None)
}

/// Verdict only: no certificate extraction.
pub fn independence_verdict(a: &ExtMatrix) -> Result<bool> {
    match independence_operator(a)? {
        IndependenceGame::GhostColumn(_) => Ok(false),
        IndependenceGame::Operator(op) => {
            let reduced = enforce_assumptions(op.a(), op.b())?;
            if reduced.n() == 0 {
                return Ok(true);
            }
            Ok(!power_algorithm(&reduced)?.nonnegative())
        }
    }
}

/// Some `r` columns are tropically independent.
pub fn rank_at_least(a: &ExtMatrix, r: usize) -> Result<bool> {
    if r > a.rows().min(a.cols()) {
        return Ok(false);
    }
    for cols in (0..a.cols()).combinations(r) {
        if independence_verdict(&a.select_cols(&cols))? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Column subsets examined by [`tropical_rank`] before it gives up.
pub const RANK_SUBSET_CAP: u128 = 100_000;

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, t| acc * (n - t) as u128 / (t + 1) as u128)
}

/// Largest `r` such that some `r` columns are independent.
pub fn tropical_rank(a: &ExtMatrix, subset_cap: u128) -> Result<usize> {
    let top = a.rows().min(a.cols());
    let work: u128 = (1..=top).map(|r| binomial(a.cols(), r)).sum();
    if work > subset_cap {
        return Err(Error::SizeCap(format!(
            "{work} column subsets exceed the cap {subset_cap}"
        )));
    }
    for r in (1..=top).rev() {
        if rank_at_least(a, r)? {
            return Ok(r);
        }
    }
    Ok(0)
}

/// Tropical rank as the largest nonsingular square submatrix, by enumeration.
pub fn rank_by_minors(a: &ExtMatrix) -> Result<usize> {
    let top = a.rows().min(a.cols());
    for r in (1..=top).rev() {
        for rows in (0..a.rows()).combinations(r) {
            for cols in (0..a.cols()).combinations(r) {
                if tropical_permanent(&a.select_rows(&rows).select_cols(&cols))?.is_invertible() {
                    return Ok(r);
                }
            }
        }
    }
    Ok(0)
}

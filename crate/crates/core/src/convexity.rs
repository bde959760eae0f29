//! Feasibility and support of tropical cones and polyhedra, decided through
//! the associated games.
//!
//! Witnesses are always returned in the coordinates of the input system and
//! are re-checked against `Ax <= Bx` before being reported.

use crate::error::{Error, Result};
use crate::games::{
    power_algorithm, solve_exact, winning_horizon, winning_states, PowerTrace, Rational,
    StopCondition,
};
use crate::linalg::{enforce_assumptions, homogenize, minmax_apply, MinMaxOperator, RowLabel, TropMatrix};
use crate::semiring::Weight;

/// Evidence attached to a [`FeasibilityReport`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Certificate {
    /// The witness vector itself satisfies the system.
    Witness,
    /// Preprocessing forced every variable to `-inf`.
    Eliminated,
    /// A Min strategy of the reduced game: circle `col` plays row `row`
    /// (original column index, row provenance), with the exact values
    /// `χ(h^π)` per remaining variable.
    MinStrategy {
        moves: Vec<(usize, RowLabel)>,
        values: Vec<(usize, Rational)>,
    },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FeasibilityReport {
    /// For cones: a solution other than `-inf` exists. For polyhedra: nonempty.
    pub feasible: bool,
    /// Sorted 0-based indices of finite witness coordinates.
    pub support: Vec<usize>,
    pub witness: Option<Vec<Weight>>,
    pub certificate: Certificate,
    /// The power algorithm run, when one was made.
    pub trace: Option<PowerTrace>,
}

impl FeasibilityReport {
    pub fn stop(&self) -> Option<StopCondition> {
        self.trace.as_ref().map(|t| t.stop)
    }
}

fn support_of(x: &[Weight]) -> Vec<usize> {
    (0..x.len()).filter(|&j| x[j].is_finite()).collect()
}

fn strategy_certificate(op: &MinMaxOperator) -> Result<Certificate> {
    let value = solve_exact(op)?;
    let kept = op.elimination().kept();
    Ok(Certificate::MinStrategy {
        moves: value
            .min_strategy
            .iter()
            .enumerate()
            .map(|(j, &i)| (kept[j], op.row_labels()[i]))
            .collect(),
        values: kept.iter().copied().zip(value.chi).collect(),
    })
}

fn infeasible(op: &MinMaxOperator, trace: Option<PowerTrace>) -> Result<FeasibilityReport> {
    let certificate = if op.n() == 0 {
        Certificate::Eliminated
    } else {
        strategy_certificate(op)?
    };
    Ok(FeasibilityReport {
        feasible: false,
        support: Vec::new(),
        witness: None,
        certificate,
        trace,
    })
}

fn check_witness(a: &TropMatrix, b: &TropMatrix, x: &[Weight]) -> Result<()> {
    let op = MinMaxOperator::new(a.clone(), b.clone())?;
    if !op.satisfies(x)? {
        return Err(Error::Internal(format!("witness {x:?} violates the system")));
    }
    Ok(())
}

/// Whether `Ax <= Bx` has a solution other than the `-inf` vector.
pub fn cone_nontrivial(a: &TropMatrix, b: &TropMatrix) -> Result<FeasibilityReport> {
    let op = enforce_assumptions(a, b)?;
    if op.n() == 0 {
        return infeasible(&op, None);
    }
    let trace = power_algorithm(&op)?;
    let witness = match trace.stop {
        StopCondition::AllNegative => return infeasible(&op, Some(trace)),
        StopCondition::Horizon => cone_support(a, b)?.witness.ok_or_else(|| {
            Error::Internal("horizon verdict without a winning state".into())
        })?,
        StopCondition::FixedPoint | StopCondition::PartialFixedPoint => {
            op.elimination().lift(trace.witness.as_ref().unwrap())
        }
    };
    check_witness(a, b, &witness)?;
    Ok(FeasibilityReport {
        feasible: true,
        support: support_of(&witness),
        witness: Some(witness),
        certificate: Certificate::Witness,
        trace: Some(trace),
    })
}

/// The support `S` of the cone (coordinates finite in some solution) with
/// an integer witness whose support is exactly `S`.
pub fn cone_support(a: &TropMatrix, b: &TropMatrix) -> Result<FeasibilityReport> {
    let op = enforce_assumptions(a, b)?;
    if op.n() == 0 {
        return infeasible(&op, None);
    }
    let winning = winning_states(&op)?;
    let s: Vec<usize> = (0..op.n()).filter(|&j| winning[j]).collect();
    if s.is_empty() {
        return infeasible(&op, None);
    }
    let restricted = enforce_assumptions(&op.a().select_cols(&s), &op.b().select_cols(&s))?;
    if restricted.elimination().eliminated_any() {
        return Err(Error::Internal("winning set is not closed".into()));
    }
    let guard = winning_horizon(&restricted) + 1;
    let mut z = vec![Weight::ZERO; s.len()];
    let mut steps: u128 = 0;
    loop {
        let next: Vec<Weight> = minmax_apply(&restricted, &z)?
            .into_iter()
            .zip(&z)
            .map(|(fz, &zj)| fz.min(zj))
            .collect();
        if next == z {
            break;
        }
        if next.iter().any(|v| v.is_bottom()) || steps == guard {
            return Err(Error::Internal("support iteration did not stabilize".into()));
        }
        z = next;
        steps += 1;
    }
    let mut reduced = vec![Weight::Bottom; op.n()];
    for (t, &j) in s.iter().enumerate() {
        reduced[j] = z[t];
    }
    let witness = op.elimination().lift(&reduced);
    check_witness(a, b, &witness)?;
    let support = support_of(&witness);
    debug_assert_eq!(support.len(), s.len());
    Ok(FeasibilityReport {
        feasible: true,
        support,
        witness: Some(witness),
        certificate: Certificate::Witness,
        trace: None,
    })
}

/// A solution with every coordinate finite, if one exists.
pub fn finite_solution(a: &TropMatrix, b: &TropMatrix) -> Result<Option<Vec<Weight>>> {
    let report = cone_support(a, b)?;
    Ok(report.witness.filter(|x| x.iter().all(|v| v.is_finite())))
}

/// A witness with entries in `Z ∪ {-inf}` and maximal support.
pub fn integer_witness(a: &TropMatrix, b: &TropMatrix) -> Result<Option<Vec<Weight>>> {
    Ok(cone_support(a, b)?.witness)
}

/// Whether `{x : max(Ax, c) <= max(Bx, d)}` is nonempty.
pub fn poly_nonempty(
    a: &TropMatrix,
    b: &TropMatrix,
    c: &[Weight],
    d: &[Weight],
) -> Result<FeasibilityReport> {
    let (ah, bh) = homogenize(a, b, c, d)?;
    let n = a.cols();
    let cone = cone_support(&ah, &bh)?;
    let Some(y) = cone.witness.filter(|y| y[n].is_finite()) else {
        let op = enforce_assumptions(&ah, &bh)?;
        return infeasible(&op, None);
    };
    let shift = y[n].finite().unwrap();
    let x: Vec<Weight> = y[..n].iter().map(|v| v.shift(-shift)).collect();
    Ok(FeasibilityReport {
        feasible: true,
        support: support_of(&x),
        witness: Some(x),
        certificate: Certificate::Witness,
        trace: None,
    })
}

/// An affine system `max(A'y, c') <= max(B'y, d')` in integer data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineSystem {
    pub a: TropMatrix,
    pub b: TropMatrix,
    pub c: Vec<Weight>,
    pub d: Vec<Weight>,
    /// Every weight of the game was multiplied by this factor.
    pub scale: i128,
}

/// The polyhedron over the variables other than `r` which is nonempty iff
/// `χ_r(f) >= λ`.
pub fn game_to_polyhedron(op: &MinMaxOperator, r: usize, lambda: Rational) -> Result<AffineSystem> {
    if r >= op.n() {
        return Err(Error::DimensionMismatch(format!(
            "state {} out of range 1..={}",
            r + 1,
            op.n()
        )));
    }
    let (p, q) = (*lambda.numer(), *lambda.denom());
    let others: Vec<usize> = (0..op.n()).filter(|&j| j != r).collect();
    let scaled = |w: Weight, add: i128| match w {
        Weight::Finite(v) => Weight::Finite(v * q + add),
        Weight::Bottom => Weight::Bottom,
    };
    let a = op.a().select_cols(&others).map(|w| scaled(w, p));
    let b = op.b().select_cols(&others).map(|w| scaled(w, 0));
    let c = op.a().column(r).into_iter().map(|w| scaled(w, p)).collect();
    let d = op.b().column(r).into_iter().map(|w| scaled(w, 0)).collect();
    Ok(AffineSystem { a, b, c, d, scale: q })
}

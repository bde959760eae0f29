use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::matrix::{matvec, Matrix, TropMatrix};
use crate::semiring::Weight;

/// `R ∪ {±inf}`, the codomain of residuation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Extended {
    NegInf,
    Finite(i128),
    PosInf,
}

impl Extended {
    /// Drops `+inf`; `None` if the value is `+inf`.
    pub fn to_weight(self) -> Option<Weight> {
        match self {
            Extended::NegInf => Some(Weight::Bottom),
            Extended::Finite(v) => Some(Weight::Finite(v)),
            Extended::PosInf => None,
        }
    }
}

impl From<Weight> for Extended {
    fn from(w: Weight) -> Self {
        match w {
            Weight::Bottom => Extended::NegInf,
            Weight::Finite(v) => Extended::Finite(v),
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::NegInf => f.write_str("-inf"),
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::PosInf => f.write_str("+inf"),
        }
    }
}

/// `(A^# y)_j = min_i (-A_ij + y_i)`, with `(+inf) + (-inf) = +inf`.
pub fn residual_apply(a: &TropMatrix, y: &[Extended]) -> Result<Vec<Extended>> {
    if a.rows() != y.len() {
        return Err(Error::DimensionMismatch(format!(
            "residual_apply: expected length {}, got {}",
            a.rows(),
            y.len()
        )));
    }
    Ok((0..a.cols())
        .map(|j| {
            (0..a.rows())
                .filter_map(|i| {
                    let aij = a.get(i, j).finite()?;
                    Some(match y[i] {
                        Extended::Finite(v) => Extended::Finite(v - aij),
                        other => other,
                    })
                })
                .min()
                .unwrap_or(Extended::PosInf)
        })
        .collect())
}

/// Where a row of an operator came from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RowLabel {
    /// Row `i` of the input system.
    Original(usize),
    /// The added inequality `x_j <= x_j`.
    Trivial(usize),
    /// Row `(i, j)` of the independence game.
    Pair(usize, usize),
}

/// Bookkeeping of the elimination preprocessing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Elimination {
    original_dim: usize,
    kept: Vec<usize>,
    forced: Vec<usize>,
    dropped_rows: Vec<RowLabel>,
}

impl Elimination {
    pub fn identity(n: usize) -> Self {
        Elimination {
            original_dim: n,
            kept: (0..n).collect(),
            forced: Vec::new(),
            dropped_rows: Vec::new(),
        }
    }

    pub fn original_dim(&self) -> usize {
        self.original_dim
    }

    /// Original index of each remaining variable.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    /// Variables forced to `-inf`, in the order they were eliminated.
    pub fn forced(&self) -> &[usize] {
        &self.forced
    }

    pub fn dropped_rows(&self) -> &[RowLabel] {
        &self.dropped_rows
    }

    pub fn eliminated_any(&self) -> bool {
        !self.forced.is_empty()
    }

    /// Maps a vector of the reduced system to original coordinates.
    pub fn lift(&self, reduced: &[Weight]) -> Vec<Weight> {
        assert_eq!(reduced.len(), self.kept.len(), "lift: wrong length");
        let mut x = vec![Weight::Bottom; self.original_dim];
        for (&j, &v) in self.kept.iter().zip(reduced) {
            x[j] = v;
        }
        x
    }

    /// Restricts an original-coordinate vector to the remaining variables.
    pub fn restrict(&self, original: &[Weight]) -> Vec<Weight> {
        self.kept.iter().map(|&j| original[j]).collect()
    }
}

/// The min-max function `f = A^# B` on `(R ∪ {-inf})^n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinMaxOperator {
    a: TropMatrix,
    b: TropMatrix,
    labels: Vec<RowLabel>,
    elimination: Elimination,
}

impl MinMaxOperator {
    pub fn new(a: TropMatrix, b: TropMatrix) -> Result<Self> {
        let labels = (0..a.rows()).map(RowLabel::Original).collect();
        MinMaxOperator::with_labels(a, b, labels)
    }

    pub fn with_labels(a: TropMatrix, b: TropMatrix, labels: Vec<RowLabel>) -> Result<Self> {
        check_same_shape(&a, &b)?;
        if labels.len() != a.rows() {
            return Err(Error::DimensionMismatch(format!(
                "{} row labels for {} rows",
                labels.len(),
                a.rows()
            )));
        }
        let elimination = Elimination::identity(a.cols());
        Ok(MinMaxOperator {
            a,
            b,
            labels,
            elimination,
        })
    }

    /// `f = id`, encoded by the tropical identity on both sides.
    pub fn identity(n: usize) -> Self {
        MinMaxOperator::new(TropMatrix::identity(n), TropMatrix::identity(n))
            .expect("square identity")
    }

    pub fn a(&self) -> &TropMatrix {
        &self.a
    }

    pub fn b(&self) -> &TropMatrix {
        &self.b
    }

    /// Number of rows (Max positions).
    pub fn m(&self) -> usize {
        self.a.rows()
    }

    /// Number of variables (Min positions).
    pub fn n(&self) -> usize {
        self.a.cols()
    }

    pub fn row_labels(&self) -> &[RowLabel] {
        &self.labels
    }

    pub fn elimination(&self) -> &Elimination {
        &self.elimination
    }

    /// Every column of `A` has a finite entry.
    pub fn assumption1_ok(&self) -> bool {
        (0..self.n()).all(|j| self.a.col_has_finite(j))
    }

    /// Every row of `B` has a finite entry.
    pub fn assumption2_ok(&self) -> bool {
        (0..self.m()).all(|i| self.b.row_has_finite(i))
    }

    /// Fails unless both assumptions hold.
    pub fn require_assumptions(&self) -> Result<()> {
        if let Some(j) = (0..self.n()).find(|&j| !self.a.col_has_finite(j)) {
            return Err(Error::AssumptionViolated(format!(
                "column {} of A has no finite entry",
                j + 1
            )));
        }
        if let Some(i) = (0..self.m()).find(|&i| !self.b.row_has_finite(i)) {
            return Err(Error::AssumptionViolated(format!(
                "row {} of B has no finite entry",
                i + 1
            )));
        }
        Ok(())
    }

    /// Largest absolute finite weight of `A` and `B`.
    pub fn max_weight(&self) -> i128 {
        self.a.max_abs().max(self.b.max_abs())
    }

    /// Applies `f`.
    pub fn apply(&self, x: &[Weight]) -> Result<Vec<Weight>> {
        minmax_apply(self, x)
    }

    /// Whether `A x <= B x` holds componentwise.
    pub fn satisfies(&self, x: &[Weight]) -> Result<bool> {
        let ax = matvec(&self.a, x)?;
        let bx = matvec(&self.b, x)?;
        Ok(ax.iter().zip(&bx).all(|(l, r)| l <= r))
    }
}

fn check_same_shape(a: &TropMatrix, b: &TropMatrix) -> Result<()> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::DimensionMismatch(format!(
            "A is {}x{} but B is {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(())
}

/// `f(x) = A^#(Bx)`; refuses to produce a `+inf` component.
pub fn minmax_apply(op: &MinMaxOperator, x: &[Weight]) -> Result<Vec<Weight>> {
    let bx: Vec<Extended> = matvec(&op.b, x)?.into_iter().map(Extended::from).collect();
    residual_apply(&op.a, &bx)?
        .into_iter()
        .enumerate()
        .map(|(j, v)| v.to_weight().ok_or(Error::PositiveInfinity(j + 1)))
        .collect()
}

/// Rows of a composed operator above this count are refused.
pub const COMPOSE_ROW_CAP: usize = 200_000;

/// Operator `A2^# B2` equal to `f ∘ g`, for `f = A^# B`, `g = C^# D`.
///
/// Rows are indexed by a row `i` of `f` together with a choice of a row `l` of
/// `g` with `C_lk` finite for every `k` with `B_ik` finite.
pub fn compose(f: &MinMaxOperator, g: &MinMaxOperator) -> Result<MinMaxOperator> {
    if f.n() != g.n() {
        return Err(Error::DimensionMismatch(format!(
            "compose: {} vs {} variables",
            f.n(),
            g.n()
        )));
    }
    let n = f.n();
    let (c, d) = (&g.a, &g.b);
    let col_rows: Vec<Vec<usize>> = (0..n)
        .map(|k| (0..c.rows()).filter(|&l| c.get(l, k).is_finite()).collect())
        .collect();
    let mut a_rows = Vec::new();
    let mut b_rows = Vec::new();
    for i in 0..f.m() {
        let support: Vec<usize> = (0..n).filter(|&k| f.b.get(i, k).is_finite()).collect();
        // An empty column of C makes row i of B C^# D identically +inf.
        if support.iter().any(|&k| col_rows[k].is_empty()) {
            continue;
        }
        let mut choice = vec![0usize; support.len()];
        loop {
            if a_rows.len() >= COMPOSE_ROW_CAP {
                return Err(Error::SizeCap(format!(
                    "composition exceeds {COMPOSE_ROW_CAP} rows"
                )));
            }
            let mut row = vec![Weight::Bottom; n];
            for (t, &k) in support.iter().enumerate() {
                let l = col_rows[k][choice[t]];
                let shift = f.b.get(i, k).finite().unwrap() - c.get(l, k).finite().unwrap();
                for (p, slot) in row.iter_mut().enumerate() {
                    *slot = (*slot).max(d.get(l, p).shift(shift));
                }
            }
            a_rows.push(f.a.row(i).to_vec());
            b_rows.push(row);
            // Odometer over the choices.
            let mut t = 0;
            while t < support.len() {
                choice[t] += 1;
                if choice[t] < col_rows[support[t]].len() {
                    break;
                }
                choice[t] = 0;
                t += 1;
            }
            if t == support.len() {
                break;
            }
        }
    }
    let a2 = Matrix::new(a_rows.len(), n, a_rows.concat())?;
    let b2 = Matrix::new(b_rows.len(), n, b_rows.concat())?;
    MinMaxOperator::new(a2, b2)
}

/// Appends `c` and `d` as an extra column of `A` and `B`.
pub fn homogenize(
    a: &TropMatrix,
    b: &TropMatrix,
    c: &[Weight],
    d: &[Weight],
) -> Result<(TropMatrix, TropMatrix)> {
    check_same_shape(a, b)?;
    if c.len() != a.rows() || d.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "affine parts have lengths {} and {}, expected {}",
            c.len(),
            d.len(),
            a.rows()
        )));
    }
    let n = a.cols();
    let ah = Matrix::from_fn(a.rows(), n + 1, |i, j| if j < n { a.get(i, j) } else { c[i] });
    let bh = Matrix::from_fn(b.rows(), n + 1, |i, j| if j < n { b.get(i, j) } else { d[i] });
    Ok((ah, bh))
}

/// Reduces `Ax <= Bx` to an equivalent system satisfying both assumptions.
///
/// Trivial rows `x_j <= x_j` are appended; then rows are scanned in index
/// order, repeatedly until a pass changes nothing: a row whose `A`-part is
/// identically `-inf` is dropped, and a row whose `B`-part is identically
/// `-inf` forces every variable with a finite `A`-entry to `-inf` and is
/// dropped.
pub fn enforce_assumptions(a: &TropMatrix, b: &TropMatrix) -> Result<MinMaxOperator> {
    check_same_shape(a, b)?;
    let (m, n) = (a.rows(), a.cols());
    let a_full = Matrix::from_fn(m + n, n, |i, j| {
        if i < m {
            a.get(i, j)
        } else if i - m == j {
            Weight::ZERO
        } else {
            Weight::Bottom
        }
    });
    let b_full = Matrix::from_fn(m + n, n, |i, j| if i < m { b.get(i, j) } else { a_full.get(i, j) });
    let labels: Vec<RowLabel> = (0..m)
        .map(RowLabel::Original)
        .chain((0..n).map(RowLabel::Trivial))
        .collect();

    let mut row_alive = vec![true; m + n];
    let mut col_alive = vec![true; n];
    let mut forced = Vec::new();
    let mut dropped = Vec::new();
    loop {
        let mut changed = false;
        for i in 0..m + n {
            if !row_alive[i] {
                continue;
            }
            let a_live = |j: usize| col_alive[j] && a_full.get(i, j).is_finite();
            if !(0..n).any(a_live) {
                row_alive[i] = false;
                dropped.push(labels[i]);
                changed = true;
            } else if !(0..n).any(|j| col_alive[j] && b_full.get(i, j).is_finite()) {
                for j in 0..n {
                    if col_alive[j] && a_full.get(i, j).is_finite() {
                        col_alive[j] = false;
                        forced.push(j);
                    }
                }
                row_alive[i] = false;
                dropped.push(labels[i]);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let rows: Vec<usize> = (0..m + n).filter(|&i| row_alive[i]).collect();
    let cols: Vec<usize> = (0..n).filter(|&j| col_alive[j]).collect();
    let ar = a_full.select_rows(&rows).select_cols(&cols);
    let br = b_full.select_rows(&rows).select_cols(&cols);
    let mut op = MinMaxOperator::with_labels(ar, br, rows.iter().map(|&i| labels[i]).collect())?;
    op.elimination = Elimination {
        original_dim: n,
        kept: cols,
        forced,
        dropped_rows: dropped,
    };
    debug_assert!(op.assumption1_ok() && op.assumption2_ok());
    Ok(op)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: i128) -> Weight {
        Weight::Finite(v)
    }
    const NEG: Weight = Weight::BOTTOM;

    fn first_game() -> MinMaxOperator {
        MinMaxOperator::new(
            TropMatrix::parse_rows("2 -inf; 8 -inf; -inf 0").unwrap(),
            TropMatrix::parse_rows("1 -inf; -3 -12; -9 5").unwrap(),
        )
        .unwrap()
    }

    // f_1 = min(-1 + x1, max(-11 + x1, -20 + x2)), f_2 = max(-9 + x1, 5 + x2)
    fn first_game_oracle(x: &[Weight]) -> Vec<Weight> {
        let f1 = x[0].shift(-1).min(x[0].shift(-11).max(x[1].shift(-20)));
        let f2 = x[0].shift(-9).max(x[1].shift(5));
        vec![f1, f2]
    }

    #[test]
    fn first_game_values() {
        let op = first_game();
        assert_eq!(op.apply(&[w(0), w(0)]).unwrap(), vec![w(-11), w(5)]);
        assert_eq!(op.apply(&[NEG, w(0)]).unwrap(), vec![NEG, w(5)]);
        for x in [[w(3), w(-4)], [NEG, NEG], [w(-7), NEG], [w(10), w(10)]] {
            assert_eq!(op.apply(&x).unwrap(), first_game_oracle(&x));
        }
    }

    #[test]
    fn identity_fixes_everything() {
        let op = MinMaxOperator::identity(3);
        let x = vec![w(2), NEG, w(-5)];
        assert_eq!(op.apply(&x).unwrap(), x);
        let y: Vec<Extended> = x.iter().map(|&v| v.into()).collect();
        assert_eq!(residual_apply(op.a(), &y).unwrap(), y);
    }

    #[test]
    fn empty_column_gives_plus_infinity() {
        let a = TropMatrix::parse_rows("0 -inf; 1 -inf").unwrap();
        let r = residual_apply(&a, &[Extended::Finite(0), Extended::NegInf]).unwrap();
        assert_eq!(r, vec![Extended::NegInf, Extended::PosInf]);
        let op = MinMaxOperator::new(a.clone(), a).unwrap();
        assert!(!op.assumption1_ok());
        assert_eq!(op.apply(&[w(0), w(0)]), Err(Error::PositiveInfinity(2)));
    }

    #[test]
    fn elimination_examples() {
        let g = first_game();
        let op = enforce_assumptions(g.a(), g.b()).unwrap();
        assert_eq!(op.m(), 5);
        assert_eq!(op.n(), 2);
        assert!(op.elimination().forced().is_empty());

        let op = enforce_assumptions(
            &TropMatrix::parse_rows("0").unwrap(),
            &TropMatrix::parse_rows("-inf").unwrap(),
        )
        .unwrap();
        assert_eq!(op.elimination().forced(), &[0]);
        assert_eq!((op.m(), op.n()), (0, 0));
        assert_eq!(op.elimination().lift(&[]), vec![NEG]);

        let op = enforce_assumptions(
            &TropMatrix::parse_rows("0 -inf; -inf 0").unwrap(),
            &TropMatrix::parse_rows("-inf -inf; 0 0").unwrap(),
        )
        .unwrap();
        assert_eq!(op.elimination().forced(), &[0]);
        assert_eq!(op.elimination().kept(), &[1]);
        assert_eq!(op.row_labels(), &[RowLabel::Original(1), RowLabel::Trivial(1)]);
        assert!(op.assumption1_ok() && op.assumption2_ok());
    }

    #[test]
    fn homogenize_examples() {
        let a = TropMatrix::parse_rows("0").unwrap();
        let b = TropMatrix::parse_rows("-inf").unwrap();
        let (ah, bh) = homogenize(&a, &b, &[NEG], &[w(0)]).unwrap();
        assert_eq!(ah, TropMatrix::parse_rows("0 -inf").unwrap());
        assert_eq!(bh, TropMatrix::parse_rows("-inf 0").unwrap());
        assert!(homogenize(&a, &b, &[NEG, NEG], &[w(0)]).is_err());

        // Split the last column off the first game and reassemble.
        let g = first_game();
        let keep = [0];
        let (ah, bh) = homogenize(
            &g.a().select_cols(&keep),
            &g.b().select_cols(&keep),
            &g.a().column(1),
            &g.b().column(1),
        )
        .unwrap();
        assert_eq!((&ah, &bh), (g.a(), g.b()));
    }

    #[test]
    fn compose_matches_iterated_application() {
        let g = first_game();
        let ff = compose(&g, &g).unwrap();
        for x in [[w(0), w(0)], [NEG, w(0)], [w(4), w(-9)], [w(-3), NEG]] {
            let twice = g.apply(&g.apply(&x).unwrap()).unwrap();
            assert_eq!(ff.apply(&x).unwrap(), twice);
        }
    }
}

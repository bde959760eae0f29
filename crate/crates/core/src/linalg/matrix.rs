use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::semiring::{ext_add, ext_mul, ExtNumber, Weight};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Matrix over `R_max`.
pub type TropMatrix = Matrix<Weight>;
/// Matrix over the extended tropical semiring.
pub type ExtMatrix = Matrix<ExtNumber>;

impl<T: Copy> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} entries, expected {cols}",
                bad + 1,
                rows[bad].len()
            )));
        }
        let m = rows.len();
        Ok(Matrix {
            rows: m,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn map<U: Copy>(&self, f: impl Fn(T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), self.cols, |i, j| self.get(rows[i], j))
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]))
    }

    /// Deletes row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        self.select_rows(&rows).select_cols(&cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> impl Iterator<Item = T> + '_ {
        self.data.iter().copied()
    }
}

impl<T: Copy + FromStr<Err = Error>> Matrix<T> {
    /// Parses rows of whitespace-separated scalar tokens; rows are separated
    /// by newlines or `;`.
    pub fn parse_rows(text: &str) -> Result<Self> {
        let rows = text
            .split([';', '\n'])
            .filter(|r| !r.trim().is_empty())
            .map(|r| r.split_whitespace().map(str::parse).collect::<Result<Vec<T>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T: Copy + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl TropMatrix {
    /// Tropical identity: `0` on the diagonal, `-inf` elsewhere.
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { Weight::ZERO } else { Weight::BOTTOM })
    }

    /// Largest absolute value of a finite entry (0 if there is none).
    pub fn max_abs(&self) -> i128 {
        self.entries().filter_map(Weight::finite).map(i128::abs).max().unwrap_or(0)
    }

    pub fn row_has_finite(&self, i: usize) -> bool {
        self.row(i).iter().any(|w| w.is_finite())
    }

    pub fn col_has_finite(&self, j: usize) -> bool {
        (0..self.rows).any(|i| self.get(i, j).is_finite())
    }

    /// View as an extended matrix of real entries.
    pub fn to_ext(&self) -> ExtMatrix {
        self.map(crate::semiring::inject)
    }
}

impl ExtMatrix {
    /// Magnitudes of the entries.
    pub fn project(&self) -> TropMatrix {
        self.map(ExtNumber::magnitude)
    }
}

fn check_len(what: &str, expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch(format!(
            "{what}: expected length {expected}, got {got}"
        )));
    }
    Ok(())
}

/// Max-plus product `Bx`.
pub fn matvec(b: &TropMatrix, x: &[Weight]) -> Result<Vec<Weight>> {
    check_len("matvec", b.cols(), x.len())?;
    Ok((0..b.rows())
        .map(|i| {
            b.row(i)
                .iter()
                .zip(x)
                .map(|(&bij, &xj)| bij.mul(xj))
                .max()
                .unwrap_or(Weight::BOTTOM)
        })
        .collect())
}

/// Product `Ax` over the extended semiring; `x` must be real-typed.
pub fn ext_matvec(a: &ExtMatrix, x: &[ExtNumber]) -> Result<Vec<ExtNumber>> {
    check_len("ext_matvec", a.cols(), x.len())?;
    if let Some(j) = x.iter().position(|e| !e.is_real()) {
        return Err(Error::NotReal(format!("entry {} is {}", j + 1, x[j])));
    }
    Ok((0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .zip(x)
                .fold(ExtNumber::ZERO, |acc, (&aij, &xj)| ext_add(acc, ext_mul(aij, xj)))
        })
        .collect())
}

/// Whether `Ax ∇ 0`, i.e. every component of `Ax` is ghost or zero.
pub fn check_balance_zero(a: &ExtMatrix, x: &[ExtNumber]) -> Result<bool> {
    Ok(ext_matvec(a, x)?.iter().all(|e| e.is_ghost()))
}

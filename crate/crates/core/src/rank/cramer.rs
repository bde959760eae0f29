use crate::error::{Error, Result};
use crate::linalg::ExtMatrix;
use crate::semiring::{balances, ext_add, ext_mul, ExtNumber};

use super::assignment::tropical_permanent;

/// `(A^adj)_{ji} = per A(i|j)`, `A(i|j)` deleting row `i` and column `j`.
pub fn adjugate(a: &ExtMatrix) -> Result<ExtMatrix> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("adjugate of a non-square matrix".into()));
    }
    let n = a.rows();
    let mut adj = ExtMatrix::filled(n, n, ExtNumber::ZERO);
    for i in 0..n {
        for j in 0..n {
            adj.set(j, i, tropical_permanent(&a.minor(i, j))?);
        }
    }
    Ok(adj)
}

/// The unique real solution of `Ax ∇ b`, when `per A` is invertible and
/// `A^adj b` is real.
pub fn cramer_solve(a: &ExtMatrix, b: &[ExtNumber]) -> Result<Option<Vec<ExtNumber>>> {
    if !a.is_square() || b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "cramer_solve needs a square matrix and a matching right side, got {}x{} and {}",
            a.rows(),
            a.cols(),
            b.len()
        )));
    }
    let Some(inv) = tropical_permanent(a)?.inverse() else {
        return Ok(None);
    };
    let adj = adjugate(a)?;
    let y: Vec<ExtNumber> = (0..a.rows())
        .map(|j| (0..a.rows()).fold(ExtNumber::ZERO, |acc, i| ext_add(acc, ext_mul(adj.get(j, i), b[i]))))
        .collect();
    if !y.iter().all(|e| e.is_real()) {
        return Ok(None);
    }
    let x: Vec<ExtNumber> = y.into_iter().map(|e| ext_mul(inv, e)).collect();
    if !solves(a, &x, b) {
        return Err(Error::Internal("Cramer solution does not balance".into()));
    }
    Ok(Some(x))
}

/// `(Ax)_i ∇ b_i` for every `i`.
pub fn solves(a: &ExtMatrix, x: &[ExtNumber], b: &[ExtNumber]) -> bool {
    (0..a.rows()).all(|i| {
        let ax = (0..a.cols()).fold(ExtNumber::ZERO, |acc, j| ext_add(acc, ext_mul(a.get(i, j), x[j])));
        balances(ax, b[i])
    })
}

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::{ExtMatrix, TropMatrix};
use crate::semiring::{ext_add, ext_mul, ExtNumber, Weight};

/// Solution of the optimal assignment problem `max_σ Σ_i B_{iσ(i)}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AssignmentResult {
    pub value: Weight,
    /// An optimal permutation, row to column; absent when the value is `-inf`.
    pub permutation: Option<Vec<usize>>,
    /// Exactly one permutation attains the value (false when it is `-inf`).
    pub unique: bool,
    /// The unique optimum passes through a ghost entry (extended case only).
    pub ghost: bool,
}

fn check_square(rows: usize, cols: usize) -> Result<()> {
    if rows != cols {
        return Err(Error::DimensionMismatch(format!("{rows}x{cols} matrix is not square")));
    }
    Ok(())
}

/// Whether the finite entries of `b` support a perfect matching.
fn has_finite_matching(b: &TropMatrix) -> bool {
    let n = b.rows();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    fn augment(b: &TropMatrix, i: usize, seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for j in 0..b.cols() {
            if b.get(i, j).is_finite() && !seen[j] {
                seen[j] = true;
                if owner[j].is_none_or(|k| augment(b, k, seen, owner)) {
                    owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    (0..n).all(|i| augment(b, i, &mut vec![false; n], &mut owner))
}

/// Hungarian algorithm on the costs `-B`, with `-inf` entries priced out.
/// Returns the column of each row and dual potentials `(u, v)` with
/// `u_i + v_j <= cost_ij`, tight on the assignment.
fn hungarian(cost: &[Vec<i128>]) -> (Vec<usize>, Vec<i128>, Vec<i128>) {
    let n = cost.len();
    let inf = i128::MAX / 4;
    let mut u = vec![0i128; n + 1];
    let mut v = vec![0i128; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut perm = vec![0usize; n];
    for j in 1..=n {
        perm[p[j] - 1] = j - 1;
    }
    (perm, u[1..].to_vec(), v[1..].to_vec())
}

/// Whether the digraph `i -> i'` (row `i` may take the column of row `i'`)
/// has a cycle, i.e. a second optimal permutation exists.
fn has_alternating_cycle(tight: &[Vec<bool>], perm: &[usize]) -> bool {
    let n = perm.len();
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    fn visit(i: usize, tight: &[Vec<bool>], perm: &[usize], state: &mut [u8]) -> bool {
        state[i] = 1;
        for k in 0..perm.len() {
            if k != i
                && tight[i][perm[k]]
                && (state[k] == 1 || (state[k] == 0 && visit(k, tight, perm, state)))
            {
                return true;
            }
        }
        state[i] = 2;
        false
    }
    (0..n).any(|i| state[i] == 0 && visit(i, tight, perm, &mut state))
}

/// Optimal assignment value of a square matrix with uniqueness, in `O(n^3)`.
pub fn optimal_assignment(b: &TropMatrix) -> Result<AssignmentResult> {
    check_square(b.rows(), b.cols())?;
    let n = b.rows();
    if !has_finite_matching(b) {
        return Ok(AssignmentResult {
            value: Weight::Bottom,
            permutation: None,
            unique: false,
            ghost: false,
        });
    }
    // A permutation through a priced-out entry costs more than any finite one.
    let big = 2 * n as i128 * b.max_abs() + 1;
    let cost: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| b.get(i, j).finite().map_or(big, |v| -v)).collect())
        .collect();
    let (perm, u, v) = hungarian(&cost);
    let value: i128 = perm.iter().enumerate().map(|(i, &j)| b.get(i, j).finite().unwrap()).sum();
    let tight: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| b.get(i, j).is_finite() && cost[i][j] == u[i] + v[j])
                .collect()
        })
        .collect();
    let unique = !has_alternating_cycle(&tight, &perm);
    Ok(AssignmentResult {
        value: Weight::Finite(value),
        permutation: Some(perm),
        unique,
        ghost: false,
    })
}

/// The value is `-inf` or attained by at least two permutations.
pub fn is_tropically_singular(b: &TropMatrix) -> Result<bool> {
    let r = optimal_assignment(b)?;
    Ok(r.value.is_bottom() || !r.unique)
}

/// Optimal assignment of the magnitudes with the ghost flag filled in.
pub fn permanent_assignment(a: &ExtMatrix) -> Result<AssignmentResult> {
    let mut r = optimal_assignment(&a.project())?;
    if let (true, Some(perm)) = (r.unique, &r.permutation) {
        r.ghost = perm.iter().enumerate().any(|(i, &j)| a.get(i, j).is_ghost());
    }
    Ok(r)
}

/// The permanent over the extended semiring.
pub fn tropical_permanent(a: &ExtMatrix) -> Result<ExtNumber> {
    let r = permanent_assignment(a)?;
    Ok(match r.value {
        Weight::Bottom => ExtNumber::ZERO,
        Weight::Finite(v) if r.unique && !r.ghost => ExtNumber::real(v),
        Weight::Finite(v) => ExtNumber::ghost_of(v),
    })
}

/// The permanent as the extended sum over all `n!` permutations.
pub fn permanent_by_enumeration(a: &ExtMatrix) -> Result<ExtNumber> {
    check_square(a.rows(), a.cols())?;
    let n = a.rows();
    Ok((0..n)
        .permutations(n)
        .map(|perm| {
            perm.iter()
                .enumerate()
                .fold(ExtNumber::ONE, |acc, (i, &j)| ext_mul(acc, a.get(i, j)))
        })
        .fold(ExtNumber::ZERO, ext_add))
}

/// Permanent-invertible: real and non-zero.
pub fn is_tropically_nonsingular(a: &ExtMatrix) -> Result<bool> {
    Ok(tropical_permanent(a)?.is_invertible())
}

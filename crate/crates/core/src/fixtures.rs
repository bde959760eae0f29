//! Small instances shared by the unit tests.

use crate::linalg::{ExtMatrix, MinMaxOperator, TropMatrix};

pub(crate) fn first_game() -> MinMaxOperator {
    MinMaxOperator::new(
        TropMatrix::parse_rows("2 -inf; 8 -inf; -inf 0").unwrap(),
        TropMatrix::parse_rows("1 -inf; -3 -12; -9 5").unwrap(),
    )
    .unwrap()
}

/// Three half-spaces with parameter `a = num / 2`, all weights doubled.
pub(crate) fn geometric_doubled(num: i128) -> MinMaxOperator {
    let a = num;
    let rows = |m: [[Option<i128>; 3]; 3]| {
        TropMatrix::from_rows(
            m.iter()
                .map(|r| r.iter().map(|e| e.map_or(crate::Weight::Bottom, crate::Weight::Finite)).collect())
                .collect(),
        )
        .unwrap()
    };
    let (n, f) = (None, Some);
    MinMaxOperator::new(
        rows([[f(0), n, n], [n, f(-4), n], [n, f(-4), f(-a)]]),
        rows([[n, f(a - 4), f(a - 2)], [f(a), n, f(a - 2)], [f(4), n, n]]),
    )
    .unwrap()
}

/// The geometric example at `a = 1`, unscaled.
pub(crate) fn geometric_one() -> MinMaxOperator {
    MinMaxOperator::new(
        TropMatrix::parse_rows("0 -inf -inf; -inf -2 -inf; -inf -2 -1").unwrap(),
        TropMatrix::parse_rows("-inf -1 0; 1 -inf 0; 2 -inf -inf").unwrap(),
    )
    .unwrap()
}

pub(crate) fn points_abcd() -> ExtMatrix {
    ExtMatrix::parse_rows("0 2 0; 0 3 2; 0 1 1; 1 3 0").unwrap()
}

pub(crate) fn points_abce() -> ExtMatrix {
    ExtMatrix::parse_rows("0 2 0; 0 3 2; 0 1 1; 1 1 0").unwrap()
}

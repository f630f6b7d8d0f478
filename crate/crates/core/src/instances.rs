//! Worked instances with known exact solutions, used by tests and examples.

use crate::bicriteria::Problem;
use crate::semiring::{parse_numeral, Matrix, Scalar, Vector};

fn matrix(rows: &[&[&str]]) -> Matrix {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| parse_numeral(s).expect("valid numeral")).collect())
            .collect(),
    )
    .expect("rectangular")
}

fn vector(values: &[&str]) -> Vector {
    values.iter().map(|s| parse_numeral(s).expect("valid numeral")).collect()
}

/// Four alternatives compared under two criteria, with the first
/// alternative pinned to one and the second capped at `1/6`.
///
/// The front is the single point `(2, 3)` attained by `(1, 1/6, 1/2, 1/4)`.
pub fn four_alternatives() -> Problem {
    let a = matrix(&[
        &["1", "3", "4", "2"],
        &["1/3", "1", "1/2", "1/3"],
        &["1/4", "2", "1", "4"],
        &["1/2", "3", "1/4", "1"],
    ]);
    let b = matrix(&[
        &["1", "2", "4", "2"],
        &["1/2", "1", "1/3", "1/2"],
        &["1/4", "3", "1", "4"],
        &["1/2", "2", "1/4", "1"],
    ]);
    let g = vector(&["1", "0", "0", "0"]);
    let h = vector(&["1", "1/6", "1", "1"]);
    Problem::new(a, b, g, h).expect("valid instance")
}

/// Two alternatives with a segment front `αβ = 6` for `4/3 ≤ α ≤ 3`.
pub fn two_alternatives() -> Problem {
    let a = matrix(&[&["1", "2"], &["1/2", "1"]]);
    let b = matrix(&[&["1", "1/3"], &["3", "1"]]);
    let g = vector(&["1/3", "1/3"]);
    let h = vector(&["1/2", "1/2"]);
    Problem::new(a, b, g, h).expect("valid instance")
}

/// Bounds `g = 0`, `h = ⊤` of length `n`.
pub fn no_bounds(n: usize) -> (Vector, Vector) {
    (Vector::zeros(n), Vector::filled(n, Scalar::TOP))
}

use thiserror::Error;

use crate::semiring::Scalar;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A single reciprocity or positivity violation in a comparison matrix,
/// located by zero-based row and column.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub row: usize,
    pub col: usize,
    pub message: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}): {}", self.row + 1, self.col + 1, self.message)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// `Tr(A) > 1`: the Kleene star does not exist and `Ax ⊕ c ≤ x` has no
    /// regular solution.
    #[error("no regular solution: trace function {trace_fn} exceeds one")]
    StarDiverges { trace_fn: Scalar },

    /// `d⁻A*c > 1`: the double inequality `Ax ⊕ c ≤ x ≤ d` is empty.
    #[error("no regular solution: upper bound residual {residual} exceeds one")]
    EmptySolutionSet { residual: Scalar },

    #[error("degenerate front: {0}")]
    DegenerateFront(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid comparison matrix: {}", format_violations(.0))]
    Validation(Vec<Violation>),

    #[error("resource limit: {0}")]
    Resource(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

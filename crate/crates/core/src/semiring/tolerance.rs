use super::{Matrix, Scalar, Vector};

/// Absolute tolerance for order comparisons in the log domain.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance(pub f64);

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(1e-9)
    }
}

impl Tolerance {
    /// `a ≤ b` up to the tolerance.
    pub fn le(self, a: Scalar, b: Scalar) -> bool {
        a.log() <= b.log() + self.0
    }

    /// `a > b` beyond the tolerance; the negation of [`Tolerance::le`].
    pub fn gt(self, a: Scalar, b: Scalar) -> bool {
        !self.le(a, b)
    }

    pub fn eq(self, a: Scalar, b: Scalar) -> bool {
        a == b || (a.log() - b.log()).abs() <= self.0
    }

    pub fn vec_le(self, x: &Vector, y: &Vector) -> bool {
        x.len() == y.len() && x.iter().zip(y.iter()).all(|(&a, &b)| self.le(a, b))
    }

    pub fn vec_eq(self, x: &Vector, y: &Vector) -> bool {
        x.len() == y.len() && x.iter().zip(y.iter()).all(|(&a, &b)| self.eq(a, b))
    }

    pub fn mat_eq(self, a: &Matrix, b: &Matrix) -> bool {
        a.shape() == b.shape() && a.entries().iter().zip(b.entries()).all(|(&x, &y)| self.eq(x, y))
    }
}

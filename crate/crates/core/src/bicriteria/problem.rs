use crate::error::{Error, Result};
use crate::semiring::{Matrix, Scalar, Tolerance, Vector};

/// The box-constrained bi-objective program
///
/// ```text
/// minimize (x⁻Ax, x⁻Bx)  subject to  g ≤ x ≤ h
/// ```
///
/// over regular vectors `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct Problem {
    a: Matrix,
    b: Matrix,
    g: Vector,
    h: Vector,
}

impl Problem {
    /// Validates the instance: `A` and `B` are nonzero square matrices of the
    /// same order without unbounded entries, `h` is regular, and `g ≤ h`.
    /// `g` may contain zeros and `h` may contain [`Scalar::TOP`].
    pub fn new(a: Matrix, b: Matrix, g: Vector, h: Vector) -> Result<Self> {
        let n = a.rows();
        if !a.is_square() || b.shape() != (n, n) {
            return Err(Error::Dimension(format!(
                "comparison matrices must be square of equal order, got {}x{} and {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
        if n == 0 {
            return Err(Error::Precondition("empty problem".into()));
        }
        if g.len() != n || h.len() != n {
            return Err(Error::Dimension(format!(
                "bounds of length {} and {} for {n} alternatives",
                g.len(),
                h.len()
            )));
        }
        for (name, m) in [("A", &a), ("B", &b)] {
            if m.is_zero() {
                return Err(Error::Precondition(format!("matrix {name} is zero")));
            }
            if m.entries().iter().any(|s| s.is_top()) {
                return Err(Error::Precondition(format!("matrix {name} has an unbounded entry")));
            }
        }
        if !h.is_regular() {
            return Err(Error::Precondition("upper bound h has a zero component".into()));
        }
        if g.iter().any(|s| s.is_top()) {
            return Err(Error::Precondition("lower bound g has an unbounded component".into()));
        }
        if let Some(j) = (0..n).find(|&j| Tolerance::default().gt(g[j], h[j])) {
            return Err(Error::Precondition(format!(
                "lower bound exceeds upper bound at component {}: {} > {}",
                j + 1,
                g[j],
                h[j]
            )));
        }
        Ok(Problem { a, b, g, h })
    }

    /// Problem without box constraints: `g = 0`, `h = ⊤`.
    pub fn unconstrained(a: Matrix, b: Matrix) -> Result<Self> {
        let n = a.rows();
        Problem::new(a, b, Vector::zeros(n), Vector::filled(n, Scalar::TOP))
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn g(&self) -> &Vector {
        &self.g
    }

    pub fn h(&self) -> &Vector {
        &self.h
    }

    /// Objective pair `(x⁻Ax, x⁻Bx)` at a regular vector `x`.
    pub fn objectives(&self, x: &Vector) -> Result<(Scalar, Scalar)> {
        if x.len() != self.n() {
            return Err(Error::Dimension(format!(
                "vector of length {} for {} alternatives",
                x.len(),
                self.n()
            )));
        }
        if !x.is_finite() {
            return Err(Error::Domain(format!("{x} is not a regular finite vector")));
        }
        let conj = x.conjugate()?;
        Ok((conj.otimes(&self.a)?.dot(x)?, conj.otimes(&self.b)?.dot(x)?))
    }

    /// `g ≤ x ≤ h` within the tolerance.
    pub fn is_within_bounds(&self, x: &Vector, tol: Tolerance) -> bool {
        tol.vec_le(&self.g, x) && tol.vec_le(x, &self.h)
    }
}

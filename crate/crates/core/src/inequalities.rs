//! Solvers for the vector inequalities `Ax ≤ d`, `Ax ⊕ c ≤ x` and the
//! double inequality `Ax ⊕ c ≤ x ≤ d`.

use crate::error::{Error, Result};
use crate::semiring::{Matrix, Scalar, Tolerance, Vector};

/// Solution family `{ x = S u : lower ≤ u ≤ upper }` generated by a Kleene
/// star matrix `S`. Components of `upper` equal to [`Scalar::TOP`] are
/// unbounded.
#[derive(Clone, Debug, PartialEq)]
pub struct ParametricBox {
    star: Matrix,
    lower: Vector,
    upper: Vector,
}

impl ParametricBox {
    pub fn new(star: Matrix, lower: Vector, upper: Vector, tol: Tolerance) -> Result<Self> {
        let n = star.rows();
        if !star.is_square() || lower.len() != n || upper.len() != n {
            return Err(Error::Dimension(format!(
                "generator {}x{} with bounds of length {} and {}",
                star.rows(),
                star.cols(),
                lower.len(),
                upper.len()
            )));
        }
        if !tol.vec_le(&lower, &upper) {
            return Err(Error::Precondition(format!(
                "empty parameter box: lower {lower} exceeds upper {upper}"
            )));
        }
        Ok(ParametricBox { star, lower, upper })
    }

    pub fn star(&self) -> &Matrix {
        &self.star
    }

    pub fn lower(&self) -> &Vector {
        &self.lower
    }

    pub fn upper(&self) -> &Vector {
        &self.upper
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    /// True when some parameter has no finite upper limit.
    pub fn is_unbounded(&self) -> bool {
        self.upper.iter().any(|u| u.is_top())
    }

    /// The member `S u`. Fails when `u` lies outside the parameter box.
    pub fn member(&self, u: &Vector, tol: Tolerance) -> Result<Vector> {
        if u.len() != self.dim() {
            return Err(Error::Dimension(format!(
                "parameter of length {} for a family of dimension {}",
                u.len(),
                self.dim()
            )));
        }
        if !tol.vec_le(&self.lower, u) || !tol.vec_le(u, &self.upper) {
            return Err(Error::Precondition(format!("parameter {u} outside the box")));
        }
        if u.iter().any(|v| v.is_top()) {
            return Err(Error::Domain("unbounded parameter".into()));
        }
        self.star.otimes_vec(u)
    }

    /// Whether some `u` in the box generates exactly `x`.
    ///
    /// The largest `u` with `S u ≤ x` is the residual `u* = (x⁻S)⁻`. If any
    /// admissible `u` generates `x`, then `u ≤ min(u*, upper)` and by
    /// monotonicity `S·min(u*, upper) = x`; so it suffices to test that one
    /// candidate against the lower bound and against `x`.
    pub fn contains(&self, x: &Vector, tol: Tolerance) -> Result<bool> {
        if x.len() != self.dim() {
            return Err(Error::Dimension(format!(
                "vector of length {} for a family of dimension {}",
                x.len(),
                self.dim()
            )));
        }
        let candidate = residuate(&self.star, x).meet(&self.upper)?;
        if !tol.vec_le(&self.lower, &candidate) || candidate.iter().any(|c| c.is_top()) {
            return Ok(false);
        }
        Ok(tol.vec_eq(&self.star.otimes_vec(&candidate)?, x))
    }
}

/// Largest `x` with `Ax ≤ d`: `x_j = min_i d_i / a_ij` over nonzero `a_ij`.
/// Equals `(d⁻A)⁻` for regular finite `d`, and also handles top and zero
/// components of `d`.
fn residuate(a: &Matrix, d: &Vector) -> Vector {
    (0..a.cols())
        .map(|j| {
            (0..a.rows())
                .filter(|&i| !a.get(i, j).is_zero())
                .map(|i| Scalar::from_log(d[i].log() - a.get(i, j).log()))
                .fold(Scalar::TOP, Scalar::min)
        })
        .collect()
}

/// Maximal solution of `Ax ≤ d`: every solution `y` satisfies
/// `y ≤ (d⁻A)⁻`, and the bound itself is a solution.
pub fn solve_upper(a: &Matrix, d: &Vector) -> Result<Vector> {
    if a.rows() != d.len() {
        return Err(Error::Dimension(format!(
            "{}x{} matrix with right-hand side of length {}",
            a.rows(),
            a.cols(),
            d.len()
        )));
    }
    if !a.is_column_regular() {
        return Err(Error::Precondition("matrix has a zero column".into()));
    }
    if a.entries().iter().any(|s| s.is_top()) {
        return Err(Error::Precondition("matrix has an unbounded entry".into()));
    }
    if !d.is_regular() {
        return Err(Error::Precondition("right-hand side has a zero component".into()));
    }
    Ok(residuate(a, d))
}

/// All regular solutions of `Ax ⊕ c ≤ x`, as `x = A* u` with `u ≥ c`.
pub fn solve_recursive(a: &Matrix, c: &Vector, tol: Tolerance) -> Result<ParametricBox> {
    if a.rows() != c.len() {
        return Err(Error::Dimension(format!(
            "{}x{} matrix with vector of length {}",
            a.rows(),
            a.cols(),
            c.len()
        )));
    }
    let star = a.kleene_star(tol)?;
    let upper = Vector::filled(c.len(), Scalar::TOP);
    ParametricBox::new(star, c.clone(), upper, tol)
}

/// All regular solutions of `Ax ⊕ c ≤ x ≤ d`, as `x = A* u` with
/// `c ≤ u ≤ (d⁻A*)⁻`.
///
/// Fails with [`Error::StarDiverges`] when `Tr(A) > 1` and with
/// [`Error::EmptySolutionSet`] when `d⁻A*c > 1`.
pub fn solve_double(a: &Matrix, c: &Vector, d: &Vector, tol: Tolerance) -> Result<ParametricBox> {
    if a.rows() != c.len() || a.rows() != d.len() {
        return Err(Error::Dimension(format!(
            "{}x{} matrix with vectors of length {} and {}",
            a.rows(),
            a.cols(),
            c.len(),
            d.len()
        )));
    }
    if !d.is_regular() {
        return Err(Error::Precondition("upper bound has a zero component".into()));
    }
    let star = a.kleene_star(tol)?;
    let residual = d.conjugate()?.otimes(&star)?.dot(c)?;
    if tol.gt(residual, Scalar::ONE) {
        return Err(Error::EmptySolutionSet { residual });
    }
    let upper = solve_upper(&star, d)?;
    ParametricBox::new(star, c.clone(), upper, tol)
}

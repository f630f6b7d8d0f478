//! Rating alternatives from two pairwise comparison matrices.
//!
//! A comparison matrix holds positive judgements `a_ij` ("alternative `i`
//! is `a_ij` times better than `j`") with `a_ji = 1/a_ij`. Ratings `x` are
//! sought so that the consistent matrix `(x_i / x_j)` approximates both
//! matrices in the log-Chebyshev sense. Reported ratings are normalized so
//! that their largest component equals one.

use std::num::NonZeroUsize;

use crate::bicriteria::{representatives, solutions_at, ParetoFront, Problem};
use crate::error::{Error, Result, Violation};
use crate::inequalities::ParametricBox;
use crate::semiring::{Matrix, Scalar, Tolerance, Vector};

pub const DEFAULT_RECIPROCITY_TOLERANCE: f64 = 1e-6;
pub const DEFAULT_SAMPLES: usize = 50;

/// A validated positive, symmetrically reciprocal matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonMatrix(Matrix);

impl ComparisonMatrix {
    /// Accepts a square matrix of positive finite entries with
    /// `|a_ij·a_ji − 1| ≤ tol`. All offending entries are reported.
    pub fn new(m: Matrix, tol: f64) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension(format!(
                "comparison matrix must be square, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        let n = m.rows();
        if n == 0 {
            return Err(Error::Dimension("empty comparison matrix".into()));
        }
        let mut violations = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let a = m.get(i, j);
                if a.is_zero() || !a.is_finite() {
                    violations.push(Violation {
                        row: i,
                        col: j,
                        message: format!("entry {a} is not a positive finite number"),
                    });
                }
            }
        }
        if violations.is_empty() {
            for i in 0..n {
                for j in i..n {
                    let product = m.get(i, j).value() * m.get(j, i).value();
                    if (product - 1.0).abs() > tol {
                        violations.push(Violation {
                            row: i,
                            col: j,
                            message: format!(
                                "a_ij * a_ji = {product} is not 1 (a_ij = {}, a_ji = {})",
                                m.get(i, j),
                                m.get(j, i)
                            ),
                        });
                    }
                }
            }
        }
        if violations.is_empty() {
            Ok(ComparisonMatrix(m))
        } else {
            Err(Error::Validation(violations))
        }
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R], tol: f64) -> Result<Self> {
        ComparisonMatrix::new(Matrix::from_values(rows)?, tol)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.rows()
    }

    /// Spectral radius in ordinary scale: one exactly for consistent
    /// matrices, larger otherwise.
    pub fn consistency_index(&self) -> f64 {
        self.0.spectral_radius().expect("square matrix").value()
    }
}

fn check_rating(m: &ComparisonMatrix, x: &Vector) -> Result<()> {
    if x.len() != m.n() {
        return Err(Error::Dimension(format!(
            "rating of length {} for {} alternatives",
            x.len(),
            m.n()
        )));
    }
    if !x.is_finite() {
        return Err(Error::Domain(format!("rating {x} must be positive and finite")));
    }
    Ok(())
}

/// `max_ij |log a_ij − log(x_i/x_j)|` in the given logarithm base.
pub fn log_cheb_error(m: &ComparisonMatrix, x: &Vector, log_base: f64) -> Result<f64> {
    check_rating(m, x)?;
    let n = m.n();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let d = m.0.get(i, j).log() - (x[i].log() - x[j].log());
            worst = worst.max(d.abs());
        }
    }
    Ok(worst / log_base.ln())
}

/// `max_ij |a_ij − x_i/x_j| / a_ij`.
pub fn max_relative_error(m: &ComparisonMatrix, x: &Vector) -> Result<f64> {
    check_rating(m, x)?;
    let n = m.n();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let a = m.0.get(i, j).value();
            let ratio = (x[i].log() - x[j].log()).exp();
            worst = worst.max((a - ratio).abs() / a);
        }
    }
    Ok(worst)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RateOptions {
    pub tolerance: Tolerance,
    /// Number of front points to solve at when the front is a segment.
    pub samples: NonZeroUsize,
    pub log_base: f64,
}

impl Default for RateOptions {
    fn default() -> Self {
        RateOptions {
            tolerance: Tolerance::default(),
            samples: NonZeroUsize::new(DEFAULT_SAMPLES).unwrap(),
            log_base: std::f64::consts::E,
        }
    }
}

/// Error measures of one rating vector against both matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct Diagnostics {
    pub log_cheb_error_a: f64,
    pub log_cheb_error_b: f64,
    pub max_relative_error_a: f64,
    pub max_relative_error_b: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Representative {
    /// Member of the solution family; satisfies the bounds.
    pub solution: Vector,
    /// `solution` rescaled so that its largest component is one.
    pub rating: Vector,
    pub diagnostics: Diagnostics,
}

/// The Pareto-optimal ratings at one front point.
#[derive(Clone, Debug, PartialEq)]
pub struct FrontSolution {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub family: ParametricBox,
    pub representatives: Vec<Representative>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RatingResult {
    pub front: ParetoFront,
    pub solutions: Vec<FrontSolution>,
}

/// Front and solution family at one front point.
pub fn solve_at(
    a: &ComparisonMatrix,
    b: &ComparisonMatrix,
    problem: &Problem,
    alpha: Scalar,
    beta: Scalar,
    opts: &RateOptions,
) -> Result<FrontSolution> {
    let family = solutions_at(problem, alpha, beta, opts.tolerance)?;
    let representatives = representatives(&family, opts.tolerance)?
        .into_iter()
        .map(|solution| {
            let rating = solution.normalized_max()?;
            let diagnostics = Diagnostics {
                log_cheb_error_a: log_cheb_error(a, &rating, opts.log_base)?,
                log_cheb_error_b: log_cheb_error(b, &rating, opts.log_base)?,
                max_relative_error_a: max_relative_error(a, &rating)?,
                max_relative_error_b: max_relative_error(b, &rating)?,
            };
            Ok(Representative { solution, rating, diagnostics })
        })
        .collect::<Result<_>>()?;
    Ok(FrontSolution { alpha, beta, family, representatives })
}

/// Builds the bounded problem, missing bounds defaulting to `g = 0` and
/// `h = ⊤`.
pub fn build_problem(
    a: &ComparisonMatrix,
    b: &ComparisonMatrix,
    g: Option<Vector>,
    h: Option<Vector>,
) -> Result<Problem> {
    let n = a.n();
    let g = g.unwrap_or_else(|| Vector::zeros(n));
    let h = h.unwrap_or_else(|| Vector::filled(n, Scalar::TOP));
    Problem::new(a.0.clone(), b.0.clone(), g, h)
}

/// Computes the front and the rating families at its sampled points: the
/// single point of a point front, or `opts.samples` points spread over a
/// segment (always including both ends).
pub fn rate(
    a: &ComparisonMatrix,
    b: &ComparisonMatrix,
    g: Option<Vector>,
    h: Option<Vector>,
    opts: &RateOptions,
) -> Result<RatingResult> {
    let problem = build_problem(a, b, g, h)?;
    let front = ParetoFront::compute(&problem, opts.tolerance)?;
    let solutions = front
        .sample(opts.samples)
        .into_iter()
        .map(|(alpha, beta)| solve_at(a, b, &problem, alpha, beta, opts))
        .collect::<Result<_>>()?;
    Ok(RatingResult { front, solutions })
}

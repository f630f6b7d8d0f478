//! Tropical (max-times) linear algebra for rating alternatives from two
//! pairwise comparison matrices under box constraints on the ratings.
//!
//! Given positive comparison matrices `A`, `B` and bounds `g ≤ x ≤ h`, the
//! crate computes the exact Pareto front of the bi-objective log-Chebyshev
//! approximation problem
//!
//! ```text
//! minimize (x⁻Ax, x⁻Bx)  subject to  g ≤ x ≤ h
//! ```
//!
//! and, at every front point, the full set of Pareto-optimal rating vectors
//! as a parametric family `x = S u`, `lower ≤ u ≤ upper`.
//!
//! ```
//! use tropical_rating::{instances, ParetoFront, Tolerance};
//!
//! let problem = instances::four_alternatives();
//! let front = ParetoFront::compute(&problem, Tolerance::default()).unwrap();
//! assert!(front.is_point());
//! ```
//!
//! Modules build on each other bottom-up: [`semiring`] provides scalars,
//! vectors and matrices; [`inequalities`] solves the vector inequalities;
//! [`bicriteria`] derives the front; [`ratings`] wraps everything for
//! comparison matrices; [`oracle`] holds brute-force reference solvers; and
//! [`cli`] implements the command-line tool.

pub mod bicriteria;
pub mod cli;
pub mod error;
pub mod inequalities;
pub mod instances;
pub mod oracle;
pub mod ratings;
pub mod semiring;

pub use bicriteria::{solutions_at, FrontShape, ParetoFront, Problem};
pub use error::{Error, Result, Violation};
pub use inequalities::ParametricBox;
pub use semiring::{Matrix, Scalar, Tolerance, Vector};

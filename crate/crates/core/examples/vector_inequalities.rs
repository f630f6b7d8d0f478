//! Solving max-times vector inequalities: the greatest solution of
//! `Ax ≤ d`, the parametric family of `Ax ⊕ c ≤ x`, and the box-bounded
//! family of `Ax ⊕ c ≤ x ≤ d`.
//!
//! Run with `cargo run --example vector_inequalities`.

use tropical_rating::inequalities::{solve_double, solve_recursive, solve_upper};
use tropical_rating::semiring::{Matrix, Scalar, Tolerance, Vector};
use tropical_rating::{Error, Result};

pub struct Summary {
    pub greatest: Vector,
    pub member: Vector,
    pub infeasible: Error,
}

pub fn run_example() -> Result<Summary> {
    let tol = Tolerance::default();
    let a = Matrix::from_values(&[[0.5, 2.0], [0.25, 0.5]])?;

    let d = Vector::from_values(&[4.0, 1.0])?;
    let greatest = solve_upper(&a, &d)?;
    println!("greatest x with Ax ≤ {d}: {greatest}");

    let c = Vector::from_values(&[1.0, 0.25])?;
    let family = solve_recursive(&a, &c, tol)?;
    println!("Ax ⊕ c ≤ x  ⇔  x = S u with u ≥ {}, S =\n{}", family.lower(), family.star());

    let bounded = solve_double(&a, &c, &Vector::from_values(&[8.0, 8.0])?, tol)?;
    println!("with x ≤ (8, 8): {} ≤ u ≤ {}", bounded.lower(), bounded.upper());
    let member = bounded.member(&Vector::from_values(&[2.0, 1.0])?, tol)?;
    println!("u = (2, 1) gives x = {member}");
    println!("contains {member}: {}", bounded.contains(&member, tol)?);

    let infeasible = solve_double(&a, &c, &Vector::filled(2, Scalar::new(0.5)?), tol).unwrap_err();
    println!("with x ≤ (0.5, 0.5): {infeasible}");

    Ok(Summary { greatest, member, infeasible })
}

fn main() -> Result<()> {
    run_example().map(|_| ())
}

//! Max-times arithmetic: scalars, matrix powers, traces, the Kleene star and
//! the spectral radius.
//!
//! Run with `cargo run --example semiring_basics`.

use tropical_rating::semiring::{Exponent, Matrix, Scalar, Tolerance};
use tropical_rating::Result;

pub struct Summary {
    pub spectral_radius: Scalar,
    pub star_first_row: Vec<Scalar>,
}

pub fn run_example() -> Result<Summary> {
    let two = Scalar::new(2.0)?;
    let three = Scalar::new(3.0)?;
    println!("2 ⊕ 3 = {}", two + three);
    println!("2 ⊗ 3 = {}", two * three);
    println!("3^(-1/2) = {}", three.pow(Exponent::new(-1, 2))?);

    let a = Matrix::from_values(&[
        [1.0, 3.0, 4.0, 2.0],
        [1.0 / 3.0, 1.0, 0.5, 1.0 / 3.0],
        [0.25, 2.0, 1.0, 4.0],
        [0.5, 3.0, 0.25, 1.0],
    ])?;
    println!("A =\n{a}");
    println!("A² =\n{}", a.pow(2)?);
    println!("tr A = {}, Tr A = {}", a.trace()?, a.trace_fn()?);

    let rho = a.spectral_radius()?;
    println!("spectral radius of A = {rho}");

    // Scaling by the inverse spectral radius makes the star exist.
    let scaled = a.scale(rho.inv()?);
    let star = scaled.kleene_star(Tolerance::default())?;
    println!("(A/ρ)* =\n{star}");
    match a.kleene_star(Tolerance::default()) {
        Ok(_) => println!("A* exists"),
        Err(e) => println!("A* does not exist: {e}"),
    }

    Ok(Summary { spectral_radius: rho, star_first_row: star.row(0).to_vec() })
}

fn main() -> Result<()> {
    run_example().map(|_| ())
}

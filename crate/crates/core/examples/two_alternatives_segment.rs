//! Two alternatives whose Pareto front is a segment `αβ = 6`. Every point of
//! the segment has its own optimal rating.
//!
//! Run with `cargo run --example two_alternatives_segment`.

use std::num::NonZeroUsize;

use tropical_rating::bicriteria::representatives;
use tropical_rating::{instances, solutions_at, ParetoFront, Result, Scalar, Tolerance, Vector};

pub struct Summary {
    pub front: ParetoFront,
    pub limiting: Vec<Vector>,
}

pub fn run_example() -> Result<Summary> {
    let tol = Tolerance::default();
    let problem = instances::two_alternatives();
    let front = ParetoFront::compute(&problem, tol)?;
    let (lo, hi) = front.alpha_range();
    println!("front is a segment: {lo} ≤ α ≤ {hi}");

    for (alpha, beta) in front.sample(NonZeroUsize::new(5).unwrap()) {
        let family = solutions_at(&problem, alpha, beta, tol)?;
        let x = &representatives(&family, tol)?[0];
        println!("α = {alpha:.4}, β = {beta:.4}, αβ = {:.4}, rating {x}", (alpha * beta).value());
    }

    let limiting = front
        .endpoints()
        .into_iter()
        .map(|(alpha, beta)| {
            let family = solutions_at(&problem, alpha, beta, tol)?;
            let x = representatives(&family, tol)?.remove(0);
            // Rescale so the first rating is one.
            Ok(x.scale(x[0].inv()?))
        })
        .collect::<Result<Vec<_>>>()?;
    println!("limiting ratings: {} and {}", limiting[0], limiting[1]);

    let below = front.beta_at(Scalar::new(1.0)?, tol);
    println!("β on the front at α = 1: {below:?}");
    Ok(Summary { front, limiting })
}

fn main() -> Result<()> {
    run_example().map(|_| ())
}

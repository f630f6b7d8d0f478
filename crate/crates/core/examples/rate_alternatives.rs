//! Decision-maker view: validate two comparison matrices, rate the
//! alternatives and report approximation errors for every Pareto-optimal
//! rating.
//!
//! Run with `cargo run --example rate_alternatives`.

use std::num::NonZeroUsize;

use tropical_rating::ratings::{rate, ComparisonMatrix, RateOptions, RatingResult};
use tropical_rating::{Error, Result};

pub fn run_example() -> Result<RatingResult> {
    // Judgements on three alternatives under two criteria.
    let a = ComparisonMatrix::from_rows(
        &[[1.0, 2.0, 4.0], [0.5, 1.0, 3.0], [0.25, 1.0 / 3.0, 1.0]],
        1e-6,
    )?;
    let b = ComparisonMatrix::from_rows(
        &[[1.0, 3.0, 2.0], [1.0 / 3.0, 1.0, 0.5], [0.5, 2.0, 1.0]],
        1e-6,
    )?;
    println!("consistency indices: A {:.4}, B {:.4}", a.consistency_index(), b.consistency_index());

    let inconsistent = ComparisonMatrix::from_rows(&[[1.0, 3.0], [0.5, 1.0]], 1e-6);
    if let Err(Error::Validation(v)) = &inconsistent {
        println!("rejected matrix: {}", v[0]);
    }

    let opts = RateOptions { samples: NonZeroUsize::new(4).unwrap(), log_base: 2.0, ..RateOptions::default() };
    let result = rate(&a, &b, None, None, &opts)?;
    let (lo, hi) = result.front.alpha_range();
    println!("front: {:?} with first objective in [{lo:.4}, {hi:.4}]", result.front.shape());
    for sol in &result.solutions {
        println!("α = {:.4}, β = {:.4}", sol.alpha.value(), sol.beta.value());
        for r in &sol.representatives {
            let d = &r.diagnostics;
            println!(
                "  rating {}  log2 errors ({:.3}, {:.3})  relative errors ({:.3}, {:.3})",
                r.rating, d.log_cheb_error_a, d.log_cheb_error_b, d.max_relative_error_a, d.max_relative_error_b
            );
        }
    }
    Ok(result)
}

fn main() -> Result<()> {
    run_example().map(|_| ())
}

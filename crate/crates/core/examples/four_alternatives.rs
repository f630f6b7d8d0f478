//! Four alternatives compared under two criteria with bounds on the
//! ratings. The Pareto front collapses to a single point and the optimal
//! rating is unique.
//!
//! Run with `cargo run --example four_alternatives`.

use tropical_rating::bicriteria::{representatives, FrontScalars, WordSums};
use tropical_rating::{instances, solutions_at, FrontShape, ParetoFront, Result, Tolerance, Vector};

pub struct Summary {
    pub shape: FrontShape,
    pub ratings: Vec<Vector>,
}

pub fn run_example() -> Result<Summary> {
    let tol = Tolerance::default();
    let problem = instances::four_alternatives();
    println!("A =\n{}B =\n{}g = {}\nh = {}", problem.a(), problem.b(), problem.g(), problem.h());

    let sc = FrontScalars::compute(&problem)?;
    println!("λ = {}, μ = {}, γ = {}, δ = {}", sc.lambda, sc.mu, sc.gamma, sc.delta);

    let words = WordSums::new(problem.a(), problem.b(), problem.n())?;
    for (k, m) in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)] {
        println!("tr F_{k}{m} = {}", words.get(k, m).trace()?);
    }

    let front = ParetoFront::compute(&problem, tol)?;
    println!("least first objective as a function of the second:");
    for (exp, coeff) in front.functions().alpha_bound.collapsed() {
        println!("  {coeff} · s^({exp})");
    }
    println!("front: {:?}", front.shape());

    let (alpha, beta) = front.endpoints()[0];
    let family = solutions_at(&problem, alpha, beta, tol)?;
    let ratings = representatives(&family, tol)?;
    for x in &ratings {
        let (oa, ob) = problem.objectives(x)?;
        println!("rating {x} attains ({oa}, {ob})");
    }
    Ok(Summary { shape: front.shape(), ratings })
}

fn main() -> Result<()> {
    run_example().map(|_| ())
}

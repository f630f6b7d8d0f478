//! Cross-checks the analytic front against brute-force grid search and the
//! word-sum table against explicit word enumeration.
//!
//! Run with `cargo run --release --example grid_verification`.

use tropical_rating::bicriteria::WordSums;
use tropical_rating::oracle::{coverage_gap, enum_fkm, grid_pareto, region_margin, GridSpec, DEFAULT_GRID_CAP};
use tropical_rating::{instances, ParetoFront, Result, Tolerance};

pub struct Summary {
    pub worst_gap: f64,
    pub worst_violation: f64,
}

pub fn run_example() -> Result<Summary> {
    let tol = Tolerance::default();
    let problem = instances::two_alternatives();
    let front = ParetoFront::compute(&problem, tol)?;
    let spec = GridSpec::for_problem(&problem, 400, 1.0)?;
    let grid = grid_pareto(&problem, &spec, DEFAULT_GRID_CAP)?;
    println!("{} grid points, {} non-dominated", spec.size().unwrap(), grid.len());

    let worst_violation = grid
        .iter()
        .map(|p| region_margin(&front, p.alpha, p.beta).map(|m| -m))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let worst_gap = front
        .sample(std::num::NonZeroUsize::new(50).unwrap())
        .into_iter()
        .map(|(a, b)| coverage_gap(&grid, a, b))
        .fold(0.0, f64::max);
    println!("largest grid point below the analytic region: {worst_violation:.2e} (log)");
    println!("largest distance from the front to the grid: {:.3}%", (worst_gap.exp() - 1.0) * 100.0);

    let p = instances::four_alternatives();
    let words = WordSums::new(p.a(), p.b(), 5)?;
    for (k, m) in [(1, 1), (2, 2), (3, 1), (1, 4)] {
        let same = tol.mat_eq(words.get(k, m), &enum_fkm(p.a(), p.b(), k, m)?);
        println!("F_{k}{m}: table and enumeration agree: {same}");
    }
    Ok(Summary { worst_gap, worst_violation })
}

fn main() -> Result<()> {
    run_example().map(|_| ())
}

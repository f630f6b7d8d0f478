//! Runs every cargo example and checks what it returns.

#[allow(dead_code)]
#[path = "../examples/semiring_basics.rs"]
mod semiring_basics;
#[allow(dead_code)]
#[path = "../examples/vector_inequalities.rs"]
mod vector_inequalities;
#[allow(dead_code)]
#[path = "../examples/four_alternatives.rs"]
mod four_alternatives;
#[allow(dead_code)]
#[path = "../examples/two_alternatives_segment.rs"]
mod two_alternatives_segment;
#[allow(dead_code)]
#[path = "../examples/rate_alternatives.rs"]
mod rate_alternatives;
#[allow(dead_code)]
#[path = "../examples/grid_verification.rs"]
mod grid_verification;
#[allow(dead_code)]
#[path = "../examples/problem_file.rs"]
mod problem_file;

use tropical_rating::{Error, FrontShape, Scalar, Tolerance, Vector};

const TOL: Tolerance = Tolerance(1e-9);

fn s(v: f64) -> Scalar {
    Scalar::new(v).unwrap()
}

#[test]
fn semiring_basics_runs() {
    let out = semiring_basics::run_example().unwrap();
    assert!(TOL.eq(out.spectral_radius, s(2.0)));
    let want = [1.0, 6.0, 2.0, 4.0];
    for (got, want) in out.star_first_row.iter().zip(want) {
        assert!(TOL.eq(*got, s(want)));
    }
}

#[test]
fn vector_inequalities_runs() {
    let out = vector_inequalities::run_example().unwrap();
    assert!(TOL.vec_eq(&out.greatest, &Vector::from_values(&[4.0, 2.0]).unwrap()));
    assert!(TOL.vec_eq(&out.member, &Vector::from_values(&[2.0, 1.0]).unwrap()));
    assert!(matches!(out.infeasible, Error::EmptySolutionSet { .. }));
}

#[test]
fn four_alternatives_runs() {
    let out = four_alternatives::run_example().unwrap();
    assert!(matches!(out.shape, FrontShape::Point { alpha, beta } if TOL.eq(alpha, s(2.0)) && TOL.eq(beta, s(3.0))));
    assert_eq!(out.ratings.len(), 1);
    assert!(TOL.vec_eq(&out.ratings[0], &Vector::from_values(&[1.0, 1.0 / 6.0, 0.5, 0.25]).unwrap()));
}

#[test]
fn two_alternatives_segment_runs() {
    let out = two_alternatives_segment::run_example().unwrap();
    assert!(!out.front.is_point());
    assert!(TOL.vec_eq(&out.limiting[0], &Vector::from_values(&[1.0, 2.0 / 3.0]).unwrap()));
    assert!(TOL.vec_eq(&out.limiting[1], &Vector::from_values(&[1.0, 1.5]).unwrap()));
}

#[test]
fn rate_alternatives_runs() {
    let out = rate_alternatives::run_example().unwrap();
    assert_eq!(out.solutions.len(), 4);
    for sol in &out.solutions {
        assert!(!sol.representatives.is_empty());
        for r in &sol.representatives {
            assert!((r.diagnostics.log_cheb_error_a - sol.alpha.log() / 2f64.ln()).abs() < 1e-9);
        }
    }
}

#[test]
fn grid_verification_runs() {
    let out = grid_verification::run_example().unwrap();
    assert!(out.worst_violation <= 1e-9);
    assert!(out.worst_gap <= 1.02f64.ln());
}

#[test]
fn problem_file_runs() {
    let path = std::path::PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/four_alternatives.json"));
    let out = problem_file::run_example(path).unwrap();
    assert_eq!(out.kind, "point");
    let rating = &out.solutions[0].representatives[0].rating;
    let fractions: Vec<_> = rating.iter().map(|n| n.fraction.clone().unwrap()).collect();
    assert_eq!(fractions, ["1", "1/6", "1/2", "1/4"]);
}

use std::num::NonZeroUsize;

use proptest::prelude::*;
use tropical_rating::bicriteria::{representatives, FrontShape, Problem};
use tropical_rating::oracle::{coverage_gap, grid_pareto, region_margin, GridSpec, DEFAULT_GRID_CAP};
use tropical_rating::{solutions_at, Matrix, ParetoFront, Scalar, Tolerance, Vector};

const TOL: Tolerance = Tolerance(1e-9);

/// Entries `2^e` for integer `e` in `[-3, 3]`, i.e. rationals in `[1/8, 8]`.
fn square(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i32..=3, n * n).prop_map(move |es| {
        let data = es.into_iter().map(|e| Scalar::from_log(e as f64 * 2f64.ln())).collect();
        Matrix::new(n, n, data).unwrap()
    })
}

fn bounded_problem(n: usize) -> impl Strategy<Value = Problem> {
    (
        square(n),
        square(n),
        prop::collection::vec((-1.5f64..0.0, 0.0f64..1.5), n),
    )
        .prop_map(|(a, b, box_)| {
            let g: Vector = box_.iter().map(|(lo, _)| Scalar::from_log(*lo)).collect();
            let h: Vector = box_.iter().map(|(lo, w)| Scalar::from_log(lo + w)).collect();
            Problem::new(a, b, g, h).unwrap()
        })
}

fn any_problem() -> impl Strategy<Value = Problem> {
    (2usize..=4).prop_flat_map(|n| {
        (square(n), square(n), prop::collection::vec((any::<bool>(), -1.0f64..0.0, any::<bool>(), 0.0f64..2.0), n))
            .prop_map(|(a, b, parts)| {
                let g: Vector = parts
                    .iter()
                    .map(|(zero, lo, _, _)| if *zero { Scalar::ZERO } else { Scalar::from_log(*lo) })
                    .collect();
                let h: Vector = parts
                    .iter()
                    .map(|(_, _, top, w)| if *top { Scalar::TOP } else { Scalar::from_log(*w) })
                    .collect();
                Problem::new(a, b, g, h).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn front_points_are_attained(p in any_problem()) {
        let front = ParetoFront::compute(&p, TOL).unwrap();
        for (alpha, beta) in front.sample(NonZeroUsize::new(6).unwrap()) {
            let family = solutions_at(&p, alpha, beta, TOL).unwrap();
            let reps = representatives(&family, TOL).unwrap();
            prop_assert!(!reps.is_empty());
            for x in reps {
                prop_assert!(family.contains(&x, TOL).unwrap());
                let (oa, ob) = p.objectives(&x).unwrap();
                prop_assert!(Tolerance(1e-8).eq(oa, alpha), "x⁻Ax = {} at α = {}", oa, alpha);
                prop_assert!(Tolerance(1e-8).eq(ob, beta), "x⁻Bx = {} at β = {}", ob, beta);
                prop_assert!(p.is_within_bounds(&x, TOL));
            }
        }
    }

    #[test]
    fn front_is_monotone(p in any_problem()) {
        let front = ParetoFront::compute(&p, TOL).unwrap();
        let pts = front.sample(NonZeroUsize::new(40).unwrap());
        for w in pts.windows(2) {
            prop_assert!(TOL.le(w[1].1, w[0].1));
        }
        // Nothing strictly below the front is feasible.
        if let FrontShape::Segment { .. } = front.shape() {
            let (alpha, beta) = pts[pts.len() / 2];
            let lower = Scalar::from_log(beta.log() - 1e-3);
            prop_assert!(solutions_at(&p, alpha, lower, TOL).is_err());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn grid_oracle_agrees(p in (2usize..=3).prop_flat_map(bounded_problem)) {
        let resolution = if p.n() == 2 { 120 } else { 36 };
        let spec = GridSpec::for_problem(&p, resolution, 1.0).unwrap();
        let grid = grid_pareto(&p, &spec, DEFAULT_GRID_CAP).unwrap();
        let front = ParetoFront::compute(&p, TOL).unwrap();
        // One grid step moves each objective by at most one step in log scale.
        let step = spec.ranges.iter().map(|(lo, hi)| (hi - lo) / (resolution - 1) as f64).fold(0.0, f64::max);
        for pt in &grid {
            prop_assert!(region_margin(&front, pt.alpha, pt.beta).unwrap() >= -1e-9);
        }
        for (alpha, beta) in front.sample(NonZeroUsize::new(10).unwrap()) {
            let gap = coverage_gap(&grid, alpha, beta);
            prop_assert!(gap <= step + 1e-9, "gap {} > step {}", gap, step);
        }
    }
}

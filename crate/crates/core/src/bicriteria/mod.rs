//! Exact Pareto-optimal solution of the box-constrained bi-objective
//! program `min (x⁻Ax, x⁻Bx)` subject to `g ≤ x ≤ h`.
//!
//! The objectives are replaced by bounds `α`, `β`; the constraints then
//! collapse into the double inequality
//!
//! ```text
//! (α⁻¹A ⊕ β⁻¹B) x ⊕ g ≤ x ≤ h
//! ```
//!
//! whose solvability conditions carve out the feasible `(α, β)` region:
//! `α ≥ λ ⊕ γ` and `β ≥ (μ ⊕ δ) ⊕ G(α)`. The front is the lower-left
//! boundary of that region ([`ParetoFront`]) and the optimal vectors at each
//! front point form the parametric family returned by [`solutions_at`].

mod front;
mod problem;
mod words;

pub use front::{
    FrontFunction, FrontFunctions, FrontScalars, FrontShape, ParetoFront, Term, TermSource,
};
pub use problem::Problem;
pub use words::{compute_fkm, WordSums};

use crate::error::Result;
use crate::inequalities::{solve_double, ParametricBox};
use crate::semiring::{Matrix, Scalar, Tolerance, Vector};

/// `α⁻¹A ⊕ β⁻¹B`.
pub fn combined_operator(problem: &Problem, alpha: Scalar, beta: Scalar) -> Result<Matrix> {
    problem.a().scale(alpha.inv()?).oplus(&problem.b().scale(beta.inv()?))
}

/// All vectors `x` with `x⁻Ax ≤ α`, `x⁻Bx ≤ β` and `g ≤ x ≤ h`, as the
/// family `x = (α⁻¹A ⊕ β⁻¹B)* u` with `g ≤ u ≤ (h⁻(α⁻¹A ⊕ β⁻¹B)*)⁻`.
///
/// At a point of the Pareto front these are exactly the Pareto-optimal
/// solutions. Below the front the family is empty and the solver's error
/// kind says which condition failed.
pub fn solutions_at(
    problem: &Problem,
    alpha: Scalar,
    beta: Scalar,
    tol: Tolerance,
) -> Result<ParametricBox> {
    let op = combined_operator(problem, alpha, beta)?;
    solve_double(&op, problem.g(), problem.h(), tol)
}

/// Representative members of a solution family, with collinear duplicates
/// removed.
///
/// Candidates are `S·lower`, `S·upper` and every column of the generator
/// `S`. A column is scaled to the least multiple lying above `S·lower` and
/// kept only if that multiple belongs to the family, so every returned
/// vector is a genuine member and satisfies the bounds. Non-regular
/// candidates are skipped.
pub fn representatives(family: &ParametricBox, tol: Tolerance) -> Result<Vec<Vector>> {
    let star = family.star();
    let n = family.dim();
    let base = star.otimes_vec(family.lower())?;

    let mut candidates = vec![base.clone()];
    if !family.is_unbounded() {
        candidates.push(star.otimes_vec(family.upper())?);
    }
    for j in 0..n {
        let column = star.column(j);
        if !column.is_regular() {
            continue;
        }
        let factor: Scalar = (0..n)
            .map(|i| Scalar::from_log(base[i].log() - column[i].log()))
            .sum();
        let x = if factor.is_zero() { column } else { column.scale(factor) };
        if x.is_finite() && family.contains(&x, tol)? {
            candidates.push(x);
        }
    }

    let mut out: Vec<Vector> = Vec::new();
    let mut shapes: Vec<Vector> = Vec::new();
    for x in candidates {
        if !x.is_finite() {
            continue;
        }
        let shape = x.normalized_max()?;
        if !shapes.iter().any(|y| tol.vec_eq(y, &shape)) {
            shapes.push(shape);
            out.push(x);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;
    use crate::semiring::Exponent;
    use crate::Error;
    use std::num::NonZeroUsize;

    const TOL: Tolerance = Tolerance(1e-9);

    fn s(v: f64) -> Scalar {
        Scalar::new(v).unwrap()
    }

    fn v(values: &[f64]) -> Vector {
        Vector::from_values(values).unwrap()
    }

    #[test]
    fn four_alternative_scalars() {
        let sc = FrontScalars::compute(&instances::four_alternatives()).unwrap();
        assert!(TOL.eq(sc.lambda, s(2.0)));
        assert!(TOL.eq(sc.mu, s(2.0)));
        assert!(TOL.eq(sc.gamma, s(2.0)));
        assert!(TOL.eq(sc.delta, s(3.0)));
    }

    #[test]
    fn two_alternative_scalars() {
        let sc = FrontScalars::compute(&instances::two_alternatives()).unwrap();
        assert!(TOL.eq(sc.lambda, Scalar::ONE));
        assert!(TOL.eq(sc.mu, Scalar::ONE));
        assert!(TOL.eq(sc.gamma, s(4.0 / 3.0)));
        assert!(TOL.eq(sc.delta, s(2.0)));
    }

    #[test]
    fn zero_lower_bound_gives_zero_boundary_scalars() {
        let p = instances::four_alternatives();
        let q = Problem::new(p.a().clone(), p.b().clone(), Vector::zeros(4), p.h().clone()).unwrap();
        let sc = FrontScalars::compute(&q).unwrap();
        assert!(sc.gamma.is_zero() && sc.delta.is_zero());
    }

    #[test]
    fn four_alternative_alpha_bound_simplifies() {
        let f = FrontFunctions::compute(&instances::four_alternatives()).unwrap();
        let expected = [
            (Exponent::new(-3, 1), 24.0),
            (Exponent::new(-2, 1), 8.0),
            (Exponent::new(-1, 1), 24f64.sqrt()),
            (Exponent::new(-1, 2), 8f64.sqrt()),
            (Exponent::new(-1, 3), 24f64.cbrt()),
        ];
        let got = f.alpha_bound.collapsed();
        assert_eq!(got.len(), expected.len(), "{got:?}");
        for ((ge, gc), (we, wc)) in got.iter().zip(expected) {
            assert_eq!(*ge, we);
            assert!(TOL.eq(*gc, s(wc)), "{ge}: {gc} vs {wc}");
        }
        assert!(TOL.eq(f.alpha_bound.eval(s(3.0)).unwrap(), s(2.0)));
        // Boundary coefficients h⁻F_km g.
        let boundary: Vec<_> = f
            .alpha_bound
            .terms()
            .iter()
            .filter(|t| t.source == TermSource::Boundary)
            .map(|t| ((t.k, t.m), t.coefficient.powi(t.m)))
            .collect();
        for ((k, m), want) in [((1, 1), 3.0), ((1, 2), 8.0), ((2, 1), 8.0)] {
            let got = boundary.iter().find(|(km, _)| *km == (k, m)).unwrap().1;
            assert!(TOL.eq(got, s(want)), "h⁻F_{k}{m}g = {got}");
        }
    }

    #[test]
    fn two_alternative_functions() {
        let p = instances::two_alternatives();
        let f = FrontFunctions::compute(&p).unwrap();
        assert_eq!(f.beta_bound.terms().len(), 1);
        let tr_ab = p.a().otimes(p.b()).unwrap().trace().unwrap();
        for x in [0.5, 1.0, 3.0, 10.0] {
            let want = tr_ab * s(x).inv().unwrap();
            assert!(TOL.eq(f.beta_bound.eval(s(x)).unwrap(), want));
            assert!(TOL.eq(f.alpha_bound.eval(s(x)).unwrap(), want));
        }
        assert!(TOL.eq(f.beta_bound.eval(s(3.0)).unwrap(), s(2.0)));
        assert!(f.beta_bound.eval(Scalar::ZERO).is_err());
    }

    #[test]
    fn zero_coupling_gives_empty_functions() {
        let a = Matrix::from_values(&[[1.0, 0.0], [0.0, 1.0]]).unwrap();
        let b = Matrix::from_values(&[[0.0, 1.0], [0.0, 0.0]]).unwrap();
        let p = Problem::new(a, b, Vector::zeros(2), Vector::filled(2, Scalar::TOP)).unwrap();
        let f = FrontFunctions::compute(&p).unwrap();
        assert!(f.beta_bound.is_empty() && f.alpha_bound.is_empty());
        assert!(f.beta_bound.eval(s(2.0)).unwrap().is_zero());
    }

    #[test]
    fn single_term_function() {
        let f = FrontFunction::new(vec![Term {
                coefficient: Scalar::ONE,
                exponent: Exponent::new(-1, 1),
                k: 1,
                m: 1,
                source: TermSource::Trace,
            }]);
        assert!(TOL.eq(f.eval(Scalar::ONE).unwrap(), Scalar::ONE));
        assert!(TOL.eq(f.eval(s(4.0)).unwrap(), s(0.25)));
    }

    #[test]
    fn four_alternative_front_is_a_point() {
        let front = ParetoFront::compute(&instances::four_alternatives(), TOL).unwrap();
        match front.shape() {
            FrontShape::Point { alpha, beta } => {
                assert!(TOL.eq(alpha, s(2.0)) && TOL.eq(beta, s(3.0)));
            }
            other => panic!("expected a point, got {other:?}"),
        }
    }

    #[test]
    fn two_alternative_front_is_a_segment() {
        let front = ParetoFront::compute(&instances::two_alternatives(), TOL).unwrap();
        let FrontShape::Segment { alpha_lo, alpha_hi } = front.shape() else {
            panic!("expected a segment");
        };
        assert!(TOL.eq(alpha_lo, s(4.0 / 3.0)));
        assert!(TOL.eq(alpha_hi, s(3.0)));
        for a in [4.0 / 3.0, 2.0, 2.5, 3.0] {
            assert!(TOL.eq(front.beta_at(s(a), TOL).unwrap(), s(6.0 / a)));
        }
        assert!(front.beta_at(s(3.5), TOL).is_none());
        assert!(matches!(front.point_at(s(10.0), TOL), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn one_alternative_front() {
        let a = Matrix::from_values(&[[2.5]]).unwrap();
        let b = Matrix::from_values(&[[0.5]]).unwrap();
        let p = Problem::new(a, b, v(&[0.5]), v(&[3.0])).unwrap();
        let front = ParetoFront::compute(&p, TOL).unwrap();
        assert_eq!(front.shape(), FrontShape::Point { alpha: s(2.5), beta: s(0.5) });
    }

    #[test]
    fn acyclic_matrix_has_no_attained_front() {
        let a = Matrix::from_values(&[[0.0, 2.0], [0.0, 0.0]]).unwrap();
        let p = Problem::unconstrained(a, Matrix::identity(2)).unwrap();
        assert!(matches!(ParetoFront::compute(&p, TOL), Err(Error::DegenerateFront(_))));
    }

    #[test]
    fn sampling() {
        let n5 = NonZeroUsize::new(5).unwrap();
        let point = ParetoFront::compute(&instances::four_alternatives(), TOL).unwrap();
        assert_eq!(point.sample(n5).len(), 1);

        let seg = ParetoFront::compute(&instances::two_alternatives(), TOL).unwrap();
        let got = seg.sample(NonZeroUsize::new(3).unwrap());
        for ((a, b), (wa, wb)) in got.iter().zip([(4.0 / 3.0, 4.5), (2.0, 3.0), (3.0, 2.0)]) {
            assert!(TOL.eq(*a, s(wa)) && TOL.eq(*b, s(wb)), "({a}, {b})");
        }
        let many = seg.sample(NonZeroUsize::new(50).unwrap());
        assert_eq!(many.len(), 50);
        assert!(many.windows(2).all(|w| w[0].0 < w[1].0 && TOL.le(w[1].1, w[0].1)));
    }

    #[test]
    fn four_alternative_solution_is_unique() {
        let p = instances::four_alternatives();
        let family = solutions_at(&p, s(2.0), s(3.0), TOL).unwrap();
        let reps = representatives(&family, TOL).unwrap();
        assert_eq!(reps.len(), 1);
        assert!(TOL.vec_eq(&reps[0], &v(&[1.0, 1.0 / 6.0, 0.5, 0.25])));
    }

    #[test]
    fn two_alternative_family_is_a_ray() {
        let p = instances::two_alternatives();
        for alpha in [4.0 / 3.0, 2.0, 3.0] {
            let family = solutions_at(&p, s(alpha), s(6.0 / alpha), TOL).unwrap();
            let star = family.star();
            assert!(TOL.eq(star.get(0, 1), s(2.0 / alpha)));
            assert!(TOL.eq(star.get(1, 0), s(alpha / 2.0)));
            for x in representatives(&family, TOL).unwrap() {
                assert!(family.contains(&x, TOL).unwrap());
                assert!(p.is_within_bounds(&x, TOL));
                let want = v(&[1.0, alpha / 2.0]).normalized_max().unwrap();
                assert!(TOL.vec_eq(&x.normalized_max().unwrap(), &want));
            }
        }
    }

    #[test]
    fn below_the_front_is_infeasible() {
        let p = instances::four_alternatives();
        assert!(matches!(
            solutions_at(&p, s(1.9), s(3.0), TOL),
            Err(Error::StarDiverges { .. } | Error::EmptySolutionSet { .. })
        ));
        assert!(solutions_at(&p, s(2.0), s(2.9), TOL).is_err());
    }

    #[test]
    fn unconstrained_family_spans_star_columns() {
        let w = [1.0, 2.0, 4.0];
        let rows: Vec<Vec<f64>> = w.iter().map(|wi| w.iter().map(|wj| wi / wj).collect()).collect();
        let a = Matrix::from_values(&rows).unwrap();
        let p = Problem::unconstrained(a.clone(), a.clone()).unwrap();
        let front = ParetoFront::compute(&p, TOL).unwrap();
        assert_eq!(front.shape(), FrontShape::Point { alpha: Scalar::ONE, beta: Scalar::ONE });
        let family = solutions_at(&p, s(10.0), s(10.0), TOL).unwrap();
        assert!(family.is_unbounded());
        let reps = representatives(&family, TOL).unwrap();
        assert!(reps.len() >= 2);
        let at_front = representatives(&solutions_at(&p, Scalar::ONE, Scalar::ONE, TOL).unwrap(), TOL).unwrap();
        assert_eq!(at_front.len(), 1);
        assert!(TOL.vec_eq(&at_front[0].normalized_max().unwrap(), &v(&[0.25, 0.5, 1.0])));
    }
}

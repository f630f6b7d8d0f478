//! Brute-force reference solvers for cross-checking the analytic results
//! on small instances.

use crate::bicriteria::{ParetoFront, Problem};
use crate::error::{Error, Result};
use crate::semiring::{Matrix, Scalar, Vector};

/// Largest `k + m` accepted by [`enum_fkm`].
pub const MAX_WORD_LENGTH: usize = 8;

/// Default cap on the number of grid points evaluated by [`grid_pareto`].
pub const DEFAULT_GRID_CAP: usize = 20_000_000;

/// Rectangular grid in log coordinates, one axis per component of `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec {
    /// `(low, high)` natural-log range per axis. A degenerate range gives a
    /// single grid value.
    pub ranges: Vec<(f64, f64)>,
    /// Points per non-degenerate axis.
    pub resolution: usize,
}

impl GridSpec {
    pub fn new(ranges: Vec<(f64, f64)>, resolution: usize) -> Result<Self> {
        if resolution < 2 {
            return Err(Error::Precondition(format!("grid resolution {resolution} is below 2")));
        }
        if let Some(j) = ranges.iter().position(|(lo, hi)| !(lo.is_finite() && hi.is_finite() && lo <= hi)) {
            return Err(Error::Precondition(format!(
                "grid axis {} has invalid range {:?}",
                j + 1,
                ranges[j]
            )));
        }
        Ok(GridSpec { ranges, resolution })
    }

    /// Grid over the box `g ≤ x ≤ h`. Missing bounds are replaced by a
    /// window of `span` (natural log units) next to the other bound. When the
    /// problem has no bounds at all, `x₁` is pinned to one because the
    /// objectives are scale invariant.
    pub fn for_problem(problem: &Problem, resolution: usize, span: f64) -> Result<Self> {
        let (g, h) = (problem.g(), problem.h());
        let unconstrained = g.is_zero() && h.iter().all(|s| s.is_top());
        let ranges = (0..problem.n())
            .map(|j| {
                if unconstrained {
                    return if j == 0 { (0.0, 0.0) } else { (-span, span) };
                }
                match (g[j].is_zero(), h[j].is_top()) {
                    (false, false) => (g[j].log(), h[j].log()),
                    (true, false) => (h[j].log() - span, h[j].log()),
                    (false, true) => (g[j].log(), g[j].log() + span),
                    (true, true) => (-span, span),
                }
            })
            .collect();
        GridSpec::new(ranges, resolution)
    }

    fn axis_len(&self, j: usize) -> usize {
        let (lo, hi) = self.ranges[j];
        if lo == hi {
            1
        } else {
            self.resolution
        }
    }

    fn axis_value(&self, j: usize, i: usize) -> f64 {
        let (lo, hi) = self.ranges[j];
        if lo == hi {
            lo
        } else {
            lo + (hi - lo) * i as f64 / (self.resolution - 1) as f64
        }
    }

    /// Number of grid points, or `None` on overflow.
    pub fn size(&self) -> Option<usize> {
        (0..self.ranges.len()).try_fold(1usize, |acc, j| acc.checked_mul(self.axis_len(j)))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridPoint {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub x: Vector,
}

/// Evaluates both objectives at every grid point and keeps the
/// non-dominated pairs, ordered by increasing `alpha`.
pub fn grid_pareto(problem: &Problem, spec: &GridSpec, cap: usize) -> Result<Vec<GridPoint>> {
    let n = problem.n();
    if spec.ranges.len() != n {
        return Err(Error::Dimension(format!(
            "grid with {} axes for {n} alternatives",
            spec.ranges.len()
        )));
    }
    let total = spec
        .size()
        .filter(|&t| t <= cap)
        .ok_or_else(|| Error::Resource(format!("grid exceeds the cap of {cap} points")))?;

    let lens: Vec<usize> = (0..n).map(|j| spec.axis_len(j)).collect();
    let point = |mut index: usize| -> Vector {
        let mut logs = vec![0.0; n];
        for j in (0..n).rev() {
            logs[j] = spec.axis_value(j, index % lens[j]);
            index /= lens[j];
        }
        logs.into_iter().map(Scalar::from_log).collect()
    };

    let mut values: Vec<(f64, f64, usize)> = Vec::with_capacity(total);
    for index in 0..total {
        let (alpha, beta) = problem.objectives(&point(index))?;
        values.push((alpha.log(), beta.log(), index));
    }
    values.sort_by(|p, q| p.0.total_cmp(&q.0).then(p.1.total_cmp(&q.1)));

    let mut out = Vec::new();
    let mut best_beta = f64::INFINITY;
    for (alpha, beta, index) in values {
        if beta < best_beta {
            best_beta = beta;
            out.push(GridPoint {
                alpha: Scalar::from_log(alpha),
                beta: Scalar::from_log(beta),
                x: point(index),
            });
        }
    }
    Ok(out)
}

/// `F_km` by summing every word with `k` factors `B` and `m` factors `A`.
pub fn enum_fkm(a: &Matrix, b: &Matrix, k: usize, m: usize) -> Result<Matrix> {
    if k + m > MAX_WORD_LENGTH {
        return Err(Error::Resource(format!(
            "word enumeration limited to length {MAX_WORD_LENGTH}, asked for {}",
            k + m
        )));
    }
    let n = a.rows();
    if !a.is_square() || b.shape() != (n, n) {
        return Err(Error::Dimension("word enumeration needs square matrices of equal order".into()));
    }
    let mut sum = Matrix::zeros(n, n);
    let len = k + m;
    for mask in 0u32..(1 << len) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let mut word = Matrix::identity(n);
        for pos in 0..len {
            let factor = if mask & (1 << pos) != 0 { b } else { a };
            word = word.otimes(factor)?;
        }
        sum = sum.oplus(&word)?;
    }
    Ok(sum)
}

/// Signed log distance from `(alpha, beta)` into the analytic feasible
/// objective region `α ≥ α_min`, `β ≥ β_min ⊕ G(α)`.
///
/// Non-negative values lie inside the region. A grid point with a clearly
/// negative margin contradicts the analytic front.
pub fn region_margin(front: &ParetoFront, alpha: Scalar, beta: Scalar) -> Result<f64> {
    let sc = front.scalars();
    let beta_floor = sc.beta_min() + front.functions().beta_bound.eval(alpha)?;
    Ok((alpha.log() - sc.alpha_min().log()).min(beta.log() - beta_floor.log()))
}

/// Smallest `max(log(a/α), log(b/β))` over the grid points `(a, b)`: how far
/// the grid has to be relaxed before some point reaches the front point
/// `(α, β)`.
pub fn coverage_gap(points: &[GridPoint], alpha: Scalar, beta: Scalar) -> f64 {
    points
        .iter()
        .map(|p| (p.alpha.log() - alpha.log()).max(p.beta.log() - beta.log()))
        .fold(f64::INFINITY, f64::min)
}

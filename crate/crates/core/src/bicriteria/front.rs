use std::collections::BTreeMap;
use std::num::NonZeroUsize;

use super::{Problem, WordSums};
use crate::error::{Error, Result};
use crate::semiring::{Exponent, Scalar, Tolerance};

/// Lower limits on the two objectives contributed by each matrix alone.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrontScalars {
    /// Spectral radius of `A`.
    pub lambda: Scalar,
    /// Spectral radius of `B`.
    pub mu: Scalar,
    /// `⊕_{k<n} (h⁻Aᵏg)^{1/k}`.
    pub gamma: Scalar,
    /// `⊕_{k<n} (h⁻Bᵏg)^{1/k}`.
    pub delta: Scalar,
}

impl FrontScalars {
    pub fn compute(problem: &Problem) -> Result<Self> {
        let n = problem.n();
        let h_conj = problem.h().conjugate()?;
        let boundary = |powers: &[crate::semiring::Matrix]| -> Result<Scalar> {
            powers
                .iter()
                .take(n - 1)
                .enumerate()
                .map(|(i, p)| Ok(h_conj.otimes(p)?.dot(problem.g())?.root(i + 1)))
                .sum()
        };
        let a_powers = problem.a().powers(n)?;
        let b_powers = problem.b().powers(n)?;
        Ok(FrontScalars {
            lambda: problem.a().spectral_radius()?,
            mu: problem.b().spectral_radius()?,
            gamma: boundary(&a_powers)?,
            delta: boundary(&b_powers)?,
        })
    }

    /// Smallest attainable first objective, `λ ⊕ γ`.
    pub fn alpha_min(&self) -> Scalar {
        self.lambda + self.gamma
    }

    /// Smallest attainable second objective, `μ ⊕ δ`.
    pub fn beta_min(&self) -> Scalar {
        self.mu + self.delta
    }
}

/// Where a front-function coefficient comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermSource {
    /// `tr F_km`
    Trace,
    /// `h⁻ F_km g`
    Boundary,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Term {
    pub coefficient: Scalar,
    pub exponent: Exponent,
    pub k: usize,
    pub m: usize,
    pub source: TermSource,
}

/// Tropical Puiseux polynomial `s ↦ ⊕ cᵢ s^{qᵢ}` with negative exponents.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct FrontFunction {
    terms: Vec<Term>,
}

impl FrontFunction {
    pub fn new(terms: Vec<Term>) -> Self {
        FrontFunction { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, s: Scalar) -> Result<Scalar> {
        if s.is_zero() {
            return Err(Error::Domain("front function evaluated at zero".into()));
        }
        self.terms.iter().map(|t| Ok(t.coefficient * s.pow(t.exponent)?)).sum()
    }

    /// One `(exponent, coefficient)` pair per distinct exponent, keeping the
    /// largest coefficient, ordered by increasing exponent.
    pub fn collapsed(&self) -> Vec<(Exponent, Scalar)> {
        let mut by_exp: BTreeMap<Exponent, Scalar> = BTreeMap::new();
        for t in &self.terms {
            let e = by_exp.entry(t.exponent).or_insert(Scalar::ZERO);
            *e = *e + t.coefficient;
        }
        by_exp.into_iter().collect()
    }
}

/// The two mutually inverse decreasing functions that bound the feasible
/// objective region.
#[derive(Clone, Debug, PartialEq)]
pub struct FrontFunctions {
    /// Least feasible second objective for a given first objective.
    pub beta_bound: FrontFunction,
    /// Least feasible first objective for a given second objective; the
    /// inverse of `beta_bound`.
    pub alpha_bound: FrontFunction,
}

impl FrontFunctions {
    pub fn compute(problem: &Problem) -> Result<Self> {
        let n = problem.n();
        let mut beta_bound = Vec::new();
        let mut alpha_bound = Vec::new();
        if n < 2 {
            return Ok(FrontFunctions {
                beta_bound: FrontFunction { terms: beta_bound },
                alpha_bound: FrontFunction { terms: alpha_bound },
            });
        }
        let words = WordSums::new(problem.a(), problem.b(), n)?;
        let h_conj = problem.h().conjugate()?;
        for k in 1..n {
            for m in 1..=n - k {
                let f = words.get(k, m);
                let mut sources = vec![(TermSource::Trace, f.trace()?)];
                if k + m < n {
                    sources.push((TermSource::Boundary, h_conj.otimes(f)?.dot(problem.g())?));
                }
                for (source, value) in sources {
                    if value.is_zero() {
                        continue;
                    }
                    let (ki, mi) = (k as i64, m as i64);
                    beta_bound.push(Term {
                        coefficient: value.root(k),
                        exponent: Exponent::new(-mi, ki),
                        k,
                        m,
                        source,
                    });
                    alpha_bound.push(Term {
                        coefficient: value.root(m),
                        exponent: Exponent::new(-ki, mi),
                        k,
                        m,
                        source,
                    });
                }
            }
        }
        Ok(FrontFunctions {
            beta_bound: FrontFunction { terms: beta_bound },
            alpha_bound: FrontFunction { terms: alpha_bound },
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FrontShape {
    Point { alpha: Scalar, beta: Scalar },
    /// `alpha_lo ≤ α ≤ alpha_hi` with `β = beta_bound(α)`.
    Segment { alpha_lo: Scalar, alpha_hi: Scalar },
}

/// Pareto front in the objective plane, either a single point or a
/// decreasing curve segment.
#[derive(Clone, Debug, PartialEq)]
pub struct ParetoFront {
    shape: FrontShape,
    scalars: FrontScalars,
    functions: FrontFunctions,
}

impl ParetoFront {
    pub fn compute(problem: &Problem, tol: Tolerance) -> Result<Self> {
        let scalars = FrontScalars::compute(problem)?;
        let functions = FrontFunctions::compute(problem)?;
        let (alpha_min, beta_min) = (scalars.alpha_min(), scalars.beta_min());
        if alpha_min.is_zero() || beta_min.is_zero() {
            return Err(Error::DegenerateFront(format!(
                "objective infimum is not attained (alpha_min = {alpha_min}, beta_min = {beta_min})"
            )));
        }
        let alpha_hi = functions.alpha_bound.eval(beta_min)?;
        let shape = if tol.le(alpha_hi, alpha_min) {
            FrontShape::Point { alpha: alpha_min, beta: beta_min }
        } else {
            FrontShape::Segment { alpha_lo: alpha_min, alpha_hi }
        };
        Ok(ParetoFront { shape, scalars, functions })
    }

    pub fn shape(&self) -> FrontShape {
        self.shape
    }

    pub fn scalars(&self) -> &FrontScalars {
        &self.scalars
    }

    pub fn functions(&self) -> &FrontFunctions {
        &self.functions
    }

    pub fn is_point(&self) -> bool {
        matches!(self.shape, FrontShape::Point { .. })
    }

    pub fn alpha_range(&self) -> (Scalar, Scalar) {
        match self.shape {
            FrontShape::Point { alpha, .. } => (alpha, alpha),
            FrontShape::Segment { alpha_lo, alpha_hi } => (alpha_lo, alpha_hi),
        }
    }

    /// Second objective on the front at `alpha`, or `None` outside the range.
    pub fn beta_at(&self, alpha: Scalar, tol: Tolerance) -> Option<Scalar> {
        let (lo, hi) = self.alpha_range();
        if !tol.le(lo, alpha) || !tol.le(alpha, hi) {
            return None;
        }
        match self.shape {
            FrontShape::Point { beta, .. } => Some(beta),
            FrontShape::Segment { .. } => {
                let g = self.functions.beta_bound.eval(alpha).ok()?;
                Some(g + self.scalars.beta_min())
            }
        }
    }

    /// Front point at `alpha`, or [`Error::OutOfRange`].
    pub fn point_at(&self, alpha: Scalar, tol: Tolerance) -> Result<(Scalar, Scalar)> {
        let (lo, hi) = self.alpha_range();
        self.beta_at(alpha, tol).map(|beta| (alpha, beta)).ok_or_else(|| {
            Error::OutOfRange(format!("alpha = {alpha} outside the front range [{lo}, {hi}]"))
        })
    }

    /// The limiting points: one for a point front, both ends of a segment.
    pub fn endpoints(&self) -> Vec<(Scalar, Scalar)> {
        match self.shape {
            FrontShape::Point { alpha, beta } => vec![(alpha, beta)],
            FrontShape::Segment { alpha_lo, alpha_hi } => [alpha_lo, alpha_hi]
                .into_iter()
                .map(|a| (a, self.beta_on_segment(a)))
                .collect(),
        }
    }

    fn beta_on_segment(&self, alpha: Scalar) -> Scalar {
        self.functions.beta_bound.eval(alpha).expect("positive alpha") + self.scalars.beta_min()
    }

    /// `count` points with `α` spaced log-uniformly over the segment, or the
    /// single point of a point front.
    pub fn sample(&self, count: NonZeroUsize) -> Vec<(Scalar, Scalar)> {
        match self.shape {
            FrontShape::Point { alpha, beta } => vec![(alpha, beta)],
            FrontShape::Segment { alpha_lo, alpha_hi } => {
                let count = count.get();
                if count == 1 {
                    return vec![(alpha_lo, self.beta_on_segment(alpha_lo))];
                }
                let (lo, hi) = (alpha_lo.log(), alpha_hi.log());
                (0..count)
                    .map(|i| {
                        let alpha = match i {
                            0 => alpha_lo,
                            i if i == count - 1 => alpha_hi,
                            i => Scalar::from_log(lo + (hi - lo) * i as f64 / (count - 1) as f64),
                        };
                        (alpha, self.beta_on_segment(alpha))
                    })
                    .collect()
            }
        }
    }
}

use std::fmt;
use std::ops::Index;

use super::{Matrix, Scalar};
use crate::error::{Error, Result};

/// Column vector over the max-times semifield.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Vector(Vec<Scalar>);

/// Row vector, produced by conjugation or by multiplying a row into a matrix.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Covector(Vec<Scalar>);

fn check_len(what: &str, a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::Dimension(format!("{what}: lengths {a} and {b}")));
    }
    Ok(())
}

impl Vector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        Vector(entries)
    }

    pub fn from_values(values: &[f64]) -> Result<Self> {
        values.iter().map(|&v| Scalar::new(v)).collect::<Result<Vec<_>>>().map(Vector)
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![Scalar::ZERO; n])
    }

    pub fn filled(n: usize, value: Scalar) -> Self {
        Vector(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Scalar> {
        self.0
    }

    /// Ordinary-scale values.
    pub fn values(&self) -> Vec<f64> {
        self.0.iter().map(|s| s.value()).collect()
    }

    /// No zero components.
    pub fn is_regular(&self) -> bool {
        self.0.iter().all(|s| !s.is_zero())
    }

    /// Every component is neither zero nor top.
    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|s| s.is_finite())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|s| s.is_zero())
    }

    /// Componentwise maximum.
    pub fn oplus(&self, other: &Vector) -> Result<Vector> {
        check_len("vector sum", self.len(), other.len())?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect()))
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Vector) -> Result<Vector> {
        check_len("vector meet", self.len(), other.len())?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect()))
    }

    pub fn scale(&self, c: Scalar) -> Vector {
        Vector(self.0.iter().map(|&a| c * a).collect())
    }

    /// Multiplicative conjugate transpose `x⁻`: nonzero components are
    /// inverted, zero components stay zero.
    pub fn conjugate(&self) -> Result<Covector> {
        if self.is_zero() {
            return Err(Error::Domain("conjugate of the zero vector".into()));
        }
        Ok(Covector(
            self.0
                .iter()
                .map(|&x| if x.is_zero() { Scalar::ZERO } else { x.inv().expect("nonzero") })
                .collect(),
        ))
    }

    /// Scales so that the largest component equals one.
    pub fn normalized_max(&self) -> Result<Vector> {
        let top: Scalar = self.0.iter().copied().sum();
        if top.is_zero() || top.is_top() {
            return Err(Error::Domain("cannot normalize a zero or unbounded vector".into()));
        }
        Ok(self.scale(top.inv()?))
    }
}

impl Covector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        Covector(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.0
    }

    /// Row-times-column product.
    pub fn dot(&self, x: &Vector) -> Result<Scalar> {
        check_len("inner product", self.len(), x.len())?;
        Ok(self.0.iter().zip(x.iter()).map(|(&a, &b)| a * b).sum())
    }

    /// Row-times-matrix product.
    pub fn otimes(&self, m: &Matrix) -> Result<Covector> {
        check_len("row times matrix", self.len(), m.rows())?;
        Ok(Covector(
            (0..m.cols())
                .map(|j| self.0.iter().enumerate().map(|(i, &a)| a * m.get(i, j)).sum())
                .collect(),
        ))
    }

    /// Conjugate back to a column vector.
    pub fn conjugate(&self) -> Result<Vector> {
        Vector(self.0.clone()).conjugate().map(|c| Vector(c.0))
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;

    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl Index<usize> for Covector {
    type Output = Scalar;

    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl FromIterator<Scalar> for Vector {
    fn from_iter<I: IntoIterator<Item = Scalar>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s:.6}")?;
        }
        f.write_str(")")
    }
}

use std::fmt;

use super::{Scalar, Tolerance, Vector};
use crate::error::{Error, Result};

/// Dense row-major matrix over the max-times semifield.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != c) {
            return Err(Error::Dimension(format!(
                "row {} has {} entries, expected {c}",
                i + 1,
                row.len()
            )));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix from ordinary nonnegative values.
    pub fn from_values<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|row| row.as_ref().iter().map(|&v| Scalar::new(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::ONE;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Ordinary-scale values, row by row.
    pub fn values(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|s| s.value()).collect()).collect()
    }

    pub fn map(&self, f: impl Fn(Scalar) -> Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&s| f(s)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    /// No column consists entirely of zeros.
    pub fn is_column_regular(&self) -> bool {
        (0..self.cols).all(|j| (0..self.rows).any(|i| !self.get(i, j).is_zero()))
    }

    fn require_square(&self, what: &str) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "{what} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(self.rows)
    }

    /// Entrywise maximum.
    pub fn oplus(&self, other: &Matrix) -> Result<Matrix> {
        if self.shape() != other.shape() {
            return Err(Error::Dimension(format!(
                "sum of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect(),
        })
    }

    /// Max-times matrix product.
    pub fn otimes(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = vec![Scalar::ZERO; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let out = &mut data[i * other.cols..(i + 1) * other.cols];
                for (o, &b) in out.iter_mut().zip(other.row(k)) {
                    *o = *o + a * b;
                }
            }
        }
        Ok(Matrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn otimes_vec(&self, x: &Vector) -> Result<Vector> {
        if self.cols != x.len() {
            return Err(Error::Dimension(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x.iter()).map(|(&a, &b)| a * b).sum())
            .collect())
    }

    pub fn scale(&self, c: Scalar) -> Matrix {
        self.map(|a| c * a)
    }

    /// `A^k` by repeated multiplication; `A^0 = I`.
    pub fn pow(&self, k: usize) -> Result<Matrix> {
        let n = self.require_square("matrix power")?;
        let mut acc = Matrix::identity(n);
        for _ in 0..k {
            acc = acc.otimes(self)?;
        }
        Ok(acc)
    }

    /// `[A, A², …, A^count]`.
    pub fn powers(&self, count: usize) -> Result<Vec<Matrix>> {
        self.require_square("matrix powers")?;
        let mut out: Vec<Matrix> = Vec::with_capacity(count);
        for k in 0..count {
            let next = match k {
                0 => self.clone(),
                _ => out[k - 1].otimes(self)?,
            };
            out.push(next);
        }
        Ok(out)
    }

    /// Tropical sum of the diagonal.
    pub fn trace(&self) -> Result<Scalar> {
        let n = self.require_square("trace")?;
        Ok((0..n).map(|i| self.get(i, i)).sum())
    }

    /// `Tr(A) = tr A ⊕ tr A² ⊕ … ⊕ tr Aⁿ`.
    pub fn trace_fn(&self) -> Result<Scalar> {
        let n = self.require_square("trace function")?;
        self.powers(n)?.iter().map(Matrix::trace).sum()
    }

    /// `tr A ⊕ tr^{1/2}(A²) ⊕ … ⊕ tr^{1/n}(Aⁿ)`: the maximum cycle mean in
    /// multiplicative form.
    pub fn spectral_radius(&self) -> Result<Scalar> {
        let n = self.require_square("spectral radius")?;
        let powers = self.powers(n)?;
        powers.iter().enumerate().map(|(k, p)| Ok(p.trace()?.root(k + 1))).sum()
    }

    /// Kleene star `I ⊕ A ⊕ … ⊕ A^{n-1}`, defined when `Tr(A) ≤ 1`.
    pub fn kleene_star(&self, tol: Tolerance) -> Result<Matrix> {
        let n = self.require_square("Kleene star")?;
        let powers = self.powers(n)?;
        let trace_fn: Scalar = powers.iter().map(Matrix::trace).sum::<Result<Scalar>>()?;
        if tol.gt(trace_fn, Scalar::ONE) {
            return Err(Error::StarDiverges { trace_fn });
        }
        let mut star = Matrix::identity(n);
        for p in powers.iter().take(n.saturating_sub(1)) {
            star = star.oplus(p)?;
        }
        Ok(star)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| format!("{s:>10.4}")).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

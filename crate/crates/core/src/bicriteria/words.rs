use crate::error::{Error, Result};
use crate::semiring::Matrix;

/// Tropical sums of matrix words over the alphabet `{A, B}`.
///
/// Cell `(k, m)` holds `F_km`, the sum of all products with exactly `k`
/// factors `B` and `m` factors `A`, in any order:
///
/// ```text
/// F_km = ⊕_{i₀+…+i_k = m} A^{i₀} B A^{i₁} ⋯ B A^{i_k}
/// ```
///
/// A word either starts with `A` or with `B`, which gives the recurrence
/// `W(k, m) = A·W(k, m−1) ⊕ B·W(k−1, m)` with `W(0, m) = A^m` and
/// `W(k, 0) = B^k`.
#[derive(Clone, Debug)]
pub struct WordSums {
    max_total: usize,
    /// `cells[k][m]` for `k + m ≤ max_total`.
    cells: Vec<Vec<Matrix>>,
}

impl WordSums {
    /// Fills every cell with `k + m ≤ max_total`.
    pub fn new(a: &Matrix, b: &Matrix, max_total: usize) -> Result<Self> {
        let n = a.rows();
        if !a.is_square() || b.shape() != (n, n) {
            return Err(Error::Dimension(format!(
                "word sums need square matrices of equal order, got {}x{} and {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
        let mut cells: Vec<Vec<Matrix>> = Vec::with_capacity(max_total + 1);
        for k in 0..=max_total {
            let mut row: Vec<Matrix> = Vec::with_capacity(max_total + 1 - k);
            for m in 0..=max_total - k {
                let cell = match (k, m) {
                    (0, 0) => Matrix::identity(n),
                    (0, _) => a.otimes(&row[m - 1])?,
                    (_, 0) => b.otimes(&cells[k - 1][0])?,
                    _ => a.otimes(&row[m - 1])?.oplus(&b.otimes(&cells[k - 1][m])?)?,
                };
                row.push(cell);
            }
            cells.push(row);
        }
        Ok(WordSums { max_total, cells })
    }

    pub fn max_total(&self) -> usize {
        self.max_total
    }

    /// `F_km`; panics when `k + m` exceeds the table.
    pub fn get(&self, k: usize, m: usize) -> &Matrix {
        assert!(k + m <= self.max_total, "F_{k},{m} outside table of total {}", self.max_total);
        &self.cells[k][m]
    }
}

/// `F_km` for a single index pair.
pub fn compute_fkm(a: &Matrix, b: &Matrix, k: usize, m: usize) -> Result<Matrix> {
    if k == 0 || m == 0 {
        return Err(Error::Precondition(format!("F_km needs k, m ≥ 1, got ({k}, {m})")));
    }
    Ok(WordSums::new(a, b, k + m)?.get(k, m).clone())
}

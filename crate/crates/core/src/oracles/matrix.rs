use crate::algebra::Coefficient;
use crate::error::{Error, Result};

/// Row-major matrix of coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Coefficient>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, entries: vec![Coefficient::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Coefficient>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidSystem("ragged matrix".into()));
        }
        Ok(DenseMatrix { rows: r, cols: c, entries: rows.concat() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Coefficient {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Coefficient) {
        self.entries[i * self.cols + j] = v;
    }

    /// The square submatrix on the given row and column positions.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// Fraction-free (Bareiss) elimination. Every division is exact in the
    /// polynomial ring over ℚ, so parametric entries are supported.
    pub fn determinant(&self) -> Result<Coefficient> {
        if self.rows != self.cols {
            return Err(Error::InvalidSystem(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Coefficient::one());
        }
        let mut a: Vec<Vec<Coefficient>> =
            (0..n).map(|i| self.entries[i * n..(i + 1) * n].to_vec()).collect();
        let mut negate = false;
        let mut prev = Coefficient::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                // Prefer a rational pivot; it keeps the parametric entries small.
                let pick = (k + 1..n)
                    .filter(|&r| !a[r][k].is_zero())
                    .min_by_key(|&r| a[r][k].total_degree());
                match pick {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(Coefficient::zero()),
                }
            }
            let (upper, lower) = a.split_at_mut(k + 1);
            let pivot_row = &upper[k];
            for row in lower.iter_mut() {
                for j in k + 1..n {
                    let num = &(&row[j] * &pivot_row[k]) - &(&row[k] * &pivot_row[j]);
                    row[j] = num.exact_div(&prev).ok_or_else(|| {
                        Error::Numeric("non-exact division in fraction-free elimination".into())
                    })?;
                }
                row[k] = Coefficient::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }
}

//! Sylvester, coefficient-matrix and Macaulay resultants.

use super::matrix::DenseMatrix;
use crate::algebra::{Coefficient, PolySystem, Polynomial};
use crate::error::{Error, Result};

/// Largest Macaulay matrix dimension attempted.
pub const MACAULAY_MAX_DIM: usize = 400;

/// Coefficients of a binary form in descending powers of `x1`.
fn binary_coefficients(f: &Polynomial) -> Result<Vec<Coefficient>> {
    if f.var_count() != 2 {
        return Err(Error::NotApplicable(format!(
            "Sylvester resultant needs binary forms, got {} variables",
            f.var_count()
        )));
    }
    let r = f.degree();
    (0..=r).map(|i| f.coefficient(&[r - i, i])).collect()
}

/// Determinant of the `(r1 + r2)`-square Sylvester matrix.
pub fn sylvester_resultant(f1: &Polynomial, f2: &Polynomial) -> Result<Coefficient> {
    let a = binary_coefficients(f1)?;
    let b = binary_coefficients(f2)?;
    let (r1, r2) = (a.len() - 1, b.len() - 1);
    let size = r1 + r2;
    let mut m = DenseMatrix::zeros(size, size);
    for shift in 0..r2 {
        for (j, c) in a.iter().enumerate() {
            m.set(shift, shift + j, c.clone());
        }
    }
    for shift in 0..r1 {
        for (j, c) in b.iter().enumerate() {
            m.set(r2 + shift, shift + j, c.clone());
        }
    }
    m.determinant()
}

/// Determinant of the coefficient matrix of an all-linear system.
pub fn determinant_resultant(system: &PolySystem) -> Result<Coefficient> {
    if let Some(i) = system.degrees().iter().position(|&r| r != 1) {
        return Err(Error::NotApplicable(format!("f{} is not linear", i + 1)));
    }
    let n = system.n();
    let rows = system
        .polys()
        .iter()
        .map(|f| {
            (0..n)
                .map(|j| {
                    let mut e = vec![0; n];
                    e[j] = 1;
                    f.coefficient(&e)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    DenseMatrix::from_rows(rows)?.determinant()
}

/// All exponent vectors of total degree `degree` in `n` variables,
/// descending graded-lex.
fn monomials(n: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n - 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, degree, &mut Vec::new(), &mut out);
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Side length of the Macaulay matrix for the given degrees.
pub fn macaulay_dimension(degrees: &[u32]) -> u64 {
    let n = degrees.len() as u64;
    let rho: u64 = degrees.iter().map(|&r| r as u64 - 1).sum::<u64>() + 1;
    binomial(rho + n - 1, n - 1)
}

/// Classical Macaulay quotient `det(M) / det(M')`.
///
/// `M` has one row per monomial `x^α` of the critical degree
/// `ρ = Σ(r_i - 1) + 1`, holding `(x^α / x_i^{r_i}) f_i` for the first `i`
/// with `x_i^{r_i} | x^α`. `M'` keeps the rows and columns of monomials
/// divisible by more than one `x_i^{r_i}`.
pub fn macaulay_resultant(system: &PolySystem) -> Result<Coefficient> {
    let n = system.n();
    if n > 4 {
        return Err(Error::NotApplicable(format!("Macaulay oracle limited to n <= 4, got {n}")));
    }
    let degrees = system.degrees();
    let dim = macaulay_dimension(&degrees);
    if dim > MACAULAY_MAX_DIM as u64 {
        return Err(Error::NotApplicable(format!("Macaulay matrix of size {dim} is too large")));
    }
    let rho: u32 = degrees.iter().map(|r| r - 1).sum::<u32>() + 1;
    let monos = monomials(n, rho);
    let position: std::collections::HashMap<&[u32], usize> =
        monos.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();

    let mut m = DenseMatrix::zeros(monos.len(), monos.len());
    let mut dilated = Vec::new();
    for (row, alpha) in monos.iter().enumerate() {
        let divisible: Vec<usize> = (0..n).filter(|&i| alpha[i] >= degrees[i]).collect();
        if divisible.len() > 1 {
            dilated.push(row);
        }
        let i = divisible[0];
        let mut shift = alpha.clone();
        shift[i] -= degrees[i];
        for (e, c) in system.poly(i).terms() {
            let target: Vec<u32> = e.as_slice().iter().zip(&shift).map(|(a, b)| a + b).collect();
            m.set(row, position[target.as_slice()], c.clone());
        }
    }

    let numerator = m.determinant()?;
    let denominator = m.submatrix(&dilated, &dilated).determinant()?;
    if denominator.is_zero() {
        return Err(Error::Inconclusive("Macaulay denominator minor vanishes".into()));
    }
    numerator
        .exact_div(&denominator)
        .ok_or_else(|| Error::Inconclusive("Macaulay quotient is not exact".into()))
}

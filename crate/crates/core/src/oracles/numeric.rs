//! Floating-point resultant of two binary forms through their roots.

use nalgebra::{Complex, DMatrix};

use crate::algebra::Polynomial;
use crate::error::{Error, Result};

/// Relative tolerance floor used when the exact value is (near) zero.
pub const ABSOLUTE_FLOOR: f64 = 1e-12;

/// A finite complex number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexApprox {
    pub re: f64,
    pub im: f64,
}

impl ComplexApprox {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if re.is_finite() && im.is_finite() {
            Ok(ComplexApprox { re, im })
        } else {
            Err(Error::Numeric(format!("non-finite value {re} + {im}i")))
        }
    }

    pub fn abs(&self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// `|a - b| <= max(rel * max(|a|, |b|), ABSOLUTE_FLOOR)`.
pub fn approx_eq(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= (rel * a.abs().max(b.abs())).max(ABSOLUTE_FLOOR)
}

/// Agreement of a complex approximation with an exact real value.
pub fn approx_matches(approx: ComplexApprox, exact: f64, rel: f64) -> bool {
    let scale = (rel * exact.abs().max(approx.abs())).max(ABSOLUTE_FLOOR);
    (approx.re - exact).abs() <= scale && approx.im.abs() <= scale
}

/// Coefficients of `f(1, z)` in ascending powers of `z`.
fn dehomogenized(f: &Polynomial) -> Result<Vec<f64>> {
    if f.var_count() != 2 {
        return Err(Error::NotApplicable("root product needs binary forms".into()));
    }
    let r = f.degree();
    (0..=r)
        .map(|i| {
            f.coefficient(&[r - i, i])?
                .to_f64()
                .ok_or_else(|| Error::NotApplicable("root product needs rational coefficients".into()))
        })
        .collect()
}

/// Diagonal similarity scaling by powers of two so row and column norms match.
fn balance(m: &mut DMatrix<f64>) {
    let n = m.nrows();
    let radix = 2.0f64;
    let sq = radix * radix;
    loop {
        let mut done = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += m[(j, i)].abs();
                    r += m[(i, j)].abs();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / radix;
            while c < g {
                f *= radix;
                c *= sq;
            }
            g = r * radix;
            while c > g {
                f /= radix;
                c /= sq;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                for j in 0..n {
                    m[(i, j)] /= f;
                    m[(j, i)] *= f;
                }
            }
        }
        if done {
            break;
        }
    }
}

/// Leading coefficient and roots of `f(1, z)` from the eigenvalues of its
/// balanced companion matrix.
pub fn roots(f: &Polynomial) -> Result<(f64, Vec<Complex<f64>>)> {
    let c = dehomogenized(f)?;
    let r = c.len() - 1;
    let lead = c[r];
    if lead == 0.0 {
        return Err(Error::Numeric(
            "vanishing leading coefficient: dehomogenization drops the degree".into(),
        ));
    }
    let mut m = DMatrix::<f64>::zeros(r, r);
    for j in 0..r {
        m[(0, j)] = -c[r - 1 - j] / lead;
    }
    for i in 1..r {
        m[(i, i - 1)] = 1.0;
    }
    balance(&mut m);
    let eig = m
        .complex_eigenvalues()
        .iter()
        .copied()
        .collect::<Vec<_>>();
    if eig.len() != r || eig.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Numeric("eigenvalue computation failed".into()));
    }
    Ok((lead, eig))
}

/// `a^{r2} b^{r1} Π_{i,j} (β_j - α_i)` with `f1(1,z) = a Π(z - α_i)` and
/// `f2(1,z) = b Π(z - β_j)`.
pub fn numeric_root_product(f1: &Polynomial, f2: &Polynomial) -> Result<ComplexApprox> {
    let (a, alphas) = roots(f1)?;
    let (b, betas) = roots(f2)?;
    let r1 = alphas.len() as i32;
    let r2 = betas.len() as i32;
    let mut acc = Complex::new(a.powi(r2) * b.powi(r1), 0.0);
    for alpha in &alphas {
        for beta in &betas {
            acc *= beta - alpha;
        }
    }
    ComplexApprox::new(acc.re, acc.im)
}

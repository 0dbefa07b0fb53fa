use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::transport::TransportationMatrix;

/// `det_{2<=i,j<=n}(δ_ij r_i k_i - r_ij)`; the empty determinant (n = 1) is 1.
pub fn minor_weight(m: &TransportationMatrix, degrees: &[u32], k: &[u32]) -> BigInt {
    let n = m.n();
    let rows: Vec<Vec<i128>> = (1..n)
        .map(|i| {
            (1..n)
                .map(|j| {
                    let diag = if i == j { degrees[i] as i128 * k[i] as i128 } else { 0 };
                    diag - m.get(i, j) as i128
                })
                .collect()
        })
        .collect();
    integer_determinant(rows)
}

/// Exact determinant of a small integer matrix.
///
/// Cofactor expansion up to 3x3, fraction-free elimination beyond, with a
/// big-integer retry when 128-bit intermediates would overflow.
pub fn integer_determinant(m: Vec<Vec<i128>>) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => BigInt::from(m[0][0]),
        2 => BigInt::from(m[0][0]) * m[1][1] - BigInt::from(m[0][1]) * m[1][0],
        3 => {
            let c = |a: usize, b: usize, c: usize, d: usize| {
                BigInt::from(m[1][a]) * m[2][b] - BigInt::from(m[1][c]) * m[2][d]
            };
            BigInt::from(m[0][0]) * c(1, 2, 2, 1) - BigInt::from(m[0][1]) * c(0, 2, 2, 0)
                + BigInt::from(m[0][2]) * c(0, 1, 1, 0)
        }
        _ => match bareiss_i128(m.clone()) {
            Some(d) => BigInt::from(d),
            None => bareiss_big(m.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()),
        },
    }
}

pub(crate) fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return Some(0);
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j]
                    .checked_mul(a[k][k])?
                    .checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    Some(sign * a[n - 1][n - 1])
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

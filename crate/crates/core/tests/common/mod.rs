#![allow(dead_code)]

use rand::Rng;
use reskit::{parse_polynomial, Coefficient, ExponentVector, PolySystem, Polynomial};

pub fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

pub fn system(texts: &[&str], params: &[String]) -> PolySystem {
    let n = texts.len();
    PolySystem::new(texts.iter().map(|t| parse_polynomial(t, n, params).unwrap()).collect())
        .unwrap()
}

/// Exponent vectors of total degree `degree` in `n` variables.
pub fn monomials(n: usize, degree: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![degree]];
    }
    let mut out = Vec::new();
    for e in (0..=degree).rev() {
        for mut rest in monomials(n - 1, degree - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// Dense form with integer coefficients drawn from `lo..=hi`; never zero.
pub fn random_poly(rng: &mut impl Rng, n: usize, r: u32, lo: i64, hi: i64) -> Polynomial {
    loop {
        let p = Polynomial::from_terms(
            n,
            r,
            monomials(n, r)
                .into_iter()
                .map(|e| (ExponentVector::new(e), Coefficient::from(rng.random_range(lo..=hi)))),
        )
        .unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_system(rng: &mut impl Rng, degrees: &[u32], lo: i64, hi: i64) -> PolySystem {
    let n = degrees.len();
    PolySystem::new(degrees.iter().map(|&r| random_poly(rng, n, r, lo, hi)).collect()).unwrap()
}

/// Form whose coefficients are independent parameters, numbered from `first`.
pub fn generic_poly(n: usize, r: u32, first: usize) -> (Polynomial, usize) {
    let monos = monomials(n, r);
    let count = monos.len();
    let p = Polynomial::from_terms(
        n,
        r,
        monos
            .into_iter()
            .enumerate()
            .map(|(i, e)| (ExponentVector::new(e), Coefficient::param(first + i))),
    )
    .unwrap();
    (p, first + count)
}

pub fn generic_system(degrees: &[u32]) -> PolySystem {
    let n = degrees.len();
    let mut next = 0;
    let polys = degrees
        .iter()
        .map(|&r| {
            let (p, after) = generic_poly(n, r, next);
            next = after;
            p
        })
        .collect();
    PolySystem::new(polys).unwrap()
}

/// All tuples in `1..=max` of length `n`.
pub fn degree_profiles(n: usize, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for head in 1..=max {
        for mut rest in degree_profiles(n - 1, max) {
            rest.insert(0, head);
            out.push(rest);
        }
    }
    out
}

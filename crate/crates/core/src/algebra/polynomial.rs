use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;

use super::coefficient::{write_abs_coefficient, write_param_monomial, Coefficient};
use crate::error::{Error, Result};

/// Exponents `(j_1, ..., j_n)` of a monomial `x_1^{j_1} ... x_n^{j_n}`.
///
/// Ordered graded-lexicographically: total degree first, then `x_1 > x_2 > ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse homogeneous polynomial in `x_1..x_n`.
///
/// Every stored exponent vector has length `var_count` and total degree
/// `degree`. The zero polynomial keeps a nominal degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    var_count: usize,
    degree: u32,
    terms: BTreeMap<ExponentVector, Coefficient>,
}

impl Polynomial {
    pub fn zero(var_count: usize, degree: u32) -> Self {
        Polynomial { var_count, degree, terms: BTreeMap::new() }
    }

    /// The constant `1`, of degree zero.
    pub fn one(var_count: usize) -> Self {
        Self::monomial(ExponentVector::zero(var_count), Coefficient::one())
    }

    pub fn monomial(exponents: ExponentVector, coef: Coefficient) -> Self {
        let mut p = Polynomial::zero(exponents.len(), exponents.degree());
        if !coef.is_zero() {
            p.terms.insert(exponents, coef);
        }
        p
    }

    /// `x_{index+1}` over `var_count` variables.
    pub fn var(var_count: usize, index: usize) -> Self {
        let mut e = vec![0; var_count];
        e[index] = 1;
        Self::monomial(ExponentVector(e), Coefficient::one())
    }

    /// Collects terms of the declared `degree`, merging repeated monomials.
    pub fn from_terms<I>(var_count: usize, degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Coefficient)>,
    {
        let mut p = Polynomial::zero(var_count, degree);
        for (e, c) in terms {
            if e.len() != var_count {
                return Err(Error::ExponentLength { expected: var_count, found: e.len() });
            }
            if e.degree() != degree {
                return Err(Error::InvalidSystem(format!(
                    "term of degree {} in a polynomial of degree {degree}",
                    e.degree()
                )));
            }
            p.add_term(e, &c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: ExponentVector, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> Result<Coefficient> {
        if e.len() != self.var_count {
            return Err(Error::ExponentLength { expected: self.var_count, found: e.len() });
        }
        Ok(self
            .terms
            .get(&ExponentVector(e.to_vec()))
            .cloned()
            .unwrap_or_else(Coefficient::zero))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .keys()
            .all(|e| e.len() == self.var_count && e.degree() == self.degree)
            && self.terms.values().all(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.var_count != other.var_count {
            return Err(Error::VarCountMismatch { left: self.var_count, right: other.var_count });
        }
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::InvalidSystem(format!(
                "sum of degree {} and degree {} polynomials is not homogeneous",
                self.degree, other.degree
            )));
        }
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        let rest = if self.is_zero() { self } else { other };
        for (e, c) in &rest.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn multiply(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.var_count != other.var_count {
            return Err(Error::VarCountMismatch { left: self.var_count, right: other.var_count });
        }
        let mut acc: HashMap<ExponentVector, Coefficient> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let prod = ca * cb;
                acc.entry(ea.add(eb))
                    .and_modify(|c| *c += &prod)
                    .or_insert(prod);
            }
        }
        let mut out = Polynomial::zero(self.var_count, self.degree + other.degree);
        out.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        debug_assert!(out.is_homogeneous());
        Ok(out)
    }

    pub fn power(&self, k: u32) -> Polynomial {
        PowerTable::new(self.clone(), k).get(k).clone()
    }

    pub fn scale(&self, s: &Coefficient) -> Polynomial {
        let mut out = Polynomial::zero(self.var_count, self.degree);
        if s.is_zero() {
            return out;
        }
        out.terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c * s))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        out
    }

    /// Sets the variables at the given zero-based positions to zero and drops
    /// them from the variable list. The declared degree is kept.
    pub fn restrict_zero(&self, vars: &[usize]) -> Polynomial {
        let keep: Vec<usize> = (0..self.var_count).filter(|i| !vars.contains(i)).collect();
        let mut out = Polynomial::zero(keep.len(), self.degree);
        for (e, c) in &self.terms {
            if vars.iter().any(|&v| e.0[v] > 0) {
                continue;
            }
            out.terms
                .insert(ExponentVector(keep.iter().map(|&i| e.0[i]).collect()), c.clone());
        }
        out
    }

    /// Applies `f` to every coefficient, dropping any that become zero.
    pub fn map_coefficients(&self, f: impl Fn(&Coefficient) -> Coefficient) -> Polynomial {
        let mut out = Polynomial::zero(self.var_count, self.degree);
        out.terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        out
    }

    pub fn specialize(&self, values: &[Option<BigRational>]) -> Polynomial {
        self.map_coefficients(|c| c.specialize(values))
    }

    /// Canonical text form accepted back by the parser.
    pub fn display<'a>(&'a self, params: &'a [String]) -> PolynomialDisplay<'a> {
        PolynomialDisplay { poly: self, params }
    }
}

/// Powers `p^0, p^1, ..., p^k` built by successive multiplication.
#[derive(Debug, Clone)]
pub struct PowerTable {
    powers: Vec<Polynomial>,
}

impl PowerTable {
    pub fn new(base: Polynomial, max_exponent: u32) -> Self {
        let mut t = PowerTable { powers: vec![Polynomial::one(base.var_count), base] };
        t.extend_to(max_exponent);
        t
    }

    pub fn extend_to(&mut self, k: u32) {
        while (self.powers.len() as u32) <= k {
            let next = self.powers.last().unwrap().multiply(&self.powers[1]).unwrap();
            self.powers.push(next);
        }
    }

    pub fn max_exponent(&self) -> u32 {
        self.powers.len() as u32 - 1
    }

    /// Panics if `k` exceeds the table.
    pub fn get(&self, k: u32) -> &Polynomial {
        &self.powers[k as usize]
    }

    pub fn base(&self) -> &Polynomial {
        &self.powers[1]
    }
}

pub struct PolynomialDisplay<'a> {
    poly: &'a Polynomial,
    params: &'a [String],
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.poly.terms.iter().rev() {
            for (pm, pc) in c.iter_terms().into_iter().rev() {
                match (first, pc.is_negative()) {
                    (true, true) => f.write_str("-")?,
                    (true, false) => {}
                    (false, true) => f.write_str(" - ")?,
                    (false, false) => f.write_str(" + ")?,
                }
                first = false;
                let has_factors = !pm.is_one() || e.degree() > 0;
                write_abs_coefficient(f, &pc, has_factors)?;
                write_param_monomial(f, &pm, self.params, true)?;
                let mut lead = pm.is_one();
                for (i, &x) in e.0.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    if !lead {
                        f.write_str("*")?;
                    }
                    lead = false;
                    write!(f, "x{}", i + 1)?;
                    if x > 1 {
                        write!(f, "^{x}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

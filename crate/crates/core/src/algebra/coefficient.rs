//! Exact coefficient ring: big rationals, optionally extended by commuting
//! symbolic parameters.
//!
//! A [`Coefficient`] is either a plain [`BigRational`] or a sparse polynomial
//! in parameters `p_0, p_1, ...` with rational coefficients. The parametric
//! form is only used when at least one non-constant monomial is present, so
//! structural equality is value equality.

use std::borrow::Cow;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exponents of the parameters in one parametric monomial.
///
/// Trailing zero exponents are trimmed, so `a` over `[a, b]` and `a` over
/// `[a]` share a representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamMonomial(Vec<u32>);

impl ParamMonomial {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        ParamMonomial(exponents)
    }

    pub fn one() -> Self {
        ParamMonomial(Vec::new())
    }

    pub fn var(index: usize) -> Self {
        let mut e = vec![0; index + 1];
        e[index] = 1;
        ParamMonomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Self) -> Self {
        let (long, short) = if self.0.len() >= other.0.len() {
            (&self.0, &other.0)
        } else {
            (&other.0, &self.0)
        };
        let mut e = long.clone();
        for (a, b) in e.iter_mut().zip(short) {
            *a += b;
        }
        ParamMonomial(e)
    }

    fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut e = self.0.clone();
        for (a, b) in e.iter_mut().zip(&other.0) {
            *a = a.checked_sub(*b)?;
        }
        Some(ParamMonomial::new(e))
    }
}

impl Ord for ParamMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // Trimmed vectors compare lexicographically exactly like their
        // zero-padded forms.
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ParamMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

type TermMap = BTreeMap<ParamMonomial, BigRational>;

/// Element of ℚ or of ℚ[p_0, p_1, ...].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coefficient {
    Rational(BigRational),
    /// Always holds at least one non-constant monomial and no zero entries.
    Parametric(BTreeMap<ParamMonomial, BigRational>),
}

impl Default for Coefficient {
    fn default() -> Self {
        Coefficient::zero()
    }
}

impl From<i64> for Coefficient {
    fn from(v: i64) -> Self {
        Coefficient::Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<BigInt> for Coefficient {
    fn from(v: BigInt) -> Self {
        Coefficient::Rational(BigRational::from_integer(v))
    }
}

impl From<BigRational> for Coefficient {
    fn from(v: BigRational) -> Self {
        Coefficient::Rational(v)
    }
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Coefficient::Rational(BigRational::one())
    }

    /// `numer / denom`, reduced. Panics if `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Coefficient::Rational(BigRational::new(numer.into(), denom.into()))
    }

    /// The parameter with the given position in the declared parameter list.
    pub fn param(index: usize) -> Self {
        let mut m = TermMap::new();
        m.insert(ParamMonomial::var(index), BigRational::one());
        Coefficient::Parametric(m)
    }

    /// Builds a coefficient from `(monomial, value)` pairs, merging repeats.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (ParamMonomial, BigRational)>,
    {
        let mut map = TermMap::new();
        for (m, c) in terms {
            add_term(&mut map, m, c);
        }
        Self::normalize(map)
    }

    fn normalize(mut map: TermMap) -> Self {
        map.retain(|_, c| !c.is_zero());
        match map.len() {
            0 => Coefficient::zero(),
            1 if map.keys().next().is_some_and(ParamMonomial::is_one) => {
                Coefficient::Rational(map.into_values().next().unwrap())
            }
            _ => Coefficient::Parametric(map),
        }
    }

    fn terms(&self) -> Cow<'_, TermMap> {
        match self {
            Coefficient::Rational(r) => {
                let mut m = TermMap::new();
                if !r.is_zero() {
                    m.insert(ParamMonomial::one(), r.clone());
                }
                Cow::Owned(m)
            }
            Coefficient::Parametric(m) => Cow::Borrowed(m),
        }
    }

    /// Iterates `(monomial, value)` pairs in ascending graded-lex order.
    pub fn iter_terms(&self) -> Vec<(ParamMonomial, BigRational)> {
        self.terms().into_owned().into_iter().collect()
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coefficient::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coefficient::Rational(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coefficient::Rational(r) => Some(r),
            Coefficient::Parametric(_) => None,
        }
    }

    pub fn is_integer(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_integer())
    }

    /// Whether every term has an integer coefficient.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms().values().all(|c| c.is_integer())
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.as_rational().and_then(|r| r.to_f64())
    }

    /// Highest exponent of parameter `index` in any term.
    pub fn degree_in(&self, index: usize) -> u32 {
        match self {
            Coefficient::Rational(_) => 0,
            Coefficient::Parametric(m) => m.keys().map(|k| k.exponent(index)).max().unwrap_or(0),
        }
    }

    /// Total degree in the parameters; zero for rationals.
    pub fn total_degree(&self) -> u32 {
        match self {
            Coefficient::Rational(_) => 0,
            Coefficient::Parametric(m) => m.keys().map(ParamMonomial::degree).max().unwrap_or(0),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Coefficient::zero();
        }
        match self {
            Coefficient::Rational(r) => Coefficient::Rational(r * s),
            Coefficient::Parametric(m) => {
                Coefficient::Parametric(m.iter().map(|(k, v)| (k.clone(), v * s)).collect())
            }
        }
    }

    pub fn scale_int(&self, s: &BigInt) -> Self {
        self.scale(&BigRational::from_integer(s.clone()))
    }

    /// Division by a non-zero integer; always exact because the ring contains ℚ.
    pub fn div_int(&self, m: &BigInt) -> Self {
        assert!(!m.is_zero(), "division by zero");
        self.scale(&BigRational::new(BigInt::one(), m.clone()))
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Coefficient::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient `self / divisor` when it exists in the coefficient ring.
    ///
    /// Rational divisors always divide. Parametric divisors use multivariate
    /// long division on leading terms and return `None` on a non-zero
    /// remainder.
    pub fn exact_div(&self, divisor: &Coefficient) -> Option<Coefficient> {
        match divisor {
            Coefficient::Rational(d) => {
                if d.is_zero() {
                    None
                } else {
                    Some(self.scale(&d.recip()))
                }
            }
            Coefficient::Parametric(dm) => {
                let (dlead_m, dlead_c) = dm.iter().next_back().unwrap();
                let mut rem = self.terms().into_owned();
                let mut quot = TermMap::new();
                while let Some((rm, rc)) = rem.iter().next_back() {
                    let qm = rm.checked_div(dlead_m)?;
                    let qc = rc / dlead_c;
                    for (m, c) in dm {
                        add_term(&mut rem, m.mul(&qm), -(c * &qc));
                    }
                    add_term(&mut quot, qm, qc);
                }
                Some(Self::normalize(quot))
            }
        }
    }

    /// Substitutes rational values for some parameters; the rest stay symbolic.
    pub fn specialize(&self, values: &[Option<BigRational>]) -> Coefficient {
        let Coefficient::Parametric(m) = self else {
            return self.clone();
        };
        let mut out = TermMap::new();
        for (mono, c) in m {
            let mut coef = c.clone();
            let mut rest = mono.0.clone();
            for (i, e) in rest.iter_mut().enumerate() {
                if let Some(Some(v)) = values.get(i) {
                    if *e > 0 {
                        coef *= num_traits::pow(v.clone(), *e as usize);
                        *e = 0;
                    }
                }
            }
            add_term(&mut out, ParamMonomial::new(rest), coef);
        }
        Self::normalize(out)
    }

    /// Renders with the given parameter names; parameters without a name
    /// print as `p<index>`.
    pub fn display<'a>(&'a self, params: &'a [String]) -> CoefficientDisplay<'a> {
        CoefficientDisplay { coef: self, params }
    }
}

fn add_term(map: &mut TermMap, m: ParamMonomial, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl<'a> Add<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;

    fn add(self, rhs: &'a Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            _ => {
                let mut map = self.terms().into_owned();
                for (m, c) in rhs.terms().iter() {
                    add_term(&mut map, m.clone(), c.clone());
                }
                Coefficient::normalize(map)
            }
        }
    }
}

impl<'a> Sub<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;

    fn sub(self, rhs: &'a Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a - b),
            _ => {
                let mut map = self.terms().into_owned();
                for (m, c) in rhs.terms().iter() {
                    add_term(&mut map, m.clone(), -c);
                }
                Coefficient::normalize(map)
            }
        }
    }
}

impl<'a> Mul<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;

    fn mul(self, rhs: &'a Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (Coefficient::Rational(a), p) | (p, Coefficient::Rational(a)) => p.scale(a),
            (Coefficient::Parametric(a), Coefficient::Parametric(b)) => {
                let mut map = TermMap::new();
                for (ma, ca) in a {
                    for (mb, cb) in b {
                        add_term(&mut map, ma.mul(mb), ca * cb);
                    }
                }
                Coefficient::normalize(map)
            }
        }
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: Coefficient) -> Coefficient {
        &self + &rhs
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: Coefficient) -> Coefficient {
        &self - &rhs
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        &self * &rhs
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        match (&mut *self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Coefficient> for Coefficient {
    fn sub_assign(&mut self, rhs: &Coefficient) {
        match (&mut *self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => *a -= b,
            _ => *self = &*self - rhs,
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        match self {
            Coefficient::Rational(r) => Coefficient::Rational(-r),
            Coefficient::Parametric(m) => {
                Coefficient::Parametric(m.iter().map(|(k, v)| (k.clone(), -v)).collect())
            }
        }
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

pub struct CoefficientDisplay<'a> {
    coef: &'a Coefficient,
    params: &'a [String],
}

pub(crate) fn write_param_monomial(
    f: &mut fmt::Formatter<'_>,
    m: &ParamMonomial,
    params: &[String],
    mut first: bool,
) -> fmt::Result {
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        match params.get(i) {
            Some(name) => f.write_str(name)?,
            None => write!(f, "p{i}")?,
        }
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Writes `|c|` followed by `*`-joined factors, omitting a unit coefficient
/// when at least one factor follows. The sign is handled by the caller.
pub(crate) fn write_abs_coefficient(
    f: &mut fmt::Formatter<'_>,
    c: &BigRational,
    has_factors: bool,
) -> fmt::Result {
    let a = c.abs();
    if a.is_one() && has_factors {
        return Ok(());
    }
    if a.is_integer() {
        write!(f, "{}", a.numer())?;
    } else {
        write!(f, "{}/{}", a.numer(), a.denom())?;
    }
    if has_factors {
        f.write_str("*")?;
    }
    Ok(())
}

impl fmt::Display for CoefficientDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coef.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in terms.iter().rev().enumerate() {
            match (idx == 0, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            write_abs_coefficient(f, c, !m.is_one())?;
            write_param_monomial(f, m, self.params, true)?;
        }
        Ok(())
    }
}

//! Reader for the polynomial text grammar.
//!
//! ```text
//! poly   := ['-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := number | (var | param) ['^' posint]
//! number := integer ['/' posint]
//! var    := 'x' posint
//! ```
//!
//! Whitespace is insignificant. Parameters are identifiers that do not look
//! like a variable (`x` followed by a digit).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::coefficient::{Coefficient, ParamMonomial};
use super::polynomial::{ExponentVector, Polynomial};
use crate::error::{ParseError, ParseErrorKind};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    n: usize,
    params: &'a [String],
}

struct Term {
    start: usize,
    coef: BigRational,
    vars: Vec<u32>,
    params: Vec<u32>,
}

fn syntax(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError { pos, kind: ParseErrorKind::Syntax(msg.into()) }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(syntax(start, "expected integer"));
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn positive_u32(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let v = self.integer()?;
        match u32::try_from(&v) {
            Ok(e) if e > 0 => Ok(e),
            _ => Err(syntax(start, "expected positive integer")),
        }
    }

    fn identifier(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn factor(&mut self, term: &mut Term) -> Result<(), ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek_raw() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = BigRational::from_integer(num);
                if self.eat('/') {
                    let dpos = self.pos;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(syntax(dpos, "zero denominator"));
                    }
                    value /= BigRational::from_integer(den);
                }
                term.coef *= value;
                Ok(())
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let name = self.identifier();
                let exp = if self.eat('^') { self.positive_u32()? } else { 1 };
                let bytes = name.as_bytes();
                if bytes[0] == b'x' && bytes.len() > 1 && bytes[1].is_ascii_digit() {
                    let idx = name[1..]
                        .parse::<usize>()
                        .ok()
                        .filter(|&i| i >= 1 && i <= self.n)
                        .ok_or_else(|| ParseError {
                            pos: start,
                            kind: ParseErrorKind::UnknownIdentifier(name.to_string()),
                        })?;
                    term.vars[idx - 1] += exp;
                } else {
                    let idx = self.params.iter().position(|p| p == name).ok_or_else(|| {
                        ParseError {
                            pos: start,
                            kind: ParseErrorKind::UnknownIdentifier(name.to_string()),
                        }
                    })?;
                    if term.params.len() <= idx {
                        term.params.resize(idx + 1, 0);
                    }
                    term.params[idx] += exp;
                }
                Ok(())
            }
            Some(c) => Err(syntax(start, format!("unexpected character `{c}`"))),
            None => Err(syntax(start, "unexpected end of input")),
        }
    }

    fn term(&mut self, negative: bool) -> Result<Term, ParseError> {
        self.skip_ws();
        let mut term = Term {
            start: self.pos,
            coef: if negative { -BigRational::one() } else { BigRational::one() },
            vars: vec![0; self.n],
            params: Vec::new(),
        };
        self.factor(&mut term)?;
        while self.eat('*') {
            self.factor(&mut term)?;
        }
        Ok(term)
    }
}

/// Parses `text` as a homogeneous polynomial in `x1..xn` whose coefficients
/// may mention the given parameters.
pub fn parse_polynomial(text: &str, n: usize, params: &[String]) -> Result<Polynomial, ParseError> {
    let mut p = Parser { src: text, pos: 0, n, params };
    let mut terms = Vec::new();
    let negative = p.eat('-');
    terms.push(p.term(negative)?);
    loop {
        match p.peek() {
            None => break,
            Some('+') => {
                p.pos += 1;
                terms.push(p.term(false)?);
            }
            Some('-') => {
                p.pos += 1;
                terms.push(p.term(true)?);
            }
            Some(c) => return Err(syntax(p.pos, format!("unexpected character `{c}`"))),
        }
    }

    let mut degree: Option<u32> = None;
    for t in terms.iter().filter(|t| !t.coef.is_zero()) {
        let d: u32 = t.vars.iter().sum();
        match degree {
            None => degree = Some(d),
            Some(expected) if expected != d => {
                return Err(ParseError {
                    pos: t.start,
                    kind: ParseErrorKind::NonHomogeneous { expected, found: d },
                })
            }
            _ => {}
        }
    }
    let degree = degree.unwrap_or(0);
    let poly = Polynomial::from_terms(
        n,
        degree,
        terms.into_iter().filter(|t| !t.coef.is_zero()).map(|t| {
            let coef = Coefficient::from_terms([(ParamMonomial::new(t.params), t.coef)]);
            (ExponentVector::new(t.vars), coef)
        }),
    )
    .expect("terms checked for homogeneity");
    Ok(poly)
}

use super::coefficient::Coefficient;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// `n` homogeneous polynomials in `n` variables, each of degree at least one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem {
    polys: Vec<Polynomial>,
}

impl PolySystem {
    pub fn new(polys: Vec<Polynomial>) -> Result<Self> {
        let n = polys.len();
        if n == 0 {
            return Err(Error::InvalidSystem("empty system".into()));
        }
        for (i, p) in polys.iter().enumerate() {
            if p.var_count() != n {
                return Err(Error::InvalidSystem(format!(
                    "f{} has {} variables, expected {n}",
                    i + 1,
                    p.var_count()
                )));
            }
            if p.degree() == 0 {
                return Err(Error::InvalidSystem(format!("f{} has degree 0", i + 1)));
            }
        }
        Ok(PolySystem { polys })
    }

    /// `f_i = x_i^{r_i}`, the system whose resultant is normalized to one.
    pub fn diagonal(degrees: &[u32]) -> Result<Self> {
        let n = degrees.len();
        let polys = degrees
            .iter()
            .enumerate()
            .map(|(i, &r)| {
                let mut e = vec![0; n];
                e[i] = r;
                Polynomial::monomial(e.into(), Coefficient::one())
            })
            .collect();
        Self::new(polys)
    }

    pub fn n(&self) -> usize {
        self.polys.len()
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn poly(&self, i: usize) -> &Polynomial {
        &self.polys[i]
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.polys.iter().map(Polynomial::degree).collect()
    }

    pub fn is_rational(&self) -> bool {
        self.polys
            .iter()
            .all(|p| p.terms().all(|(_, c)| c.as_rational().is_some()))
    }

    /// Replaces `f_i` by `g`, which must have the same variable count.
    pub fn with_poly(&self, i: usize, g: Polynomial) -> Result<Self> {
        let mut polys = self.polys.clone();
        polys[i] = g;
        Self::new(polys)
    }

    pub fn map_polys(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Result<Self> {
        Self::new(self.polys.iter().map(f).collect())
    }
}

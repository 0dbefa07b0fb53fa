//! Independent classical resultant constructions used to cross-check the
//! trace-based computation.
//!
//! The oracles are normalized so that `R(x_1^{r_1}, ..., x_n^{r_n}) = 1`; any
//! remaining convention difference shows up as a global sign, which
//! [`run_oracles`] reports per oracle.

mod classical;
mod matrix;
mod numeric;

pub use classical::{
    determinant_resultant, macaulay_dimension, macaulay_resultant, sylvester_resultant,
    MACAULAY_MAX_DIM,
};
pub use matrix::DenseMatrix;
pub use numeric::{
    approx_eq, approx_matches, numeric_root_product, roots, ComplexApprox, ABSOLUTE_FLOOR,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Coefficient, PolySystem};
use crate::error::Error;

/// Relative tolerance of the floating-point oracle.
pub const NUMERIC_TOLERANCE: f64 = 1e-8;

/// How an oracle value relates to the computed resultant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Agreement {
    /// Equal, sign `+1`.
    Equal,
    /// Equal up to sign `-1`.
    Negated,
    /// Both vanish; the sign is undetermined.
    BothZero,
    Disagree,
}

impl Agreement {
    pub fn sign(self) -> Option<i8> {
        match self {
            Agreement::Equal => Some(1),
            Agreement::Negated => Some(-1),
            _ => None,
        }
    }

    pub fn agrees(self) -> bool {
        self != Agreement::Disagree
    }
}

pub fn compare_exact(value: &Coefficient, oracle: &Coefficient) -> Agreement {
    if value.is_zero() && oracle.is_zero() {
        Agreement::BothZero
    } else if value == oracle {
        Agreement::Equal
    } else if *value == -oracle {
        Agreement::Negated
    } else {
        Agreement::Disagree
    }
}

pub fn compare_numeric(exact: &Coefficient, approx: ComplexApprox, rel: f64) -> Agreement {
    let Some(x) = exact.to_f64() else {
        return Agreement::Disagree;
    };
    if x == 0.0 {
        return if approx_matches(approx, 0.0, rel) { Agreement::BothZero } else { Agreement::Disagree };
    }
    if approx_matches(approx, x, rel) {
        Agreement::Equal
    } else if approx_matches(approx, -x, rel) {
        Agreement::Negated
    } else {
        Agreement::Disagree
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum OracleStatus {
    Compared { agreement: Agreement, oracle_value: String },
    NotApplicable(String),
    Inconclusive(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleOutcome {
    pub name: &'static str,
    pub status: OracleStatus,
    /// Parameter values substituted before comparing, if any.
    pub specialization: Option<Vec<BigInt>>,
}

impl OracleOutcome {
    pub fn sign(&self) -> Option<i8> {
        match &self.status {
            OracleStatus::Compared { agreement, .. } => agreement.sign(),
            _ => None,
        }
    }
}

fn status_of(
    result: Result<Coefficient, Error>,
    value: &Coefficient,
    params: &[String],
) -> OracleStatus {
    match result {
        Ok(o) => OracleStatus::Compared {
            agreement: compare_exact(value, &o),
            oracle_value: o.display(params).to_string(),
        },
        Err(Error::Inconclusive(msg)) => OracleStatus::Inconclusive(msg),
        Err(e) => OracleStatus::NotApplicable(e.to_string()),
    }
}

/// Random non-zero integer values for `count` parameters.
pub fn random_specialization(count: usize, seed: u64) -> Vec<BigInt> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let v: i64 = rng.random_range(1..=20);
            BigInt::from(if rng.random_bool(0.5) { -v } else { v })
        })
        .collect()
}

fn as_assignment(values: &[BigInt]) -> Vec<Option<BigRational>> {
    values.iter().map(|v| Some(BigRational::from_integer(v.clone()))).collect()
}

/// Runs every oracle applicable to `system` against the already computed
/// `resultant`. Parametric systems are specialized at random integer points
/// (from `seed`) for oracles that need numbers.
pub fn run_oracles(
    system: &PolySystem,
    resultant: &Coefficient,
    params: &[String],
    seed: u64,
) -> Vec<OracleOutcome> {
    let n = system.n();
    let degrees = system.degrees();
    let rational = system.is_rational();
    let point = (!rational).then(|| random_specialization(params.len(), seed));
    let specialized = point.as_ref().map(|p| {
        let a = as_assignment(p);
        (
            system.map_polys(|f| f.specialize(&a)).expect("specialization keeps shape"),
            resultant.specialize(&a),
        )
    });

    let mut out = Vec::new();

    out.push(OracleOutcome {
        name: "sylvester",
        status: if n == 2 {
            status_of(sylvester_resultant(system.poly(0), system.poly(1)), resultant, params)
        } else {
            OracleStatus::NotApplicable(format!("needs n = 2, got {n}"))
        },
        specialization: None,
    });

    out.push(OracleOutcome {
        name: "determinant",
        status: status_of(determinant_resultant(system), resultant, params),
        specialization: None,
    });

    let symbolic_macaulay = rational || (n <= 3 && degrees.iter().all(|&r| r <= 2));
    out.push(match &specialized {
        Some((s, v)) if !symbolic_macaulay => OracleOutcome {
            name: "macaulay",
            status: status_of(macaulay_resultant(s), v, params),
            specialization: point.clone(),
        },
        _ => OracleOutcome {
            name: "macaulay",
            status: status_of(macaulay_resultant(system), resultant, params),
            specialization: None,
        },
    });

    let numeric = if n != 2 {
        OracleStatus::NotApplicable(format!("needs n = 2, got {n}"))
    } else {
        let (s, v) = match &specialized {
            Some((s, v)) => (s, v),
            None => (system, resultant),
        };
        match numeric_root_product(s.poly(0), s.poly(1)) {
            Ok(z) => OracleStatus::Compared {
                agreement: compare_numeric(v, z, NUMERIC_TOLERANCE),
                oracle_value: format!("{:.12e} {:+.3e}i", z.re, z.im),
            },
            Err(e) => OracleStatus::NotApplicable(e.to_string()),
        }
    };
    out.push(OracleOutcome {
        name: "numeric",
        status: numeric,
        specialization: if n == 2 { point } else { None },
    });
    out
}

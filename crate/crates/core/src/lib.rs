//! Exact resultants of `n` homogeneous polynomials in `n` variables.
//!
//! The resultant is computed from the traces `T_k` of the system (a sum over
//! transportation matrices weighted by integer minors) recombined through the
//! Taylor coefficients of `exp(-Σ T_k λ^k)`. Classical Sylvester, Macaulay and
//! root-product constructions are provided in [`oracles`] for cross-checking.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod oracles;
pub mod schur;
pub mod traces;

pub use algebra::{parse_polynomial, Coefficient, ExponentVector, PolySystem, Polynomial};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use schur::{degree_vector, resultant};

//! Exact coefficient rings and sparse homogeneous polynomials.

mod coefficient;
mod parse;
mod polynomial;
mod system;

pub use coefficient::{Coefficient, CoefficientDisplay, ParamMonomial};
pub use parse::parse_polynomial;
pub use polynomial::{ExponentVector, Polynomial, PolynomialDisplay, PowerTable};
pub use system::PolySystem;

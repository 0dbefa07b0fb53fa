//! Traces `T_k` of a homogeneous system: the Taylor coefficients of
//! `-log R` of the shifted system `x_i^{r_i} - λ_i f_i`.
//!
//! For `k` with all entries positive,
//!
//! ```text
//! T_k = 1/(k_1...k_n) Σ_r det_{2<=i,j<=n}(δ_ij r_i k_i - r_ij) Π_i coeff(f_i^{k_i}, row_i(r))
//! ```
//!
//! summed over non-negative integer matrices `r` whose `i`-th row and `i`-th
//! column both sum to `r_i k_i`. Zero entries of `k` reduce to a smaller
//! system with the matching variables set to zero.

mod engine;
mod index;
mod minor;
mod table;
mod transport;

pub use engine::{build_trace_table_with_bound, TraceEngine};
pub use index::{IndexBox, TraceIndex};
pub use minor::{integer_determinant, minor_weight};
pub use table::TraceTable;
pub use transport::{enumerate_transportation, TransportationMatrix};

use crate::algebra::{Coefficient, PolySystem};
use crate::error::Result;
use crate::schur::degree_vector;

/// Trace table over `0 <= v <= d`, `d` the degree vector of the resultant.
pub fn build_trace_table(system: &PolySystem) -> Result<TraceTable> {
    let d = degree_vector(system);
    build_trace_table_with_bound(system, TraceIndex::new(d.entries().to_vec()))
}

/// One trace `T_k` without building a full table.
pub fn trace(system: &PolySystem, k: &TraceIndex) -> Result<Coefficient> {
    TraceEngine::new(system, k.clone())?.trace(k)
}

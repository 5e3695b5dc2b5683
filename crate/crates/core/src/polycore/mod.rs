//! Exact polynomial arithmetic over the integers.
//!
//! Everything here is integer or rational arithmetic; no floating point.

mod factor;
mod gcd;
pub(crate) mod modp;
mod poly;
mod resultant;
mod sturm;
mod surd;

pub(crate) use factor::is_small_prime;
pub use factor::{factor_rational, good_prime, is_irreducible};
pub use gcd::{gcd, squarefree_decomposition, squarefree_part, strip_factor};
pub use poly::{BigIntRepr, IntPolynomial};
pub use resultant::{discriminant, power_map, resultant, resultant_over, Domain};
pub use sturm::{sturm_chain, sturm_count};
pub use surd::QuadraticSurd;

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("interval endpoint is a root of the polynomial")]
    EndpointRoot,
    #[error("internal arithmetic inconsistency: {0}")]
    Internal(&'static str),
}

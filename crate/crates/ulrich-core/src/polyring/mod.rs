//! Exact polynomial arithmetic over the Gaussian rationals.

mod monomial;
mod order;
mod parse;
mod poly;
mod scalar;

pub use monomial::{Monomial, MAX_VARS};
pub use order::MonomialOrder;
pub use parse::{parse_poly, parse_poly_list};
pub use poly::{divide, reduce, reduce_with_quotients, same_ring, Polynomial, Ring, RingRef};
pub use scalar::Scalar;

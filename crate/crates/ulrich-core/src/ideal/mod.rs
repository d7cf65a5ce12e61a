//! Groebner bases and ideal calculus.

mod gb;
mod handle;
mod linalg;
mod local;

pub use gb::{buchberger, is_auto_reduced, s_pair_audit, s_polynomial};
pub use handle::{determinant, minors, monomials_of_degree, IdealHandle, QuotientDim};
pub use linalg::Echelon;
pub use local::{local_colength, local_colength_by_truncation, PresentedQuotient, DEFAULT_BUDGET};

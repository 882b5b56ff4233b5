//! Smith normal form over the integers and linear algebra over F2.

mod f2;
mod snf;

pub use f2::{in_span, span_basis, F2Matrix, F2Vec};
pub use snf::{smith_normal_form, IntMatrix, Snf};

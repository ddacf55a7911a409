//! Exact multivariate polynomials.

mod matrix;
mod monomial;
mod order;
mod parse;
mod polynomial;
pub mod univariate;

pub use matrix::{jacobian, minors};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::parse_polynomial;
pub(crate) use polynomial::var_index;
pub use polynomial::{vars, Polynomial, Vars};
pub use univariate::UniPoly;

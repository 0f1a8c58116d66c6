//! Exact multivariate polynomials over the rationals.

mod monomial;
mod parse;
mod polynomial;
mod ring;

pub(crate) use monomial::degrevlex as degrevlex_slices;
pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::{Polynomial, Term};
pub use ring::Ring;

/// Arbitrary precision rational coefficients.
pub type Rational = num_rational::BigRational;

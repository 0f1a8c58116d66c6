//! Minor left prime (MLP) factorization of multivariate polynomial matrices.
//!
//! Given `F` in `Q[z]^{l x m}` of rank `r`, decide whether `F = G0 * F0` with
//! `F0` an `r x m` matrix whose maximal minors are coprime, and construct the
//! factors when they exist. Two deciders are provided: a fast one working on a
//! full row rank submatrix (`factorize_mlp`) and a baseline working with the
//! ideal of all `r x r` minors (`factorize_guan`).

pub mod bench;
pub mod corpus;
pub mod document;
pub mod error;
pub mod factor;
pub mod freebasis;
pub mod groebner;
pub mod matrix;
pub mod poly;
mod presentation;
pub mod quotient;

pub use document::{Label, MatrixDocument};
pub use error::{Error, Result};
pub use factor::{factorize_guan, factorize_mlp, verify, Decision, LiftResult, MlpFactorization};
pub use freebasis::{FreeBasis, Provenance};
pub use groebner::{DivisionResult, GroebnerBasis, ModuleOrder, ModuleVector, Submodule};
pub use matrix::{BlockSplit, MinorIdeal, PolyMatrix, RankWitness};
pub use poly::{Monomial, MonomialOrder, Polynomial, Rational, Ring, Term};
pub use quotient::{FittingCertificate, QuotientModule, QuotientSource};

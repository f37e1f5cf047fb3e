//! Exact combinatorics for skew Young diagrams: outside nested decompositions
//! into thickened strips, the `#` operation on a cutting strip, and the
//! determinant identities for Schur polynomials and standard tableau counts
//! that those decompositions produce.
//!
//! Every identity here is checked against a brute-force oracle from
//! [`tableaux`], so the modules are layered bottom-up:
//! [`shapes`] → [`polynomial`] → [`tableaux`] → [`decomp`] →
//! [`nested_det`] / [`paths`] → [`mstrip`] → [`reproduce`] → [`cli`].

pub mod catalog;
pub mod cli;
pub mod decomp;
pub mod error;
pub mod mstrip;
pub mod nested_det;
pub mod paths;
pub mod polynomial;
pub mod reproduce;
pub mod shapes;
pub mod tableaux;

pub use error::{Error, Result};

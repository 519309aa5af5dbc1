//! Associated forms of homogeneous polynomials and polynomial tuples.
//!
//! Everything here is exact: coefficients are arbitrary-precision rationals and
//! every linear-algebra step runs through fraction-free elimination. The crate is
//! `no_std` and only needs `alloc`.
//!
//! The main entry points are [`milnor::associated_form`] (a nondegenerate form `f`
//! to its associated form on the dual space) and [`milnor::associated_form_tuple`]
//! (the same construction for an `n`-tuple of forms of equal degree with finite
//! colength). [`apolarity`] inverts the construction through annihilator ideals,
//! [`invariants`] carries the classical invariants and contravariants used to cross
//! check it, and [`duality`] covers the canonical one-parameter families.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod action;
pub mod apolarity;
pub mod differential;
pub mod duality;
mod error;
pub mod invariants;
pub mod matrix;
pub mod milnor;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rational;

pub use error::{Error, Result};
pub use matrix::MatrixQ;
pub use monomial::{monomial_basis, Monomial};
pub use parse::{parse_poly, render_poly};
pub use poly::{Poly, Space};
pub use rational::Rational;

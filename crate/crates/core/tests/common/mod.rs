#![allow(dead_code)]

use assoform_core::matrix::MatrixQ;
use assoform_core::monomial::monomial_basis;
use assoform_core::rational::{int, rat};
use assoform_core::{Poly, Rational, Space};
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| *r != int(0))
}

/// A form with every monomial of the given degree present with a small integer
/// coefficient (zero allowed).
pub fn form(nvars: usize, degree: usize, space: Space) -> impl Strategy<Value = Poly> {
    let basis = monomial_basis(nvars, degree);
    proptest::collection::vec(-5i64..=5, basis.len()).prop_map(move |cs| {
        Poly::from_terms(
            nvars,
            space,
            basis.iter().cloned().zip(cs.into_iter().map(int)),
        )
    })
}

pub fn invertible(n: usize) -> impl Strategy<Value = MatrixQ> {
    proptest::collection::vec(-3i64..=3, n * n)
        .prop_map(move |v| MatrixQ::from_i64(n, n, &v).unwrap())
        .prop_filter("invertible", |m| m.det().unwrap() != int(0))
}

pub fn z(text: &str, n: usize) -> Poly {
    assoform_core::parse_poly(text, n, Space::Z).unwrap()
}

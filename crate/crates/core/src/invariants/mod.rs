//! Classical invariants and contravariants of binary quartics, binary quintics in
//! Sylvester form, and ternary cubics, together with the checks that express
//! `Δ·Φ` through them.
//!
//! Invariant functions accept forms in either variable space: the same formula
//! applies to a source form and to an associated form.

mod binary;
mod quintic;
mod ternary;

pub use binary::{
    catalecticant, delta_quartic, i2_quartic, j_quartic, k_quartic, verify_quartic_identity,
    QuarticCoeffs,
};
pub use quintic::{
    covariant_relation_holds, quintic_covariants, verify_quintic_identity, QuinticCovariants,
    SylvesterQuintic,
};
pub use ternary::{
    a6_family, aronhold_a4, delta_cubic_family, j_cubic_family, k_cubic, pippian, quippian,
    verify_cubic_identity, TernaryCubicFamily,
};

use crate::poly::{Poly, Space};
use crate::rational::Rational;
use crate::{Error, Result};
use num_traits::One;

/// `Λ ↦ Λ(-z2, z1)`: a binary dual form read back as a source form.
pub fn hat(form: &Poly) -> Result<Poly> {
    if form.nvars() != 2 {
        return Err(Error::NvarsMismatch {
            expected: 2,
            found: form.nvars(),
        });
    }
    if form.space() != Space::E {
        return Err(Error::SpaceMismatch);
    }
    let z1 = Poly::var(2, Space::Z, 0);
    let z2 = Poly::var(2, Space::Z, 1);
    Ok(form.substitute(&[-z2, z1]))
}

pub(crate) fn require_nvars(f: &Poly, n: usize) -> Result<()> {
    if f.nvars() != n {
        return Err(Error::NvarsMismatch {
            expected: n,
            found: f.nvars(),
        });
    }
    Ok(())
}

pub(crate) fn require_degree(f: &Poly, d: usize) -> Result<()> {
    let found = f.form_degree()?;
    if found != d {
        return Err(Error::DegreeMismatch { expected: d, found });
    }
    Ok(())
}

pub(crate) fn checked_div(num: Rational, den: Rational, what: &'static str) -> Result<Rational> {
    use num_traits::Zero;
    if den.is_zero() {
        return Err(Error::DivisionByZero(what));
    }
    Ok(num / den)
}

pub(crate) fn one() -> Rational {
    Rational::one()
}

//! Annihilators of dual forms and the inverse-system round trip.
//!
//! For `F` in the dual space, `F^perp` is the ideal of source polynomials `g`
//! with `g ⋄ F = 0`. A form `F` of degree `n(d-2)` is in the image of the tuple
//! construction exactly when the degree `d-1` slice of `F^perp` is
//! `n`-dimensional and its basis has finite colength; that basis recovers the
//! tuple up to change of basis.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::differential::diamond;
use crate::matrix::MatrixQ;
use crate::milnor::{is_finite_colength, PolyTuple};
use crate::monomial::GradedBasis;
use crate::poly::{Poly, Space};
use crate::rational::Rational;
use crate::{Error, Result};

/// The degree-`k` piece of the annihilator of a dual form.
#[derive(Debug, Clone)]
pub struct ApolarSlice {
    pub form: Poly,
    pub degree: usize,
    pub kernel_basis: Vec<Poly>,
}

impl ApolarSlice {
    pub fn dim(&self) -> usize {
        self.kernel_basis.len()
    }
}

fn dual_form_degree(form: &Poly) -> Result<usize> {
    if form.space() != Space::E {
        return Err(Error::SpaceMismatch);
    }
    if form.is_zero() {
        return Err(Error::Unsupported("zero dual form"));
    }
    form.form_degree()
}

/// Kernel of `g -> g ⋄ F` on forms of degree `k`.
pub fn annihilator_graded(form: &Poly, k: usize) -> Result<ApolarSlice> {
    let big = dual_form_degree(form)?;
    if k > big {
        return Err(Error::DegreeMismatch {
            expected: big,
            found: k,
        });
    }
    let n = form.nvars();
    let source = GradedBasis::new(n, k);
    let target = GradedBasis::new(n, big - k);
    // column c holds the image of the c-th source monomial
    let mut m = MatrixQ::zeros(target.len(), source.len());
    for (c, mono) in source.monomials().iter().enumerate() {
        let g = Poly::monomial(Space::Z, mono.clone(), Rational::from_integer(1.into()));
        let image = diamond(&g, form)?.coords(&target)?;
        for (r, v) in image.into_iter().enumerate() {
            if !v.is_zero() {
                m.set(r, c, v);
            }
        }
    }
    let kernel_basis = m
        .nullspace()
        .iter()
        .map(|v| Poly::from_coords(&source, v, Space::Z))
        .collect();
    Ok(ApolarSlice {
        form: form.clone(),
        degree: k,
        kernel_basis,
    })
}

/// Outcome of reading a tuple off the annihilator.
#[derive(Debug, Clone)]
pub enum ApolarTuple {
    Tuple(PolyTuple),
    /// The degree `d-1` slice had this dimension instead of `n`.
    NotApplicable {
        dim: usize,
    },
}

fn check_socle_degree(form: &Poly, d: usize) -> Result<usize> {
    let n = form.nvars();
    if d < 2 {
        return Err(Error::Unsupported("form degree d must be at least 2"));
    }
    let expected = n * (d - 2);
    let found = dual_form_degree(form)?;
    if found != expected {
        return Err(Error::DegreeMismatch { expected, found });
    }
    Ok(n)
}

/// `F -> F^perp ∩ C[z]_{d-1}` when that slice has dimension `n`.
///
/// `d` must be given: `n(d-2)` alone does not determine it.
pub fn apolar_tuple(form: &Poly, d: usize) -> Result<ApolarTuple> {
    let n = check_socle_degree(form, d)?;
    let slice = annihilator_graded(form, d - 1)?;
    if slice.dim() != n {
        return Ok(ApolarTuple::NotApplicable { dim: slice.dim() });
    }
    Ok(ApolarTuple::Tuple(PolyTuple::new(slice.kernel_basis)?))
}

/// Membership in the image of the tuple construction.
pub fn in_image(form: &Poly, d: usize) -> Result<bool> {
    Ok(match apolar_tuple(form, d)? {
        ApolarTuple::Tuple(t) => is_finite_colength(&t),
        ApolarTuple::NotApplicable { .. } => false,
    })
}

/// Whether every `f_j ⋄ F` vanishes.
pub fn inverse_system_check(tuple: &PolyTuple, form: &Poly) -> Result<bool> {
    if !is_finite_colength(tuple) {
        return Err(Error::NotFiniteColength {
            degree: tuple.top_degree() + 1,
        });
    }
    let found = dual_form_degree(form)?;
    if found != tuple.top_degree() {
        return Err(Error::DegreeMismatch {
            expected: tuple.top_degree(),
            found,
        });
    }
    for f in tuple.forms() {
        if !diamond(f, form)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

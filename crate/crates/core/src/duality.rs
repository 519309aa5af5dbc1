//! The canonical families `q_t = z1^4 + t z1^2 z2^2 + z2^4` and
//! `c_t = z1^3 + z2^3 + z3^3 + t z1 z2 z3`, on which `Φ` acts as an involution
//! of the orbit space up to a few exceptional parameters.

use num_traits::{One, Zero};

use crate::action::{act, ActionKind};
use crate::invariants::{j_cubic_family, j_quartic, TernaryCubicFamily};
use crate::matrix::MatrixQ;
use crate::milnor::{associated_form, is_nondegenerate};
use crate::poly::{Poly, Space};
use crate::rational::{int, pow, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    BinaryQuartic,
    TernaryCubic,
}

impl Family {
    pub fn nvars(self) -> usize {
        match self {
            Family::BinaryQuartic => 2,
            Family::TernaryCubic => 3,
        }
    }

    /// `-12/t` for quartics, `-18/t` for cubics.
    pub fn dual_parameter(self, t: &Rational) -> Result<Rational> {
        if t.is_zero() {
            return Err(Error::ExcludedParameter("t = 0 has no dual parameter"));
        }
        Ok(match self {
            Family::BinaryQuartic => -int(12) / t,
            Family::TernaryCubic => -int(18) / t,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyPoint {
    family: Family,
    t: Rational,
}

impl FamilyPoint {
    pub fn new(family: Family, t: Rational) -> Result<Self> {
        match family {
            Family::BinaryQuartic if &t * &t == int(4) => {
                Err(Error::ExcludedParameter("binary quartic needs t != ±2"))
            }
            Family::TernaryCubic if pow(&t, 3) == int(-27) => {
                Err(Error::ExcludedParameter("ternary cubic needs t^3 != -27"))
            }
            _ => Ok(FamilyPoint { family, t }),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }
}

/// The literal form `q_t` or `c_t`.
pub fn family_form(p: &FamilyPoint) -> Poly {
    let n = p.family.nvars();
    let var = |i| Poly::var(n, Space::Z, i);
    match p.family {
        Family::BinaryQuartic => {
            let (z1, z2) = (var(0), var(1));
            z1.pow(4) + z2.pow(4) + (&z1 * &z2).pow(2).scale(&p.t)
        }
        Family::TernaryCubic => {
            let (z1, z2, z3) = (var(0), var(1), var(2));
            z1.pow(3) + z2.pow(3) + z3.pow(3) + (&(&z1 * &z2) * &z3).scale(&p.t)
        }
    }
}

/// Reads a dual form as a source form with the same coefficients.
pub fn retag_to_source(form: &Poly) -> Poly {
    form.clone().with_space(Space::Z)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InvolutionStatus {
    /// `Φ(Φ(f))` is a nonzero multiple of `f`.
    Fixed,
    /// `Φ(f)` is itself degenerate, so `Φ` cannot be applied twice.
    ImageDegenerate,
    /// `Φ(Φ(f))` exists but is not proportional to `f`.
    NotFixed,
}

/// Applies `Φ` twice. Only meaningful when `n(d-2) = d`.
pub fn involution_check(f: &Poly) -> Result<InvolutionStatus> {
    let d = f.form_degree()?;
    if d < 2 || f.nvars() * (d - 2) != d {
        return Err(Error::Unsupported(
            "Φ maps forms of degree d to degree n(d-2); applying it twice needs n(d-2) = d",
        ));
    }
    let image = retag_to_source(&associated_form(f)?.form);
    if !is_nondegenerate(&image) {
        return Ok(InvolutionStatus::ImageDegenerate);
    }
    let back = retag_to_source(&associated_form(&image)?.form);
    Ok(if back.is_nonzero_multiple_of(f) {
        InvolutionStatus::Fixed
    } else {
        InvolutionStatus::NotFixed
    })
}

fn require_dualizable(p: &FamilyPoint) -> Result<FamilyPoint> {
    let dual = p.family.dual_parameter(&p.t)?;
    FamilyPoint::new(p.family, dual)
        .map_err(|_| Error::ExcludedParameter("dual parameter falls on an excluded value"))
}

/// Whether `Φ(C·f_t)` is proportional to `C^{-T}·f_{t'}` with `t'` the dual
/// parameter, for `C` of determinant one.
pub fn orbit_duality_check(p: &FamilyPoint, c: &MatrixQ) -> Result<bool> {
    if !c.is_square() || c.rows() != p.family.nvars() {
        return Err(Error::Dimension("matrix size must match the family"));
    }
    if !c.det()?.is_one() {
        return Err(Error::NotUnimodular);
    }
    let dual = require_dualizable(p)?;
    let moved = act(c, &family_form(p), ActionKind::OnForms)?;
    let lhs = retag_to_source(&associated_form(&moved)?.form);
    let c_inv_t = c.inverse()?.transpose();
    let rhs = act(&c_inv_t, &family_form(&dual), ActionKind::OnForms)?;
    Ok(lhs.is_nonzero_multiple_of(&rhs))
}

/// A point of the projective line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProjectiveValue {
    Finite(Rational),
    Infinity,
}

/// `ζ ↦ ζ/(ζ-1)` for quartics, `ζ ↦ 1/ζ` for cubics.
pub fn mobius(family: Family, zeta: &ProjectiveValue) -> ProjectiveValue {
    use ProjectiveValue::{Finite, Infinity};
    match (family, zeta) {
        (Family::BinaryQuartic, Infinity) => Finite(Rational::one()),
        (Family::BinaryQuartic, Finite(z)) if z.is_one() => Infinity,
        (Family::BinaryQuartic, Finite(z)) => Finite(z / (z - Rational::one())),
        (Family::TernaryCubic, Infinity) => Finite(Rational::zero()),
        (Family::TernaryCubic, Finite(z)) if z.is_zero() => Infinity,
        (Family::TernaryCubic, Finite(z)) => Finite(z.recip()),
    }
}

/// The two sides of `J(Φ(f_t)) = mobius(J(f_t))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JTransform {
    pub j_source: Rational,
    pub j_image: Rational,
    pub predicted: ProjectiveValue,
}

impl JTransform {
    pub fn holds(&self) -> bool {
        self.predicted == ProjectiveValue::Finite(self.j_image.clone())
    }
}

fn family_j(family: Family, f: &Poly) -> Result<Rational> {
    match family {
        Family::BinaryQuartic => j_quartic(f),
        Family::TernaryCubic => j_cubic_family(&TernaryCubicFamily::from_poly(f)?),
    }
}

pub fn j_transform(p: &FamilyPoint) -> Result<JTransform> {
    let exceptional = match p.family {
        Family::BinaryQuartic => p.t.is_zero() || &p.t * &p.t == int(36),
        Family::TernaryCubic => p.t.is_zero() || pow(&p.t, 3) == int(216),
    };
    if exceptional {
        return Err(Error::ExcludedParameter(
            "Φ of this family member is degenerate",
        ));
    }
    let f = family_form(p);
    let j_source = family_j(p.family, &f)?;
    let image = associated_form(&f)?.form;
    let j_image = family_j(p.family, &image)?;
    let predicted = mobius(p.family, &ProjectiveValue::Finite(j_source.clone()));
    Ok(JTransform {
        j_source,
        j_image,
        predicted,
    })
}

/// Whether the J-invariant of `Φ(f_t)` is the Möbius image of that of `f_t`.
pub fn j_transform_check(p: &FamilyPoint) -> Result<bool> {
    Ok(j_transform(p)?.holds())
}

use alloc::vec;

use num_traits::Zero;

use super::{checked_div, one, require_degree, require_nvars};
use crate::milnor::associated_form;
use crate::monomial::Monomial;
use crate::poly::{Poly, Space};
use crate::rational::{int, pow, Rational};
use crate::{Error, Result};

fn coeff3(f: &Poly, e: [u32; 3]) -> Rational {
    f.coeff(&Monomial::new(vec![e[0], e[1], e[2]]))
}

/// Degree four Aronhold invariant of a ternary cubic
/// `a w1^3 + b w2^3 + c w3^3 + 3d w1^2 w2 + 3p w1^2 w3 + 3q w1 w2^2
///  + 3r w2^2 w3 + 3s w1 w3^2 + 3t w2 w3^2 + 6u w1 w2 w3`.
pub fn aronhold_a4(f: &Poly) -> Result<Rational> {
    require_nvars(f, 3)?;
    require_degree(f, 3)?;
    let three = int(3);
    let a = coeff3(f, [3, 0, 0]);
    let b = coeff3(f, [0, 3, 0]);
    let c = coeff3(f, [0, 0, 3]);
    let d = coeff3(f, [2, 1, 0]) / &three;
    let p = coeff3(f, [2, 0, 1]) / &three;
    let q = coeff3(f, [1, 2, 0]) / &three;
    let r = coeff3(f, [0, 2, 1]) / &three;
    let s = coeff3(f, [1, 0, 2]) / &three;
    let t = coeff3(f, [0, 1, 2]) / &three;
    let u = coeff3(f, [1, 1, 1]) / int(6);

    let mut v = &a * &b * &c * &u - &b * &c * &d * &p - &a * &c * &q * &r - &a * &b * &s * &t;
    v -= &u * (&a * &r * &t + &b * &p * &s + &c * &d * &q);
    v += &a * &q * &t * &t + &a * &r * &r * &s + &b * &d * &s * &s;
    v += &b * &p * &p * &t + &c * &d * &d * &r + &c * &p * &q * &q;
    v -= pow(&u, 4);
    v += int(2) * &u * &u * (&q * &s + &d * &t + &p * &r);
    v -= &three * &u * (&d * &r * &s + &p * &q * &t);
    v -= &q * &q * &s * &s + &d * &d * &t * &t + &p * &p * &r * &r;
    v += &d * &p * &r * &t + &p * &r * &q * &s + &d * &q * &s * &t;
    Ok(v)
}

/// `a z1^3 + b z2^3 + c z3^3 + 6d z1 z2 z3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryCubicFamily {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl TernaryCubicFamily {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        TernaryCubicFamily { a, b, c, d }
    }

    /// Reads the four coefficients; any other monomial is rejected.
    pub fn from_poly(f: &Poly) -> Result<Self> {
        require_nvars(f, 3)?;
        require_degree(f, 3)?;
        let allowed = [[3, 0, 0], [0, 3, 0], [0, 0, 3], [1, 1, 1]];
        for (m, _) in f.terms() {
            if !allowed.iter().any(|e| m.exponents() == e) {
                return Err(Error::NotInFamily(
                    "ternary cubic has terms outside z1^3, z2^3, z3^3, z1*z2*z3",
                ));
            }
        }
        Ok(TernaryCubicFamily {
            a: coeff3(f, [3, 0, 0]),
            b: coeff3(f, [0, 3, 0]),
            c: coeff3(f, [0, 0, 3]),
            d: coeff3(f, [1, 1, 1]) / int(6),
        })
    }

    pub fn to_poly(&self, space: Space) -> Poly {
        Poly::from_terms(
            3,
            space,
            [
                (Monomial::new(vec![3, 0, 0]), self.a.clone()),
                (Monomial::new(vec![0, 3, 0]), self.b.clone()),
                (Monomial::new(vec![0, 0, 3]), self.c.clone()),
                (Monomial::new(vec![1, 1, 1]), int(6) * &self.d),
            ],
        )
    }

    /// `abcd - d^4`, the restriction of the Aronhold invariant.
    pub fn a4(&self) -> Rational {
        &self.a * &self.b * &self.c * &self.d - pow(&self.d, 4)
    }

    fn abc(&self) -> Rational {
        &self.a * &self.b * &self.c
    }

    fn diagonal_part(&self, space: Space) -> Poly {
        TernaryCubicFamily::new(
            &self.b * &self.c,
            &self.a * &self.c,
            &self.a * &self.b,
            Rational::zero(),
        )
        .to_poly(space)
    }
}

/// `a^2 b^2 c^2 - 20 abc d^3 - 8 d^6`.
pub fn a6_family(p: &TernaryCubicFamily) -> Rational {
    let abc = p.abc();
    &abc * &abc - int(20) * &abc * pow(&p.d, 3) - int(8) * pow(&p.d, 6)
}

/// `A6^2 + 64 A4^3`.
pub fn delta_cubic_family(p: &TernaryCubicFamily) -> Rational {
    let a6 = a6_family(p);
    &a6 * &a6 + int(64) * pow(&p.a4(), 3)
}

/// `64 A4^3 / Δ`.
pub fn j_cubic_family(p: &TernaryCubicFamily) -> Result<Rational> {
    checked_div(
        int(64) * pow(&p.a4(), 3),
        delta_cubic_family(p),
        "discriminant",
    )
}

/// `A6^2 / (64 A4^3) + 1` for a cubic in family shape, in either space.
pub fn k_cubic(f: &Poly) -> Result<Rational> {
    let p = TernaryCubicFamily::from_poly(f)?;
    let a6 = a6_family(&p);
    Ok(checked_div(&a6 * &a6, int(64) * pow(&p.a4(), 3), "A4")? + one())
}

/// The Pippian, a cubic in the dual variables.
pub fn pippian(p: &TernaryCubicFamily) -> Poly {
    let e123 = Poly::monomial(Space::E, Monomial::new(vec![1, 1, 1]), one());
    p.diagonal_part(Space::E).scale(&-p.d.clone()) - e123.scale(&(p.abc() - int(4) * pow(&p.d, 3)))
}

/// The Quippian, a cubic in the dual variables.
pub fn quippian(p: &TernaryCubicFamily) -> Poly {
    let e123 = Poly::monomial(Space::E, Monomial::new(vec![1, 1, 1]), one());
    let d3 = pow(&p.d, 3);
    let abc = p.abc();
    p.diagonal_part(Space::E).scale(&(&abc - int(10) * &d3))
        - e123.scale(&(int(6) * &p.d * &p.d * (int(5) * &abc + int(4) * &d3)))
}

/// Whether `Δ·Φ(f) = -A6·P/36 - A4·Q/27`.
pub fn verify_cubic_identity(p: &TernaryCubicFamily) -> Result<bool> {
    let delta = delta_cubic_family(p);
    if delta.is_zero() {
        return Err(Error::DegenerateFamilyMember);
    }
    let phi = associated_form(&p.to_poly(Space::Z))?.form;
    let lhs = phi.scale(&delta);
    let rhs = pippian(p).scale(&(-a6_family(p) / int(36))) - quippian(p).scale(&(p.a4() / int(27)));
    Ok((lhs - rhs).is_zero())
}

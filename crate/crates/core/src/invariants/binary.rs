use alloc::vec::Vec;

use super::{checked_div, hat, require_degree, require_nvars};
use crate::differential::hessian;
use crate::matrix::MatrixQ;
use crate::milnor::associated_form;
use crate::monomial::Monomial;
use crate::poly::{Poly, Space};
use crate::rational::{binomial, int, pow, rat, Rational};
use crate::{Error, Result};

/// A binary quartic `Σ C(4,i)·a_i·z1^(4-i)·z2^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticCoeffs {
    pub a: [Rational; 5],
}

impl QuarticCoeffs {
    pub fn from_poly(f: &Poly) -> Result<Self> {
        require_nvars(f, 2)?;
        require_degree(f, 4)?;
        let a = binomial_coeffs(f, 4);
        Ok(QuarticCoeffs {
            a: [
                a[0].clone(),
                a[1].clone(),
                a[2].clone(),
                a[3].clone(),
                a[4].clone(),
            ],
        })
    }

    pub fn to_poly(&self, space: Space) -> Poly {
        Poly::from_terms(
            2,
            space,
            self.a.iter().enumerate().map(|(i, ai)| {
                let m = Monomial::new(alloc::vec![4 - i as u32, i as u32]);
                (m, ai * Rational::from_integer(binomial(4, i)))
            }),
        )
    }
}

fn binomial_coeffs(f: &Poly, degree: usize) -> Vec<Rational> {
    (0..=degree)
        .map(|i| {
            let m = Monomial::new(alloc::vec![(degree - i) as u32, i as u32]);
            f.coeff(&m) / Rational::from_integer(binomial(degree, i))
        })
        .collect()
}

/// Hankel determinant of the binomial-basis coefficients of a binary form of
/// even degree.
pub fn catalecticant(f: &Poly) -> Result<Rational> {
    require_nvars(f, 2)?;
    let degree = f.form_degree()?;
    if degree % 2 == 1 {
        return Err(Error::OddDegree(degree));
    }
    let half = degree / 2;
    let a = binomial_coeffs(f, degree);
    MatrixQ::from_fn(half + 1, half + 1, |i, j| a[i + j].clone()).det()
}

pub fn i2_quartic(f: &Poly) -> Result<Rational> {
    let [a0, a1, a2, a3, a4] = QuarticCoeffs::from_poly(f)?.a;
    Ok(&a0 * &a4 - int(4) * &a1 * &a3 + int(3) * &a2 * &a2)
}

/// `I2^3 - 27·Cat^2`.
pub fn delta_quartic(f: &Poly) -> Result<Rational> {
    let i2 = i2_quartic(f)?;
    let cat = catalecticant(f)?;
    Ok(pow(&i2, 3) - int(27) * &cat * &cat)
}

/// `I2^3 / Δ`.
pub fn j_quartic(f: &Poly) -> Result<Rational> {
    checked_div(pow(&i2_quartic(f)?, 3), delta_quartic(f)?, "discriminant")
}

/// `I2^3 / (27·Cat^2)`.
pub fn k_quartic(f: &Poly) -> Result<Rational> {
    let cat = catalecticant(f)?;
    checked_div(
        pow(&i2_quartic(f)?, 3),
        int(27) * &cat * &cat,
        "catalecticant",
    )
}

/// Whether `hat(Δ·Φ(f)) = I2·Hess(f)/3456 − Cat·f/16` for a binary quartic.
pub fn verify_quartic_identity(f: &Poly) -> Result<bool> {
    if f.space() != Space::Z {
        return Err(Error::SpaceMismatch);
    }
    require_nvars(f, 2)?;
    require_degree(f, 4)?;
    let phi = associated_form(f)?.form;
    let delta = delta_quartic(f)?;
    let lhs = hat(&phi.scale(&delta))?;
    let rhs = hessian(f).scale(&(i2_quartic(f)? * rat(1, 3456)))
        - f.scale(&(catalecticant(f)? * rat(1, 16)));
    Ok((lhs - rhs).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use num_traits::Zero;

    fn z(text: &str) -> Poly {
        parse_poly(text, 2, Space::Z).unwrap()
    }

    fn q(t: Rational) -> Poly {
        z("z1^4 + z2^4") + z("z1^2*z2^2").scale(&t)
    }

    fn cat_q_oracle(t: &Rational) -> Rational {
        t / int(6) - pow(t, 3) / int(216)
    }

    #[test]
    fn coefficient_round_trip() {
        let f = z("3*z1^4 - 2*z1^3*z2 + 5*z1*z2^3 - z2^4");
        let c = QuarticCoeffs::from_poly(&f).unwrap();
        assert_eq!(c.a[1], rat(-1, 2));
        assert_eq!(c.to_poly(Space::Z), f);
    }

    #[test]
    fn catalecticant_of_family() {
        for t in [int(0), int(1), int(-3), rat(1, 2), rat(7, 5)] {
            assert_eq!(catalecticant(&q(t.clone())).unwrap(), cat_q_oracle(&t));
        }
        assert_eq!(catalecticant(&z("z1^2*z2^2")).unwrap(), rat(-1, 216));
    }

    #[test]
    fn catalecticant_of_quadric_is_discriminant_like() {
        // a0 a2 - a1^2 for a z1^2 + 2b z1 z2 + c z2^2
        assert_eq!(
            catalecticant(&z("2*z1^2 + 6*z1*z2 + 5*z2^2")).unwrap(),
            int(1)
        );
        assert_eq!(catalecticant(&z("z1^3")), Err(Error::OddDegree(3)));
    }

    #[test]
    fn catalecticant_of_associated_forms() {
        for t in [0, 1, 3, 5] {
            let phi = associated_form(&q(int(t))).unwrap().form;
            assert!(!catalecticant(&phi).unwrap().is_zero(), "t = {t}");
        }
    }

    #[test]
    fn i2_restricts_to_family_formula() {
        // a z1^4 + 6b z1^2 z2^2 + c z2^4 gives ac + 3b^2
        let (a, b, c) = (int(2), rat(-1, 3), int(5));
        let f = z("z1^4").scale(&a) + z("6*z1^2*z2^2").scale(&b) + z("z2^4").scale(&c);
        assert_eq!(i2_quartic(&f).unwrap(), &a * &c + int(3) * &b * &b);
    }

    #[test]
    fn family_invariants() {
        for t in [int(0), int(1), int(3), rat(1, 2), rat(-5, 3)] {
            let f = q(t.clone());
            let t2 = &t * &t;
            assert_eq!(i2_quartic(&f).unwrap(), int(1) + &t2 / int(12));
            let delta = pow(&(&t2 - int(4)), 2) / int(16);
            assert_eq!(delta_quartic(&f).unwrap(), delta);
            let j = pow(&(&t2 + int(12)), 3) / (int(108) * pow(&(&t2 - int(4)), 2));
            assert_eq!(j_quartic(&f).unwrap(), j);
        }
        for t in [0, 6, -6] {
            assert_eq!(j_quartic(&q(int(t))).unwrap(), int(1));
        }
        assert_eq!(
            j_quartic(&q(int(2))),
            Err(Error::DivisionByZero("discriminant"))
        );
        assert_eq!(
            k_quartic(&q(int(0))),
            Err(Error::DivisionByZero("catalecticant"))
        );
    }

    #[test]
    fn k_of_associated_form_is_j() {
        for t in [int(1), int(3), rat(1, 2), int(-7)] {
            let f = q(t);
            let phi = associated_form(&f).unwrap().form;
            assert_eq!(k_quartic(&phi).unwrap(), j_quartic(&f).unwrap());
        }
    }

    #[test]
    fn quartic_identity_on_family() {
        assert!(verify_quartic_identity(&q(int(1))).unwrap());
        assert!(verify_quartic_identity(&q(rat(1, 2))).unwrap());
        assert!(verify_quartic_identity(&z("z1^4 - 3*z1^3*z2 + 2*z1*z2^3 + 5*z2^4")).unwrap());
    }

    #[test]
    fn quartic_identity_detects_wrong_form() {
        assert!(verify_quartic_identity(&q(int(2))).is_err());
    }
}

use alloc::vec;

use num_traits::Zero;

use super::{hat, require_degree, require_nvars};
use crate::milnor::associated_form;
use crate::monomial::Monomial;
use crate::poly::{Poly, Space};
use crate::rational::{int, pow, rat, Rational};
use crate::{Error, Result};

/// `a X^5 + b Y^5 + c Z^5` with `X + Y + Z = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterQuintic {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    x: Poly,
    y: Poly,
}

fn linear_coeffs(l: &Poly) -> [Rational; 2] {
    [
        l.coeff(&Monomial::new(vec![1, 0])),
        l.coeff(&Monomial::new(vec![0, 1])),
    ]
}

impl SylvesterQuintic {
    pub fn new(a: Rational, b: Rational, c: Rational, x: Poly, y: Poly) -> Result<Self> {
        for l in [&x, &y] {
            if l.space() != Space::Z {
                return Err(Error::SpaceMismatch);
            }
            require_nvars(l, 2)?;
            if l.is_zero() {
                return Err(Error::DegenerateSylvesterFrame);
            }
            require_degree(l, 1)?;
        }
        let s = SylvesterQuintic { a, b, c, x, y };
        if s.frame_det().is_zero() {
            return Err(Error::DegenerateSylvesterFrame);
        }
        Ok(s)
    }

    pub fn x(&self) -> &Poly {
        &self.x
    }

    pub fn y(&self) -> &Poly {
        &self.y
    }

    pub fn z(&self) -> Poly {
        -(&self.x + &self.y)
    }

    /// Determinant of the coefficient matrix of `(X, Y)`.
    pub fn frame_det(&self) -> Rational {
        let [x1, x2] = linear_coeffs(&self.x);
        let [y1, y2] = linear_coeffs(&self.y);
        x1 * y2 - x2 * y1
    }

    pub fn to_poly(&self) -> Poly {
        self.x.pow(5).scale(&self.a) + self.y.pow(5).scale(&self.b) + self.z().pow(5).scale(&self.c)
    }
}

/// `C_{i,j}`: degree `i`, order `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuinticCovariants {
    pub c40: Rational,
    pub c80: Rational,
    pub c51: Poly,
    pub c22: Poly,
    pub c33: Poly,
    pub c44: Poly,
    pub c15: Poly,
    pub c26: Poly,
}

impl QuinticCovariants {
    /// `C40^2 - 128 C80`.
    pub fn delta(&self) -> Rational {
        &self.c40 * &self.c40 - int(128) * &self.c80
    }
}

/// The Sylvester-form expressions, each multiplied by `δ^((5i-j)/2)` where `δ`
/// is the frame determinant, so that they are covariants for any frame.
pub fn quintic_covariants(s: &SylvesterQuintic) -> QuinticCovariants {
    let (a, b, c) = (&s.a, &s.b, &s.c);
    let (x, y, z) = (&s.x, &s.y, &s.z());
    let abc = a * b * c;
    let delta = s.frame_det();
    let w = |k: u32| pow(&delta, k);

    let c40 = a * a * b * b + b * b * c * c + a * a * c * c - int(2) * &abc * (a + b + c);
    let c80 = &abc * &abc * (a * b + a * c + b * c);
    let c51 = (x.scale(&(b * c)) + y.scale(&(a * c)) + z.scale(&(a * b))).scale(&abc);
    let c22 = (x * y).scale(&(a * b)) + (x * z).scale(&(a * c)) + (y * z).scale(&(b * c));
    let c33 = (&(x * y) * z).scale(&abc);
    let c44 = (x.pow(4).scale(a) + y.pow(4).scale(b) + z.pow(4).scale(c)).scale(&abc);
    let c15 = s.to_poly();
    let (x3, y3, z3) = (x.pow(3), y.pow(3), z.pow(3));
    let c26 =
        (&x3 * &y3).scale(&(a * b)) + (&y3 * &z3).scale(&(b * c)) + (&x3 * &z3).scale(&(a * c));

    QuinticCovariants {
        c40: c40 * w(10),
        c80: c80 * w(20),
        c51: c51.scale(&w(12)),
        c22: c22.scale(&w(4)),
        c33: c33.scale(&w(6)),
        c44: c44.scale(&w(8)),
        c15,
        c26: c26.scale(&w(2)),
    }
}

/// `C40 C26 - C15 C51 + 9 C33^2 - C22^3 + 2 C22 C44 = 0`.
pub fn covariant_relation_holds(k: &QuinticCovariants) -> bool {
    let lhs = k.c26.scale(&k.c40) - &k.c15 * &k.c51 + (&k.c33 * &k.c33).scale(&int(9))
        - k.c22.pow(3)
        + (&k.c22 * &k.c44).scale(&int(2));
    lhs.is_zero()
}

/// Whether `hat(Δ·Φ(f)) = C40 C26/20 - 3 C15 C51/50 + 27 C33^2/10 - C22^3/10`.
pub fn verify_quintic_identity(s: &SylvesterQuintic) -> Result<bool> {
    let k = quintic_covariants(s);
    let delta = k.delta();
    if delta.is_zero() {
        return Err(Error::DegenerateQuintic);
    }
    let phi = associated_form(&k.c15)?.form;
    let lhs = hat(&phi.scale(&delta))?;
    let rhs = k.c26.scale(&(&k.c40 * rat(1, 20))) - (&k.c15 * &k.c51).scale(&rat(3, 50))
        + (&k.c33 * &k.c33).scale(&rat(27, 10))
        - k.c22.pow(3).scale(&rat(1, 10));
    Ok((lhs - rhs).is_zero())
}

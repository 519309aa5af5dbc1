//! Differential operations: gradient, Hessian, Jacobian and the polar pairing.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::milnor::PolyTuple;
use crate::monomial::Monomial;
use crate::poly::{Poly, Space};
use crate::rational::Rational;
use crate::{Error, Result};

/// The tuple of first partials `(f_{z_1}, ..., f_{z_n})`.
///
/// `f` must be a form of degree at least 2 so the partials have positive degree.
pub fn gradient(f: &Poly) -> Result<PolyTuple> {
    let d = f.form_degree()?;
    if d < 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            found: d,
        });
    }
    PolyTuple::new((0..f.nvars()).map(|i| f.derivative(i)).collect())
}

/// Determinant of the matrix of second partials.
pub fn hessian(f: &Poly) -> Poly {
    let n = f.nvars();
    let first: Vec<Poly> = (0..n).map(|i| f.derivative(i)).collect();
    let entries: Vec<Vec<Poly>> = first
        .iter()
        .map(|fi| (0..n).map(|j| fi.derivative(j)).collect())
        .collect();
    poly_det(&entries, n, f.space())
}

/// Determinant of `(d f_i / d z_j)`.
pub fn jacobian(tuple: &PolyTuple) -> Poly {
    let n = tuple.nvars();
    let entries: Vec<Vec<Poly>> = tuple
        .forms()
        .iter()
        .map(|fi| (0..n).map(|j| fi.derivative(j)).collect())
        .collect();
    poly_det(&entries, n, Space::Z)
}

/// Cofactor expansion along the first row; `n` stays below five in practice.
fn poly_det(entries: &[Vec<Poly>], nvars: usize, space: Space) -> Poly {
    let cols: Vec<usize> = (0..entries.len()).collect();
    det_rec(entries, 0, &cols, nvars, space)
}

fn det_rec(entries: &[Vec<Poly>], row: usize, cols: &[usize], nvars: usize, space: Space) -> Poly {
    if cols.is_empty() {
        return Poly::constant(nvars, space, Rational::one());
    }
    let mut acc = Poly::zero(nvars, space);
    for (k, &c) in cols.iter().enumerate() {
        let entry = &entries[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det_rec(entries, row + 1, &rest, nvars, space);
        let term = entry * &minor;
        acc = if k % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// `g(d/de_1, ..., d/de_n) F`: a `Z`-space polynomial acting on an `E`-space one
/// by constant-coefficient differentiation.
pub fn diamond(g: &Poly, form: &Poly) -> Result<Poly> {
    if g.space() != Space::Z || form.space() != Space::E {
        return Err(Error::SpaceMismatch);
    }
    if g.nvars() != form.nvars() {
        return Err(Error::NvarsMismatch {
            expected: form.nvars(),
            found: g.nvars(),
        });
    }
    if let (Some(j), Some(k)) = (g.homogeneous_degree(), form.homogeneous_degree()) {
        if j > k {
            return Err(Error::DegreeMismatch {
                expected: k,
                found: j,
            });
        }
    }
    let mut out = Poly::zero(form.nvars(), Space::E);
    for (a, ca) in g.terms() {
        for (b, cb) in form.terms() {
            if let Some((m, factor)) = differentiate_monomial(a, b) {
                out.add_term(m, ca * cb * Rational::from_integer(factor));
            }
        }
    }
    Ok(out)
}

/// `d^a e^b = prod b_i! / (b_i - a_i)! * e^{b - a}`, or `None` when it vanishes.
pub(crate) fn differentiate_monomial(a: &Monomial, b: &Monomial) -> Option<(Monomial, BigInt)> {
    let rest = b.div(a)?;
    let mut factor = BigInt::one();
    for (&ai, &bi) in a.exponents().iter().zip(b.exponents()) {
        for k in 0..ai {
            factor *= BigInt::from(bi - k);
        }
    }
    debug_assert!(!factor.is_zero());
    Some((rest, factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rational::int;

    fn z(text: &str, n: usize) -> Poly {
        parse_poly(text, n, Space::Z).unwrap()
    }

    fn e(text: &str, n: usize) -> Poly {
        parse_poly(text, n, Space::E).unwrap()
    }

    #[test]
    fn diamond_examples() {
        assert_eq!(diamond(&z("z1", 2), &e("e1^2", 2)).unwrap(), e("2*e1", 2));
        assert_eq!(diamond(&z("z1*z2", 2), &e("e1*e2", 2)).unwrap(), e("1", 2));
        assert!(diamond(&z("z1^3", 2), &e("e2^3", 2)).unwrap().is_zero());
        assert_eq!(
            diamond(&z("z1^3", 2), &e("e1^2", 2)),
            Err(Error::DegreeMismatch {
                expected: 2,
                found: 3
            })
        );
        assert_eq!(diamond(&e("e1", 2), &e("e1", 2)), Err(Error::SpaceMismatch));
    }

    #[test]
    fn diamond_gram_matrix_is_factorial_diagonal() {
        let basis = crate::monomial::monomial_basis(3, 3);
        for a in &basis {
            for b in &basis {
                let g = Poly::monomial(Space::Z, a.clone(), int(1));
                let f = Poly::monomial(Space::E, b.clone(), int(1));
                let v = diamond(&g, &f).unwrap();
                if a == b {
                    let expect: i64 = a
                        .exponents()
                        .iter()
                        .map(|&k| (1..=k as i64).product::<i64>())
                        .product();
                    assert_eq!(v, Poly::constant(3, Space::E, int(expect)));
                } else {
                    assert!(v.is_zero());
                }
            }
        }
    }

    #[test]
    fn hessian_of_diagonal_form() {
        // a1 z1^d + a2 z2^d -> a1 a2 (d(d-1))^2 (z1 z2)^{d-2}
        let h = hessian(&z("3*z1^5 - 2*z2^5", 2));
        assert_eq!(h, z("-2400*z1^3*z2^3", 2));
    }

    #[test]
    fn hessian_of_quartic_family() {
        // f = z1^4 + t z1^2 z2^2 + z2^4 with t = 3: 24t(z1^4 + z2^4) + (144 - 12t^2) z1^2 z2^2
        let h = hessian(&z("z1^4 + 3*z1^2*z2^2 + z2^4", 2));
        assert_eq!(h, z("72*z1^4 + 36*z1^2*z2^2 + 72*z2^4", 2));
        let h = hessian(&z("z1^4 + 1/2*z1^2*z2^2 + z2^4", 2));
        assert_eq!(h, z("12*z1^4 + 141*z1^2*z2^2 + 12*z2^4", 2));
    }

    #[test]
    fn hessian_of_triple_product() {
        assert_eq!(hessian(&z("z1*z2*z3", 3)), z("2*z1*z2*z3", 3));
    }

    #[test]
    fn jacobian_examples() {
        let f = z("z1^4 - z1*z2^3 + 2*z2^4", 2);
        assert_eq!(jacobian(&gradient(&f).unwrap()), hessian(&f));

        let t = PolyTuple::new(alloc::vec![z("z1^3", 2), z("z2^3", 2)]).unwrap();
        assert_eq!(jacobian(&t), z("9*z1^2*z2^2", 2));

        let swap = PolyTuple::new(alloc::vec![z("z2", 2), z("z1", 2)]).unwrap();
        assert_eq!(jacobian(&swap), Poly::constant(2, Space::Z, int(-1)));
    }

    #[test]
    fn gradient_examples() {
        let g = gradient(&z("z1^4 + 1/3*z1^2*z2^2 + z2^4", 2)).unwrap();
        assert_eq!(g.forms()[0], z("4*z1^3 + 2/3*z1*z2^2", 2));
        assert_eq!(g.forms()[1], z("2/3*z1^2*z2 + 4*z2^3", 2));
        assert!(gradient(&z("z1 + 2*z2", 2)).is_err());
    }
}

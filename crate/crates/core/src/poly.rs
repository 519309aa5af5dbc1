//! Sparse multivariate polynomials with exact rational coefficients.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::monomial::{GradedBasis, Monomial};
use crate::rational::Rational;
use crate::{Error, Result};

/// Which copy of the variables a polynomial is written in.
///
/// `Z` is the source space `z_1..z_n`, `E` the dual space `e_1..e_n` on which
/// associated forms live.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    Z,
    E,
}

impl Space {
    pub fn letter(self) -> char {
        match self {
            Space::Z => 'z',
            Space::E => 'e',
        }
    }

    pub fn dual(self) -> Space {
        match self {
            Space::Z => Space::E,
            Space::E => Space::Z,
        }
    }
}

/// A polynomial in `nvars` variables of one [`Space`].
///
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    space: Space,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize, space: Space) -> Self {
        assert!(nvars >= 1, "polynomials need at least one variable");
        Poly {
            nvars,
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, space: Space, c: Rational) -> Self {
        Self::monomial(space, Monomial::one(nvars), c)
    }

    /// The variable with zero-based index `index`.
    pub fn var(nvars: usize, space: Space, index: usize) -> Self {
        Self::monomial(space, Monomial::var(nvars, index), Rational::one())
    }

    pub fn monomial(space: Space, m: Monomial, c: Rational) -> Self {
        let mut p = Poly::zero(m.nvars(), space);
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I>(nvars: usize, space: Space, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Poly::zero(nvars, space);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Build from coordinates in a graded monomial basis.
    pub fn from_coords(basis: &GradedBasis, coords: &[Rational], space: Space) -> Self {
        assert_eq!(basis.len(), coords.len());
        let nvars = basis.monomials().first().map_or(1, Monomial::nvars);
        Poly::from_terms(
            nvars,
            space,
            basis
                .monomials()
                .iter()
                .cloned()
                .zip(coords.iter().cloned()),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.nvars(), self.nvars, "monomial has wrong variable count");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// The common degree of all terms, if the polynomial is a nonzero form.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Degree of a nonzero form, or [`Error::NotHomogeneous`].
    pub fn form_degree(&self) -> Result<usize> {
        self.homogeneous_degree().ok_or(Error::NotHomogeneous)
    }

    /// The same coefficients, read in the other variable space.
    pub fn with_space(mut self, space: Space) -> Self {
        self.space = space;
        self
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars, self.space);
        }
        Poly {
            nvars: self.nvars,
            space: self.space,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::constant(self.nvars, self.space, Rational::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to the variable `index`.
    pub fn derivative(&self, index: usize) -> Poly {
        let mut out = Poly::zero(self.nvars, self.space);
        for (m, c) in &self.terms {
            let e = m.exponents()[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] -= 1;
            out.add_term(Monomial::new(exps), c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Replace variable `i` by `images[i]` and expand.
    ///
    /// The result lives in the variable count and space of the images.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let (nvars, space) = images
            .first()
            .map(|p| (p.nvars, p.space))
            .expect("at least one variable");
        assert!(images.iter().all(|p| p.nvars == nvars && p.space == space));

        // powers[i][k] = images[i]^k, grown on demand
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| alloc::vec![Poly::constant(nvars, space, Rational::one()), p.clone()])
            .collect();
        let mut out = Poly::zero(nvars, space);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(nvars, space, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    term = &term * &powers[i][e];
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Coordinates in a graded basis. Terms outside the basis are an error.
    pub fn coords(&self, basis: &GradedBasis) -> Result<Vec<Rational>> {
        let mut v = alloc::vec![Rational::zero(); basis.len()];
        for (m, c) in &self.terms {
            let i = basis.position(m).ok_or(Error::DegreeMismatch {
                expected: basis.monomials().first().map_or(0, Monomial::degree),
                found: m.degree(),
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    /// Returns `lambda` with `self == lambda * other`, if one exists.
    ///
    /// Two zero polynomials are proportional with `lambda = 0`; a nonzero
    /// polynomial is never proportional to zero.
    pub fn ratio_to(&self, other: &Poly) -> Option<Rational> {
        if self.nvars != other.nvars {
            return None;
        }
        let Some((m, c)) = other.leading_term() else {
            return self.is_zero().then(Rational::zero);
        };
        let lambda = self.coeff(m) / c;
        (other.scale(&lambda).terms == self.terms).then_some(lambda)
    }

    /// True when both polynomials span the same line (both nonzero).
    pub fn is_nonzero_multiple_of(&self, other: &Poly) -> bool {
        matches!(self.ratio_to(other), Some(l) if !l.is_zero())
    }

    fn check_compatible(&self, other: &Poly) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        assert_eq!(self.space, other.space, "variable space mismatch");
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        self.check_compatible(rhs);
        let mut out = Poly::zero(self.nvars, self.space);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

//! Seeded random inputs.
//!
//! Every draw comes from one ChaCha8 stream, so a seed fixes the whole sequence
//! of cases. Coefficients of random forms are uniform on `{-5, ..., 5} \ {0}`;
//! degenerate draws are rejected and counted.

use assoform_core::duality::Family;
use assoform_core::invariants::{
    delta_cubic_family, quintic_covariants, SylvesterQuintic, TernaryCubicFamily,
};
use assoform_core::milnor::{is_finite_colength, is_nondegenerate, PolyTuple};
use assoform_core::monomial::monomial_basis;
use assoform_core::rational::{int, pow, rat};
use assoform_core::{MatrixQ, Poly, Rational, Space};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Sampler {
    rng: ChaCha8Rng,
    rejected: usize,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            rejected: 0,
        }
    }

    /// Number of draws thrown away as degenerate so far.
    pub fn rejected(&self) -> usize {
        self.rejected
    }

    pub fn coeff(&mut self) -> i64 {
        let v = self.rng.gen_range(1..=5);
        if self.rng.gen_bool(0.5) {
            v
        } else {
            -v
        }
    }

    /// A nonzero rational with numerator in `±{1..5}` and denominator in `1..=4`.
    pub fn rational(&mut self) -> Rational {
        let n = self.coeff();
        rat(n, self.rng.gen_range(1..=4))
    }

    /// Every monomial of degree `d` with a nonzero coefficient.
    pub fn form(&mut self, n: usize, d: usize, space: Space) -> Poly {
        let basis = monomial_basis(n, d);
        let coeffs: Vec<Rational> = basis.iter().map(|_| int(self.coeff())).collect();
        Poly::from_terms(n, space, basis.into_iter().zip(coeffs))
    }

    /// Like [`Sampler::form`] but each coefficient is zero with probability
    /// one half, which reaches degenerate and boundary cases.
    pub fn sparse_form(&mut self, n: usize, d: usize, space: Space) -> Poly {
        let basis = monomial_basis(n, d);
        let coeffs: Vec<Rational> = basis
            .iter()
            .map(|_| {
                if self.rng.gen_bool(0.5) {
                    int(0)
                } else {
                    int(self.coeff())
                }
            })
            .collect();
        Poly::from_terms(n, space, basis.into_iter().zip(coeffs))
    }

    pub fn nondegenerate_form(&mut self, n: usize, d: usize) -> Poly {
        loop {
            let f = self.form(n, d, Space::Z);
            if is_nondegenerate(&f) {
                return f;
            }
            self.rejected += 1;
        }
    }

    /// `n` forms of degree `d - 1` without common zeros.
    pub fn finite_colength_tuple(&mut self, n: usize, d: usize) -> PolyTuple {
        loop {
            let forms = (0..n).map(|_| self.form(n, d - 1, Space::Z)).collect();
            if let Ok(t) = PolyTuple::new(forms) {
                if is_finite_colength(&t) {
                    return t;
                }
            }
            self.rejected += 1;
        }
    }

    /// Entries are small rationals; singular draws are rejected.
    pub fn invertible_matrix(&mut self, n: usize) -> MatrixQ {
        loop {
            let m = MatrixQ::from_fn(n, n, |_, _| {
                let v = self.rng.gen_range(-3i64..=3);
                rat(v, self.rng.gen_range(1..=2))
            });
            if !m.det().expect("square").is_zero() {
                return m;
            }
            self.rejected += 1;
        }
    }

    /// A product of `2n` random elementary matrices, so the determinant is one.
    pub fn unimodular_matrix(&mut self, n: usize) -> MatrixQ {
        let mut m = MatrixQ::identity(n);
        if n < 2 {
            return m;
        }
        for _ in 0..2 * n {
            let i = self.rng.gen_range(0..n);
            let mut j = self.rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let c = self.rational();
            let mut e = MatrixQ::identity(n);
            e.set(i, j, c);
            m = m.mul(&e).expect("same size");
        }
        m
    }

    /// A parameter avoiding `t = 0`, the excluded values and the exceptional
    /// values where `Φ` of the family member degenerates.
    pub fn parameter(&mut self, family: Family) -> Rational {
        loop {
            let t = rat(self.rng.gen_range(-24i64..=24), self.rng.gen_range(1..=4));
            let bad = match family {
                Family::BinaryQuartic => {
                    let t2 = &t * &t;
                    t.is_zero() || t2 == int(4) || t2 == int(36)
                }
                Family::TernaryCubic => {
                    let t3 = pow(&t, 3);
                    t.is_zero() || t3 == int(-27) || t3 == int(216)
                }
            };
            if !bad {
                return t;
            }
            self.rejected += 1;
        }
    }

    /// `a z1^3 + b z2^3 + c z3^3 + k z1 z2 z3` with nonzero discriminant.
    pub fn family_member(&mut self) -> TernaryCubicFamily {
        loop {
            let [a, b, c, k] = [(); 4].map(|_| int(self.coeff()));
            let p = TernaryCubicFamily::new(a, b, c, k / int(6));
            if !delta_cubic_family(&p).is_zero() {
                return p;
            }
            self.rejected += 1;
        }
    }

    /// Random Sylvester data with an independent frame and nonzero `Δ`.
    pub fn sylvester_quintic(&mut self) -> SylvesterQuintic {
        loop {
            let [a, b, c] = [(); 3].map(|_| int(self.coeff()));
            let mut linear = || {
                let z = |i| Poly::var(2, Space::Z, i);
                z(0).scale(&int(self.rng.gen_range(-3..=3)))
                    + z(1).scale(&int(self.rng.gen_range(-3..=3)))
            };
            let (x, y) = (linear(), linear());
            if let Ok(s) = SylvesterQuintic::new(a, b, c, x, y) {
                if !quintic_covariants(&s).delta().is_zero() {
                    return s;
                }
            }
            self.rejected += 1;
        }
    }
}

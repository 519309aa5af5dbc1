//! Graded linear algebra on ideals generated by `n` forms of equal degree.
//!
//! For a tuple `f = (f_1, ..., f_n)` of forms of degree `d - 1` in `n` variables
//! the quotient `C[z]/(f)` is finite dimensional exactly when the ideal fills the
//! whole degree `n(d-2) + 1` piece. In that case the degree `n(d-2)` piece of the
//! ideal, `W`, is a hyperplane not containing the Jacobian, and the socle
//! functional is the covector with kernel `W` taking the value 1 on the Jacobian.
//! Its values on monomials are the coefficients `mu`, and the associated form is
//! `sum_i (n(d-2))! / i! * mu_i * e^i`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::differential::{gradient, hessian, jacobian};
use crate::matrix::MatrixQ;
use crate::monomial::{basis_len, monomial_basis, GradedBasis, Monomial};
use crate::poly::{Poly, Space};
use crate::rational::{multinomial, Rational};
use crate::{Error, Result};

/// `n` forms of a common degree in `n` source variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyTuple {
    forms: Vec<Poly>,
    form_degree: usize,
}

impl PolyTuple {
    /// Zero entries are allowed; at least one entry must be a nonzero form and
    /// all nonzero entries must share its degree, which must be positive.
    pub fn new(forms: Vec<Poly>) -> Result<Self> {
        let n = forms.len();
        if n == 0 {
            return Err(Error::Unsupported("empty tuple"));
        }
        let mut degree = None;
        for f in &forms {
            if f.nvars() != n {
                return Err(Error::NvarsMismatch {
                    expected: n,
                    found: f.nvars(),
                });
            }
            if f.space() != Space::Z {
                return Err(Error::SpaceMismatch);
            }
            if f.is_zero() {
                continue;
            }
            let d = f.form_degree()?;
            match degree {
                None => degree = Some(d),
                Some(expected) if expected != d => {
                    return Err(Error::DegreeMismatch { expected, found: d })
                }
                _ => {}
            }
        }
        let form_degree = degree.ok_or(Error::Unsupported("all forms are zero"))?;
        if form_degree == 0 {
            return Err(Error::Unsupported("tuple of constants"));
        }
        Ok(PolyTuple { forms, form_degree })
    }

    pub fn forms(&self) -> &[Poly] {
        &self.forms
    }

    pub fn nvars(&self) -> usize {
        self.forms.len()
    }

    /// Common degree `d - 1` of the forms.
    pub fn form_degree(&self) -> usize {
        self.form_degree
    }

    /// Socle degree `n(d - 2)` of the quotient algebra.
    pub fn top_degree(&self) -> usize {
        self.nvars() * (self.form_degree - 1)
    }
}

/// A covector on the degree `n(d-2)` piece, in the graded-lex monomial basis.
#[derive(Debug, Clone)]
pub struct SocleFunctional {
    basis: GradedBasis,
    covector: Vec<Rational>,
    normalizer: Poly,
}

impl SocleFunctional {
    pub fn nvars(&self) -> usize {
        self.normalizer.nvars()
    }

    pub fn top_degree(&self) -> usize {
        self.basis.monomials().first().map_or(0, Monomial::degree)
    }

    pub fn basis(&self) -> &[Monomial] {
        self.basis.monomials()
    }

    pub fn covector(&self) -> &[Rational] {
        &self.covector
    }

    /// The Jacobian (or Hessian) the functional is normalized against.
    pub fn normalizer(&self) -> &Poly {
        &self.normalizer
    }

    /// Value on a form of the top degree.
    pub fn apply(&self, g: &Poly) -> Result<Rational> {
        let coords = g.coords(&self.basis)?;
        Ok(dot(&coords, &self.covector))
    }
}

/// Associated form together with its `mu` coefficients (nonzero ones only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedForm {
    pub form: Poly,
    pub mu: BTreeMap<Monomial, Rational>,
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// The products `m * f_j` spanning the degree-`k` piece of the ideal.
pub fn ideal_generators(tuple: &PolyTuple, k: usize) -> Vec<Poly> {
    let fd = tuple.form_degree();
    if k < fd {
        return Vec::new();
    }
    let n = tuple.nvars();
    let multipliers = monomial_basis(n, k - fd);
    let mut out = Vec::with_capacity(multipliers.len() * n);
    for f in tuple.forms().iter().filter(|f| !f.is_zero()) {
        for m in &multipliers {
            out.push(&Poly::monomial(Space::Z, m.clone(), Rational::one()) * f);
        }
    }
    out
}

fn coord_matrix(polys: &[Poly], basis: &GradedBasis) -> MatrixQ {
    let rows = polys
        .iter()
        .map(|p| p.coords(basis).expect("generator has the basis degree"))
        .collect();
    MatrixQ::from_rows(basis.len(), rows).expect("uniform row length")
}

/// Dimension of the degree-`k` piece of the ideal `(f_1, ..., f_n)`.
pub fn ideal_graded_dim(tuple: &PolyTuple, k: usize) -> usize {
    let gens = ideal_generators(tuple, k);
    if gens.is_empty() {
        return 0;
    }
    coord_matrix(&gens, &GradedBasis::new(tuple.nvars(), k)).rank()
}

/// True when the tuple is a homogeneous system of parameters.
pub fn is_finite_colength(tuple: &PolyTuple) -> bool {
    let k = tuple.top_degree() + 1;
    ideal_graded_dim(tuple, k) == basis_len(tuple.nvars(), k)
}

/// For a form of degree at least 2: `None` if nondegenerate, otherwise the degree
/// in which the ideal of partials fails to be full.
pub fn nondegeneracy_defect(f: &Poly) -> Result<Option<usize>> {
    let grad = gradient(f)?;
    Ok((!is_finite_colength(&grad)).then(|| grad.top_degree() + 1))
}

/// Whether the hypersurface `f = 0` has an isolated singularity at the origin.
///
/// Inputs that are not forms of degree at least 2 count as degenerate.
pub fn is_nondegenerate(f: &Poly) -> bool {
    matches!(nondegeneracy_defect(f), Ok(None))
}

fn solve_socle(tuple: &PolyTuple, normalizer: Poly) -> Result<SocleFunctional> {
    let top = tuple.top_degree();
    let basis = GradedBasis::new(tuple.nvars(), top);
    let gens = ideal_generators(tuple, top);
    let kernel = coord_matrix(&gens, &basis).nullspace();
    if kernel.len() != 1 {
        return Err(Error::DegenerateSocle {
            kernel_dim: kernel.len(),
        });
    }
    let mut covector = kernel.into_iter().next().expect("one kernel vector");
    let value = dot(&normalizer.coords(&basis)?, &covector);
    if value.is_zero() {
        // normalizer lies in W
        return Err(Error::DegenerateSocle { kernel_dim: 1 });
    }
    for c in &mut covector {
        *c /= &value;
    }
    Ok(SocleFunctional {
        basis,
        covector,
        normalizer,
    })
}

/// The functional vanishing on `W` and equal to 1 on `Jac(f)`.
pub fn socle_functional(tuple: &PolyTuple) -> Result<SocleFunctional> {
    if !is_finite_colength(tuple) {
        return Err(Error::NotFiniteColength {
            degree: tuple.top_degree() + 1,
        });
    }
    solve_socle(tuple, jacobian(tuple))
}

fn hessian_functional(f: &Poly) -> Result<SocleFunctional> {
    let grad = gradient(f)?;
    if !is_finite_colength(&grad) {
        return Err(Error::Degenerate {
            degree: grad.top_degree() + 1,
        });
    }
    solve_socle(&grad, hessian(f))
}

fn mu_from(functional: &SocleFunctional) -> BTreeMap<Monomial, Rational> {
    functional
        .basis()
        .iter()
        .zip(functional.covector())
        .filter(|(_, v)| !v.is_zero())
        .map(|(m, v)| (m.clone(), v.clone()))
        .collect()
}

fn form_from(functional: &SocleFunctional) -> AssociatedForm {
    let mu = mu_from(functional);
    let form = Poly::from_terms(
        functional.nvars(),
        Space::E,
        mu.iter().map(|(m, v)| {
            (
                m.clone(),
                v * Rational::from_integer(multinomial(m.exponents())),
            )
        }),
    );
    AssociatedForm { form, mu }
}

/// `mu_i = omega(z^i)` for every top-degree monomial, nonzero values only.
pub fn mu_coefficients(tuple: &PolyTuple) -> Result<BTreeMap<Monomial, Rational>> {
    Ok(mu_from(&socle_functional(tuple)?))
}

/// Associated form of a finite-colength tuple.
pub fn associated_form_tuple(tuple: &PolyTuple) -> Result<AssociatedForm> {
    Ok(form_from(&socle_functional(tuple)?))
}

/// Associated form of a nondegenerate form, normalized against its Hessian.
pub fn associated_form(f: &Poly) -> Result<AssociatedForm> {
    if f.space() != Space::Z {
        return Err(Error::SpaceMismatch);
    }
    Ok(form_from(&hessian_functional(f)?))
}

/// Dimensions of the graded pieces of `C[z]/(f)` in degrees `0..=n(d-2)`.
pub fn hilbert_function(tuple: &PolyTuple) -> Result<Vec<usize>> {
    if !is_finite_colength(tuple) {
        return Err(Error::NotFiniteColength {
            degree: tuple.top_degree() + 1,
        });
    }
    let n = tuple.nvars();
    Ok((0..=tuple.top_degree())
        .map(|k| basis_len(n, k) - ideal_graded_dim(tuple, k))
        .collect())
}

/// Whether two families of forms of the same degree span the same subspace.
pub fn same_span(a: &[Poly], b: &[Poly]) -> Result<bool> {
    let Some(first) = a.iter().chain(b).find(|p| !p.is_zero()) else {
        return Ok(true);
    };
    let basis = GradedBasis::new(first.nvars(), first.form_degree()?);
    let ca: Vec<Vec<Rational>> = a.iter().map(|p| p.coords(&basis)).collect::<Result<_>>()?;
    let cb: Vec<Vec<Rational>> = b.iter().map(|p| p.coords(&basis)).collect::<Result<_>>()?;
    let rank = |rows: Vec<Vec<Rational>>| -> usize {
        MatrixQ::from_rows(basis.len(), rows).map_or(0, |m| m.rank())
    };
    let ra = rank(ca.clone());
    let rb = rank(cb.clone());
    let rab = rank(ca.into_iter().chain(cb).collect());
    Ok(ra == rb && rb == rab)
}

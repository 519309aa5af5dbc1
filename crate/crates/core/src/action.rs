//! Linear changes of variables.
//!
//! `GL_n` acts on source forms by `(Cf)(z) = f(z C^{-T})` and on dual forms by
//! `(CF)(e) = F(e C)`, with `z` and `e` read as row vectors.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::matrix::MatrixQ;
use crate::milnor::PolyTuple;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionKind {
    /// `f(z) -> f(z C^{-T})`
    OnForms,
    /// `F(e) -> F(e C)`
    OnDualForms,
}

pub fn act(c: &MatrixQ, f: &Poly, kind: ActionKind) -> Result<Poly> {
    check_shape(c, f.nvars())?;
    let m = match kind {
        // (z C^{-T})_i = sum_j z_j (C^{-1})_{ij}
        ActionKind::OnForms => c.inverse()?.transpose(),
        ActionKind::OnDualForms => {
            if c.det()?.is_zero() {
                return Err(Error::SingularMatrix);
            }
            c.clone()
        }
    };
    Ok(f.substitute(&row_times(&m, f)))
}

/// The linear forms `(x M)_i = sum_j x_j M_{ji}` in the variables of `f`.
fn row_times(m: &MatrixQ, f: &Poly) -> Vec<Poly> {
    let n = f.nvars();
    (0..n)
        .map(|i| {
            Poly::from_terms(
                n,
                f.space(),
                (0..n).map(|j| (Monomial::var(n, j), m.get(j, i).clone())),
            )
        })
        .collect()
}

/// `((C1, C2) f)(z) = f(z C1^{-T}) C2^{-1}`, with `f` read as a row vector of forms.
pub fn act_on_tuple(c1: &MatrixQ, c2: &MatrixQ, tuple: &PolyTuple) -> Result<PolyTuple> {
    let n = tuple.nvars();
    check_shape(c1, n)?;
    check_shape(c2, n)?;
    let moved: Vec<Poly> = tuple
        .forms()
        .iter()
        .map(|f| act(c1, f, ActionKind::OnForms))
        .collect::<Result<_>>()?;
    let c2_inv = c2.inverse()?;
    let forms = (0..n)
        .map(|j| {
            moved
                .iter()
                .enumerate()
                .fold(Poly::zero(n, tuple.forms()[0].space()), |acc, (i, f)| {
                    &acc + &f.scale(c2_inv.get(i, j))
                })
        })
        .collect();
    PolyTuple::new(forms)
}

fn check_shape(c: &MatrixQ, n: usize) -> Result<()> {
    if c.rows() != n || c.cols() != n {
        return Err(Error::Dimension(
            "matrix size must equal the variable count",
        ));
    }
    Ok(())
}

//! Dense rational matrices with fraction-free elimination.
//!
//! Rank, nullspace and determinant all go through one Bareiss pass over an
//! integer copy of the matrix (each row scaled by the lcm of its denominators,
//! which changes neither row space nor kernel). Pivots are the first nonzero
//! entry at or below the current row, so results are reproducible.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{common_denominator, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixQ {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl MatrixQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatrixQ {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        MatrixQ { rows, cols, data }
    }

    /// Rows must all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows"));
        }
        let nrows = rows.len();
        Ok(MatrixQ {
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension("entry count does not match shape"));
        }
        Ok(MatrixQ {
            rows,
            cols,
            data: entries
                .iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> MatrixQ {
        MatrixQ::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &MatrixQ) -> Result<MatrixQ> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension("inner dimensions differ"));
        }
        Ok(MatrixQ::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(Rational::zero(), |acc, k| {
                acc + self.get(i, k) * rhs.get(k, j)
            })
        }))
    }

    pub fn scale(&self, c: &Rational) -> MatrixQ {
        MatrixQ {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix"));
        }
        if self.rows == 0 {
            return Ok(Rational::one());
        }
        let ech = self.echelon();
        if ech.pivots.len() < self.rows {
            return Ok(Rational::zero());
        }
        let mut det = Rational::from_integer(ech.rows[self.rows - 1][self.cols - 1].clone());
        if ech.odd_swaps {
            det = -det;
        }
        Ok(det / Rational::from_integer(ech.row_scale))
    }

    pub fn inverse(&self) -> Result<MatrixQ> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix"));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = MatrixQ::identity(n);
        for c in 0..n {
            let p = (c..n)
                .find(|&r| !a.get(r, c).is_zero())
                .ok_or(Error::SingularMatrix)?;
            a.swap_rows(c, p);
            inv.swap_rows(c, p);
            let pivot = a.get(c, c).clone();
            for j in 0..n {
                let v = a.get(c, j) / &pivot;
                a.set(c, j, v);
                let v = inv.get(c, j) / &pivot;
                inv.set(c, j, v);
            }
            for r in 0..n {
                if r == c || a.get(r, c).is_zero() {
                    continue;
                }
                let factor = a.get(r, c).clone();
                for j in 0..n {
                    let v = a.get(r, j) - &factor * a.get(c, j);
                    a.set(r, j, v);
                    let v = inv.get(r, j) - &factor * inv.get(c, j);
                    inv.set(r, j, v);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// A basis of `{x : self * x = 0}`, one vector per free column.
    ///
    /// The vector for free column `f` has `x_f = 1` and zeros in the other free
    /// columns, so the basis is canonical for a given column order.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![Rational::zero(); self.cols];
            x[free] = Rational::one();
            for (r, &pc) in ech.pivots.iter().enumerate().rev() {
                let row = &ech.rows[r];
                let mut acc = Rational::zero();
                for j in pc + 1..self.cols {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        acc += Rational::from_integer(row[j].clone()) * &x[j];
                    }
                }
                x[pc] = -acc / Rational::from_integer(row[pc].clone());
            }
            basis.push(x);
        }
        basis
    }

    fn echelon(&self) -> Echelon {
        let mut row_scale = BigInt::one();
        let mut rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let den = common_denominator(row);
                row_scale *= &den;
                row.iter().map(|v| v.numer() * (&den / v.denom())).collect()
            })
            .collect();
        let (pivots, odd_swaps) = bareiss(&mut rows, self.cols);
        Echelon {
            rows,
            pivots,
            odd_swaps,
            row_scale,
        }
    }
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    odd_swaps: bool,
    /// Product of the per-row scale factors applied before elimination.
    row_scale: BigInt,
}

/// In-place fraction-free forward elimination. Returns pivot columns and the
/// parity of the row swaps performed.
fn bareiss(rows: &mut [Vec<BigInt>], cols: usize) -> (Vec<usize>, bool) {
    let nrows = rows.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut odd_swaps = false;
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            rows.swap(p, r);
            odd_swaps = !odd_swaps;
        }
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let lead = core::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = pivot.clone();
        pivots.push(c);
        r += 1;
    }
    (pivots, odd_swaps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn m(rows: usize, cols: usize, v: &[i64]) -> MatrixQ {
        MatrixQ::from_i64(rows, cols, v).unwrap()
    }

    #[test]
    fn determinant_small() {
        assert_eq!(m(2, 2, &[1, 2, 3, 4]).det().unwrap(), int(-2));
        assert_eq!(
            m(3, 3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]).det().unwrap(),
            int(-1)
        );
        assert_eq!(m(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]).det().unwrap(), int(0));
        let half = MatrixQ::identity(3).scale(&rat(1, 2));
        assert_eq!(half.det().unwrap(), rat(1, 8));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let a = m(4, 4, &[2, -1, 0, 3, 1, 4, -2, 0, 0, 5, 1, -1, 3, 0, 2, 2]);
        // cofactor expansion, written out independently
        fn cof(a: &[Vec<i64>]) -> i64 {
            if a.len() == 1 {
                return a[0][0];
            }
            (0..a.len())
                .map(|j| {
                    let minor: Vec<Vec<i64>> = a[1..]
                        .iter()
                        .map(|r| {
                            r.iter()
                                .enumerate()
                                .filter(|(k, _)| *k != j)
                                .map(|(_, v)| *v)
                                .collect()
                        })
                        .collect();
                    let s = if j % 2 == 0 { 1 } else { -1 };
                    s * a[0][j] * cof(&minor)
                })
                .sum()
        }
        let rows: Vec<Vec<i64>> = vec![
            vec![2, -1, 0, 3],
            vec![1, 4, -2, 0],
            vec![0, 5, 1, -1],
            vec![3, 0, 2, 2],
        ];
        assert_eq!(a.det().unwrap(), int(cof(&rows)));
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(2, 3, &[1, 2, 3, 2, 4, 6]);
        assert_eq!(a.rank(), 1);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let prod = a
                .mul(&MatrixQ::from_rows(1, v.iter().map(|x| vec![x.clone()]).collect()).unwrap())
                .unwrap();
            assert!(prod.data.iter().all(Zero::is_zero));
        }
        assert_eq!(ns[0], vec![int(-2), int(1), int(0)]);
    }

    #[test]
    fn rank_with_skipped_columns() {
        let a = m(3, 4, &[0, 1, 2, 3, 0, 2, 4, 7, 0, 0, 0, 5]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.nullspace().len(), 2);
    }

    #[test]
    fn empty_shapes() {
        let a = MatrixQ::zeros(0, 3);
        assert_eq!(a.rank(), 0);
        assert_eq!(a.nullspace().len(), 3);
        assert_eq!(MatrixQ::zeros(0, 0).det().unwrap(), int(1));
    }

    #[test]
    fn inverse_roundtrip() {
        let a =
            MatrixQ::from_rows(2, vec![vec![rat(1, 2), int(3)], vec![int(-1), rat(2, 3)]]).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), MatrixQ::identity(2));
        assert_eq!(m(2, 2, &[1, 2, 2, 4]).inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn rational_rows_are_scaled() {
        let a = MatrixQ::from_rows(
            2,
            vec![vec![rat(1, 3), rat(1, 6)], vec![rat(2, 5), rat(1, 5)]],
        )
        .unwrap();
        assert_eq!(a.rank(), 1);
        assert_eq!(a.det().unwrap(), int(0));
    }
}

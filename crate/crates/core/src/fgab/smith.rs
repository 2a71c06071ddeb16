//! Smith normal form over the integers.
//!
//! For an `m x n` matrix `A` we compute unimodular `U` (`m x m`) and `V`
//! (`n x n`) with `U * A * V = D`, where `D` is diagonal, its entries are
//! nonnegative, each divides the next, and zeros come last.
//!
//! Pivoting: the nonzero entry of least absolute value in the active block is
//! moved to the pivot, then its row and column are reduced by division with
//! remainder. When the row and column are clear but the pivot does not divide
//! some entry of the remaining block, that entry's row is added to the pivot
//! row and reduction resumes. The inverse of `V` is tracked alongside so that
//! canonical group bases can be written back in terms of the generators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Inverse of `v`, exact.
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    /// The diagonal `d_1, ..., d_min(m,n)` of `D`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// row[dst] += f * row[src]
    fn row_op(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_row_multiple(dst, src, f);
        self.u.add_row_multiple(dst, src, f);
    }

    /// col[dst] += f * col[src]; `V <- V E` with `E = I + f e_src e_dst^T`,
    /// so `V^{-1} <- (I - f e_src e_dst^T) V^{-1}`.
    fn col_op(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_col_multiple(dst, src, f);
        self.v.add_col_multiple(dst, src, f);
        self.v_inv.add_row_multiple(src, dst, &-f);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
    }

    fn min_abs_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a[(i, j)].abs();
                if x.is_zero() {
                    continue;
                }
                if best.as_ref().is_none_or(|(_, _, b)| x < *b) {
                    best = Some((i, j, x));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Clears row and column `t` below/right of the pivot. Returns false if
    /// some remainder stayed nonzero.
    fn reduce_pivot(&mut self, t: usize) -> bool {
        let mut clean = true;
        let p = self.a[(t, t)].clone();
        for i in t + 1..self.a.rows() {
            if self.a[(i, t)].is_zero() {
                continue;
            }
            let q = self.a[(i, t)].div_floor(&p);
            self.row_op(i, t, &-q);
            clean &= self.a[(i, t)].is_zero();
        }
        for j in t + 1..self.a.cols() {
            if self.a[(t, j)].is_zero() {
                continue;
            }
            let q = self.a[(t, j)].div_floor(&p);
            self.col_op(j, t, &-q);
            clean &= self.a[(t, j)].is_zero();
        }
        clean
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let p = &self.a[(t, t)];
        (t + 1..self.a.rows())
            .find(|&i| (t + 1..self.a.cols()).any(|j| !self.a[(i, j)].is_multiple_of(p)))
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut r = Reducer {
        a: a.clone(),
        u: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };

    for t in 0..m.min(n) {
        while let Some((i, j)) = r.min_abs_entry(t) {
            r.swap_rows(t, i);
            r.swap_cols(t, j);
            if !r.reduce_pivot(t) {
                continue;
            }
            match r.non_divisible_row(t) {
                Some(i) => r.row_op(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if r.a[(t, t)].is_negative() {
            r.negate_row(t);
        }
    }

    SmithDecomposition {
        u: r.u,
        d: r.a,
        v: r.v,
        v_inv: r.v_inv,
    }
}

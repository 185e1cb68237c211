//! Square matrices over [`RadicalSum`], stored as sorted sparse rows.
//!
//! Generator matrices have a handful of nonzeros per row, so products and
//! commutators only ever touch stored entries.

use std::collections::BTreeMap;

use crate::scalar::{RadicalSum, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    dim: usize,
    rows: Vec<BTreeMap<usize, RadicalSum>>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, rows: vec![BTreeMap::new(); dim] }
    }

    pub fn scalar(dim: usize, value: &RadicalSum) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, value.clone());
        }
        m
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, &RadicalSum::one())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// 0-based entry; absent entries are zero.
    pub fn get(&self, row: usize, col: usize) -> RadicalSum {
        self.rows[row].get(&col).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, row: usize, col: usize, value: RadicalSum) {
        assert!(row < self.dim && col < self.dim, "index out of range");
        if value.is_zero() {
            self.rows[row].remove(&col);
        } else {
            self.rows[row].insert(col, value);
        }
    }

    pub fn add_at(&mut self, row: usize, col: usize, value: &RadicalSum) {
        let slot = self.rows[row].entry(col).or_default();
        *slot += value;
        if slot.is_zero() {
            self.rows[row].remove(&col);
        }
    }

    /// Stored nonzeros in (row, col) order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &RadicalSum)> {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn row(&self, row: usize) -> impl Iterator<Item = (usize, &RadicalSum)> {
        self.rows[row].iter().map(|(c, v)| (*c, v))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(r, c, _)| r == c)
    }

    pub fn trace(&self) -> RadicalSum {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for (r, c, v) in self.entries() {
            t.rows[c].insert(r, v.clone());
        }
        t
    }

    pub fn neg(&self) -> Self {
        self.map(|v| -v)
    }

    /// `−Mᵀ`.
    pub fn negative_transpose(&self) -> Self {
        self.transpose().neg()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        self.map(|v| v.scale(factor))
    }

    pub fn scale_by(&self, factor: &RadicalSum) -> Self {
        self.map(|v| v * factor)
    }

    fn map(&self, f: impl Fn(&RadicalSum) -> RadicalSum) -> Self {
        let mut out = Self::zeros(self.dim);
        for (r, c, v) in self.entries() {
            out.set(r, c, f(v));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_at(r, c, v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = Self::zeros(self.dim);
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, RadicalSum> = BTreeMap::new();
            for (k, a) in row {
                for (c, b) in &other.rows[*k] {
                    *acc.entry(*c).or_default() += &(a * b);
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.rows[r] = acc;
        }
        out
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Largest absolute entry in floating point.
    pub fn max_abs_f64(&self) -> f64 {
        self.entries().map(|(_, _, v)| v.to_f64().abs()).fold(0.0, f64::max)
    }

    /// Simultaneous row/column permutation: entry `(r, c)` moves to
    /// `(perm[r], perm[c])`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.dim);
        for (r, c, v) in self.entries() {
            out.set(perm[r], perm[c], v.clone());
        }
        out
    }
}

/// Complex matrix as a pair of real parts; only the `Fⁱ` basis needs it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexMatrix {
    pub re: Matrix,
    pub im: Matrix,
}

impl ComplexMatrix {
    pub fn real(re: Matrix) -> Self {
        let dim = re.dim();
        Self { re, im: Matrix::zeros(dim) }
    }

    pub fn imaginary(im: Matrix) -> Self {
        let dim = im.dim();
        Self { re: Matrix::zeros(dim), im }
    }

    pub fn dim(&self) -> usize {
        self.re.dim()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self { re: self.re.transpose(), im: self.im.transpose().neg() }
    }

    pub fn is_hermitian(&self) -> bool {
        self.adjoint() == *self
    }

    pub fn trace(&self) -> (RadicalSum, RadicalSum) {
        (self.re.trace(), self.im.trace())
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self { re: self.re.permuted(perm), im: self.im.permuted(perm) }
    }
}

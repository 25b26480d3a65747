//! Dense row-major matrices and row permutations.
//!
//! Every matrix carries the parameters of its coefficient domain (the
//! modulus for prime fields, nothing for rationals), so zero-dimension
//! matrices still know which domain they live in.

use std::fmt;

use thiserror::Error;

use crate::algebra::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("ragged rows: row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("{op}: incompatible dimensions {left:?} and {right:?}")]
    Dimension { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("entries from different coefficient domains")]
    DomainMismatch,
    #[error("permutation of size {perm} applied to {rows} rows")]
    PermutationSize { perm: usize, rows: usize },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
}

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<T: Ring> {
    params: T::Params,
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<T>>,
}

impl<T: Ring> Matrix<T> {
    /// Builds a matrix from rows whose entries all belong to `params`.
    ///
    /// An empty row list gives a `0 x 0` matrix; use [`Matrix::zeros`] for
    /// `0 x n`.
    pub fn from_rows_in(params: T::Params, rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(MatrixError::Ragged { row: i, expected: ncols, found: row.len() });
            }
            if row.iter().any(|x| x.params() != params) {
                return Err(MatrixError::DomainMismatch);
            }
        }
        Ok(Matrix { params, nrows, ncols, rows })
    }

    pub fn from_fn(
        params: T::Params,
        nrows: usize,
        ncols: usize,
        mut f: impl FnMut(usize, usize) -> T,
    ) -> Self {
        let rows = (0..nrows).map(|i| (0..ncols).map(|j| f(i, j)).collect()).collect();
        Matrix { params, nrows, ncols, rows }
    }

    pub fn zeros(params: T::Params, nrows: usize, ncols: usize) -> Self {
        let zero = T::zero(&params);
        Matrix { rows: vec![vec![zero; ncols]; nrows], params, nrows, ncols }
    }

    pub fn identity(params: T::Params, n: usize) -> Self {
        let (zero, one) = (T::zero(&params), T::one(&params));
        Self::from_fn(params, n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    /// Skips validation; callers guarantee rectangular shape and domain.
    pub(crate) fn from_parts(params: T::Params, nrows: usize, ncols: usize, rows: Vec<Vec<T>>) -> Self {
        debug_assert_eq!(rows.len(), nrows);
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        Matrix { params, nrows, ncols, rows }
    }

    pub fn params(&self) -> &T::Params {
        &self.params
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.rows[i][j]
    }

    pub fn into_rows(self) -> Vec<Vec<T>> {
        self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(T::is_zero)
    }

    fn check_domain(&self, rhs: &Self) -> Result<(), MatrixError> {
        if self.params == rhs.params {
            Ok(())
        } else {
            Err(MatrixError::DomainMismatch)
        }
    }

    /// Classical product.
    pub fn mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.ncols != rhs.nrows {
            return Err(MatrixError::Dimension { op: "mul", left: self.shape(), right: rhs.shape() });
        }
        self.check_domain(rhs)?;
        let zero = T::zero(&self.params);
        let rows = self
            .rows
            .iter()
            .map(|a| {
                let mut out = vec![zero.clone(); rhs.ncols];
                for (aik, brow) in a.iter().zip(&rhs.rows) {
                    if aik.is_zero() {
                        continue;
                    }
                    for (o, bkj) in out.iter_mut().zip(brow) {
                        if !bkj.is_zero() {
                            *o = o.add(&aik.mul(bkj));
                        }
                    }
                }
                out
            })
            .collect();
        Ok(Matrix::from_parts(self.params.clone(), self.nrows, rhs.ncols, rows))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.zip_with(rhs, "add", T::add)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.zip_with(rhs, "sub", T::sub)
    }

    fn zip_with(
        &self,
        rhs: &Self,
        op: &'static str,
        f: impl Fn(&T, &T) -> T,
    ) -> Result<Self, MatrixError> {
        if self.shape() != rhs.shape() {
            return Err(MatrixError::Dimension { op, left: self.shape(), right: rhs.shape() });
        }
        self.check_domain(rhs)?;
        let rows = self
            .rows
            .iter()
            .zip(&rhs.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
            .collect();
        Ok(Matrix::from_parts(self.params.clone(), self.nrows, self.ncols, rows))
    }

    /// Row `i` of `self` becomes row `p.image(i)` of the result.
    pub fn permute_rows(&self, p: &RPermute) -> Result<Self, MatrixError> {
        if p.size() != self.nrows {
            return Err(MatrixError::PermutationSize { perm: p.size(), rows: self.nrows });
        }
        let mut slots: Vec<Option<Vec<T>>> = vec![None; self.nrows];
        for (i, row) in self.rows.iter().enumerate() {
            slots[p.image(i)] = Some(row.clone());
        }
        let rows = slots.into_iter().map(|r| r.expect("bijection")).collect();
        Ok(Matrix::from_parts(self.params.clone(), self.nrows, self.ncols, rows))
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.params.clone(), self.ncols, self.nrows, |i, j| self.rows[j][i].clone())
    }

    pub fn map<U: Ring>(&self, params: U::Params, f: impl Fn(&T) -> U) -> Matrix<U> {
        let rows = self.rows.iter().map(|r| r.iter().map(&f).collect()).collect();
        Matrix::from_parts(params, self.nrows, self.ncols, rows)
    }
}

impl<T: Ring> Matrix<T>
where
    T::Params: Default,
{
    /// [`Matrix::from_rows_in`] for domains without parameters.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        Self::from_rows_in(T::Params::default(), rows)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, MatrixError> {
        let params = T::Params::default();
        let rows = rows.iter().map(|r| r.iter().map(|&v| T::from_i64(&params, v)).collect()).collect();
        Self::from_rows_in(params, rows)
    }
}

impl<T: Ring> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Permutation of row indices; source row `i` is sent to `images[i]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RPermute {
    images: Vec<usize>,
}

impl RPermute {
    pub fn identity(n: usize) -> Self {
        RPermute { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, MatrixError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(MatrixError::NotAPermutation(n));
            }
        }
        Ok(RPermute { images })
    }

    /// Swaps `i` and `j` in `0..n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        RPermute { images }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Smallest index not fixed, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|&(i, &j)| i != j).map(|(i, _)| i)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.size()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        RPermute { images }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &RPermute) -> Result<Self, MatrixError> {
        if self.size() != other.size() {
            return Err(MatrixError::PermutationSize { perm: self.size(), rows: other.size() });
        }
        Ok(RPermute { images: other.images.iter().map(|&j| self.images[j]).collect() })
    }

    /// Fixes `0..offset` and acts as `self` shifted by `offset` above it.
    pub fn embed(&self, n: usize) -> Self {
        let offset = n.checked_sub(self.size()).expect("embedding into a smaller size");
        let images = (0..offset).chain(self.images.iter().map(|&j| j + offset)).collect();
        RPermute { images }
    }

    /// The matrix `P` with `P * M == M.permute_rows(self)`.
    pub fn to_matrix<T: Ring>(&self, params: T::Params) -> Matrix<T> {
        let (zero, one) = (T::zero(&params), T::one(&params));
        let n = self.size();
        Matrix::from_fn(params, n, n, |i, j| if self.images[j] == i { one.clone() } else { zero.clone() })
    }

    /// Reads a 0/1 permutation matrix back; `None` if `m` is not one.
    pub fn from_matrix<T: Ring>(m: &Matrix<T>) -> Option<Self> {
        if m.nrows() != m.ncols() {
            return None;
        }
        let mut images = Vec::with_capacity(m.ncols());
        for j in 0..m.ncols() {
            let mut hit = None;
            for i in 0..m.nrows() {
                let x = m.get(i, j);
                if x.is_one() && hit.is_none() {
                    hit = Some(i);
                } else if !x.is_zero() {
                    return None;
                }
            }
            images.push(hit?);
        }
        RPermute::from_images(images).ok()
    }
}

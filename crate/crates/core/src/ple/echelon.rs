use crate::algebra::Ring;
use crate::matrix::Matrix;

use super::PleError;

/// A pivot row stored from its pivot column rightward.
#[derive(Clone, PartialEq, Debug)]
pub struct EchelonFormRow<T: Ring> {
    offset: usize,
    row: Vec<T>,
}

impl<T: Ring> EchelonFormRow<T> {
    /// The first entry of `row` is the pivot and must be one.
    pub fn new(offset: usize, row: Vec<T>) -> Result<Self, PleError> {
        match row.first() {
            Some(pivot) if pivot.is_one() => Ok(EchelonFormRow { offset, row }),
            _ => Err(PleError::Structure(format!("row at column {offset} lacks a unit pivot"))),
        }
    }

    pub(crate) fn from_parts(offset: usize, row: Vec<T>) -> Self {
        debug_assert!(row.first().is_some_and(T::is_one));
        EchelonFormRow { offset, row }
    }

    /// Column of the pivot.
    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn row(&self) -> &[T] {
        &self.row
    }

    /// Entry at absolute column `col`, zero left of the pivot.
    pub fn entry(&self, col: usize, zero: &T) -> T {
        if col < self.offset {
            zero.clone()
        } else {
            self.row[col - self.offset].clone()
        }
    }

    pub(crate) fn into_row(self) -> Vec<T> {
        self.row
    }
}

/// Echelon matrix with unit pivots.
///
/// Pivot row `k` materializes at row `first_row + k`; all other rows are
/// zero. Standalone echelon forms have `first_row == 0`, so their zero rows
/// sit at the bottom. Inside a hook the pivot rows start at the hook's band.
#[derive(Clone, PartialEq, Debug)]
pub struct EchelonForm<T: Ring> {
    params: T::Params,
    nrows: usize,
    ncols: usize,
    first_row: usize,
    rows: Vec<EchelonFormRow<T>>,
}

impl<T: Ring> EchelonForm<T> {
    pub fn zero(params: T::Params, nrows: usize, ncols: usize) -> Self {
        EchelonForm { params, nrows, ncols, first_row: 0, rows: Vec::new() }
    }

    pub fn new(
        params: T::Params,
        nrows: usize,
        ncols: usize,
        first_row: usize,
        rows: Vec<EchelonFormRow<T>>,
    ) -> Result<Self, PleError> {
        if first_row + rows.len() > nrows {
            return Err(PleError::Structure(format!(
                "{} pivot rows from row {first_row} exceed {nrows} rows",
                rows.len()
            )));
        }
        for (k, r) in rows.iter().enumerate() {
            if r.offset + r.row.len() != ncols {
                return Err(PleError::Structure(format!(
                    "row at column {} has {} entries in {ncols} columns",
                    r.offset,
                    r.row.len()
                )));
            }
            if r.row.iter().any(|x| x.params() != params) {
                return Err(PleError::Structure("entries from different domains".into()));
            }
            if k > 0 && r.offset <= rows[k - 1].offset {
                return Err(PleError::PivotOrder { previous: rows[k - 1].offset, next: r.offset });
            }
        }
        Ok(EchelonForm { params, nrows, ncols, first_row, rows })
    }

    pub(crate) fn from_parts(
        params: T::Params,
        nrows: usize,
        ncols: usize,
        first_row: usize,
        rows: Vec<EchelonFormRow<T>>,
    ) -> Self {
        debug_assert!(first_row + rows.len() <= nrows);
        debug_assert!(rows.iter().all(|r| r.offset + r.row.len() == ncols));
        EchelonForm { params, nrows, ncols, first_row, rows }
    }

    /// Reads a normalized echelon matrix: nonzero rows first, each with a
    /// unit pivot strictly right of the previous one.
    pub fn from_matrix(m: &Matrix<T>) -> Result<Self, PleError> {
        let mut rows: Vec<EchelonFormRow<T>> = Vec::new();
        let mut seen_zero = false;
        for (i, row) in m.rows().iter().enumerate() {
            match row.iter().position(|x| !x.is_zero()) {
                None => seen_zero = true,
                Some(_) if seen_zero => {
                    return Err(PleError::Structure(format!("nonzero row {i} below a zero row")));
                }
                Some(j) => {
                    if let Some(prev) = rows.last() {
                        if j <= prev.offset {
                            return Err(PleError::PivotOrder { previous: prev.offset, next: j });
                        }
                    }
                    rows.push(EchelonFormRow::new(j, row[j..].to_vec())?);
                }
            }
        }
        Ok(EchelonForm::from_parts(m.params().clone(), m.nrows(), m.ncols(), 0, rows))
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

    pub fn first_row(&self) -> usize {
        self.first_row
    }

    /// Pivot rows, top to bottom.
    pub fn rows(&self) -> &[EchelonFormRow<T>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.offset).collect()
    }

    /// Every pivot column is zero outside its pivot row.
    pub fn is_reduced(&self) -> bool {
        self.rows.iter().enumerate().all(|(k, pivot)| {
            self.rows[..k].iter().all(|r| r.row[pivot.offset - r.offset].is_zero())
        })
    }

    pub(crate) fn into_rows(self) -> Vec<EchelonFormRow<T>> {
        self.rows
    }

    pub(crate) fn embed(&mut self, nrows: usize) {
        self.first_row += nrows - self.nrows;
        self.nrows = nrows;
    }

    pub(crate) fn append(&mut self, rhs: EchelonForm<T>) {
        self.rows.extend(rhs.rows);
    }

    pub(crate) fn set_first_row(&mut self, first_row: usize) {
        self.first_row = first_row;
    }

    /// Same pivot rows placed in `nrows` rows starting at row 0.
    pub fn with_nrows(mut self, nrows: usize) -> Self {
        assert!(self.rows.len() <= nrows, "too few rows for the pivots");
        self.nrows = nrows;
        self.first_row = 0;
        self
    }

    pub fn to_matrix(&self) -> Matrix<T> {
        let zero = T::zero(&self.params);
        let mut rows = vec![vec![zero; self.ncols]; self.nrows];
        for (k, r) in self.rows.iter().enumerate() {
            rows[self.first_row + k][r.offset..].clone_from_slice(&r.row);
        }
        Matrix::from_parts(self.params.clone(), self.nrows, self.ncols, rows)
    }
}

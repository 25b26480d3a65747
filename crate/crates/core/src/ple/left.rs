use crate::algebra::Ring;
use crate::matrix::Matrix;

use super::PleError;

/// One nontrivial column of a lower triangular factor.
#[derive(Clone, PartialEq, Debug)]
pub struct LeftTransformationColumn<T: Ring> {
    offset: usize,
    head_unit: T,
    tail: Vec<T>,
}

impl<T: Ring> LeftTransformationColumn<T> {
    /// `head_unit` must be nonzero; `tail` holds the entries strictly below it.
    pub fn new(offset: usize, head_unit: T, tail: Vec<T>) -> Result<Self, PleError> {
        if head_unit.is_zero() {
            return Err(PleError::Structure(format!("zero head unit in column {offset}")));
        }
        Ok(LeftTransformationColumn { offset, head_unit, tail })
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn head_unit(&self) -> &T {
        &self.head_unit
    }

    pub fn tail(&self) -> &[T] {
        &self.tail
    }

    pub(crate) fn tail_mut(&mut self) -> &mut Vec<T> {
        &mut self.tail
    }

    pub(crate) fn shift(&mut self, by: usize) {
        self.offset += by;
    }
}

/// Invertible lower triangular `n x n` matrix that differs from the identity
/// only in a run of consecutive columns.
#[derive(Clone, PartialEq, Debug)]
pub struct LeftTransformation<T: Ring> {
    params: T::Params,
    nrows: usize,
    columns: Vec<LeftTransformationColumn<T>>,
}

impl<T: Ring> LeftTransformation<T> {
    pub fn identity(params: T::Params, nrows: usize) -> Self {
        LeftTransformation { params, nrows, columns: Vec::new() }
    }

    pub fn new(
        params: T::Params,
        nrows: usize,
        columns: Vec<LeftTransformationColumn<T>>,
    ) -> Result<Self, PleError> {
        for (k, col) in columns.iter().enumerate() {
            if k > 0 && col.offset != columns[k - 1].offset + 1 {
                return Err(PleError::Structure("column offsets are not consecutive".into()));
            }
            if col.offset + 1 + col.tail.len() != nrows {
                return Err(PleError::Structure(format!(
                    "column {} has tail length {} in {} rows",
                    col.offset,
                    col.tail.len(),
                    nrows
                )));
            }
        }
        Ok(LeftTransformation { params, nrows, columns })
    }

    pub fn params(&self) -> &T::Params {
        &self.params
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn columns(&self) -> &[LeftTransformationColumn<T>] {
        &self.columns
    }

    pub(crate) fn columns_mut(&mut self) -> &mut [LeftTransformationColumn<T>] {
        &mut self.columns
    }

    pub(crate) fn embed(&mut self, nrows: usize) {
        let shift = nrows - self.nrows;
        self.columns.iter_mut().for_each(|c| c.shift(shift));
        self.nrows = nrows;
    }

    /// Appends the columns of `rhs`, whose offsets must continue ours.
    pub(crate) fn append(&mut self, rhs: LeftTransformation<T>) {
        debug_assert!(match (self.columns.last(), rhs.columns.first()) {
            (Some(a), Some(b)) => a.offset + 1 == b.offset,
            _ => true,
        });
        self.columns.extend(rhs.columns);
    }

    pub fn to_matrix(&self) -> Matrix<T> {
        let mut rows = Matrix::identity(self.params.clone(), self.nrows).into_rows();
        for col in &self.columns {
            let j = col.offset;
            rows[j][j] = col.head_unit.clone();
            for (i, x) in col.tail.iter().enumerate() {
                rows[j + 1 + i][j] = x.clone();
            }
        }
        Matrix::from_parts(self.params.clone(), self.nrows, self.nrows, rows)
    }
}

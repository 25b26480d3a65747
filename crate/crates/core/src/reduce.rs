//! Reduction of a normalized echelon form `E` to its reduced row echelon
//! form `E'` with `E = U * E'`, `U` upper unitriangular.
//!
//! The echelon form is unfolded from the rightmost pivot leftward into ER
//! hooks, one per pivot, and folded back with [`ERHook::mul`].
//!
//! An ER hook covers pivot rows `a..b` and columns `ca..cb` of the echelon
//! form being reduced. It stores
//!
//! * `U`: the unitriangular columns `a..b`, with entries above the diagonal;
//! * the block: rows `0..a`, columns `ca..cb`, already cleared in every
//!   pivot column of rows `a..b`;
//! * the reduced pivot rows `a..b`, restricted to columns `..cb`.
//!
//! If `E_l` denotes rows `0..a` restricted to columns `..ca`, the covered
//! part of the input equals `U * [[E_l, block], [0, rows]]`.

use thiserror::Error;

use crate::algebra::{DivisionRing, Ring};
use crate::matrix::Matrix;
use crate::ple::{ple, EchelonForm, EchelonFormRow, PLEHook};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("incompatible ER hooks: {0}")]
    Incompatible(String),
}

#[derive(Clone, PartialEq, Debug)]
pub struct EchelonTransformationColumn<T: Ring> {
    offset: usize,
    above: Vec<T>,
}

impl<T: Ring> EchelonTransformationColumn<T> {
    pub fn offset(&self) -> usize {
        self.offset
    }

    /// Entries in rows `0..offset`; the diagonal entry is one.
    pub fn above(&self) -> &[T] {
        &self.above
    }
}

/// Upper triangular `n x n` matrix with unit diagonal, differing from the
/// identity in a run of consecutive columns.
#[derive(Clone, PartialEq, Debug)]
pub struct EchelonTransformation<T: Ring> {
    params: T::Params,
    nrows: usize,
    columns: Vec<EchelonTransformationColumn<T>>,
}

impl<T: Ring> EchelonTransformation<T> {
    pub fn identity(params: T::Params, nrows: usize) -> Self {
        EchelonTransformation { params, nrows, columns: Vec::new() }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn columns(&self) -> &[EchelonTransformationColumn<T>] {
        &self.columns
    }

    pub fn to_matrix(&self) -> Matrix<T> {
        let mut rows = Matrix::identity(self.params.clone(), self.nrows).into_rows();
        for col in &self.columns {
            for (i, x) in col.above.iter().enumerate() {
                rows[i][col.offset] = x.clone();
            }
        }
        Matrix::from_parts(self.params.clone(), self.nrows, self.nrows, rows)
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct ERHook<T: Ring> {
    et: EchelonTransformation<T>,
    block: Matrix<T>,
    ef: EchelonForm<T>,
    col_start: usize,
}

impl<T: DivisionRing> ERHook<T> {
    /// The empty hook at row `row` and column `col` of an `nrows x ncols`
    /// echelon form. It is a two-sided identity for hooks that start (on
    /// the left) or end (on the right) at that position.
    pub fn identity_at(params: T::Params, nrows: usize, ncols: usize, row: usize, col: usize) -> Self {
        let mut ef = EchelonForm::zero(params.clone(), nrows, ncols);
        ef.set_first_row(row);
        ERHook {
            et: EchelonTransformation::identity(params.clone(), nrows),
            block: Matrix::zeros(params, row, 0),
            ef,
            col_start: col,
        }
    }

    pub fn et(&self) -> &EchelonTransformation<T> {
        &self.et
    }

    pub fn block(&self) -> &Matrix<T> {
        &self.block
    }

    /// Reduced pivot rows of the covered band.
    pub fn ef(&self) -> &EchelonForm<T> {
        &self.ef
    }

    pub fn rows(&self) -> std::ops::Range<usize> {
        self.ef.first_row()..self.ef.first_row() + self.ef.rank()
    }

    pub fn cols(&self) -> std::ops::Range<usize> {
        self.col_start..self.ef.ncols()
    }

    /// Product of `self`, covering `a..b`, with `rhs`, covering `b..c` and
    /// starting at the column where `self` ends.
    pub fn mul(&self, rhs: &Self) -> Result<Self, ReduceError> {
        let (left_rows, right_rows) = (self.rows(), rhs.rows());
        let (left_cols, right_cols) = (self.cols(), rhs.cols());
        if left_rows.end != right_rows.start || left_cols.end != right_cols.start {
            return Err(ReduceError::Incompatible(format!(
                "rows {left_rows:?} then {right_rows:?}, columns {left_cols:?} then {right_cols:?}"
            )));
        }
        if self.et.nrows != rhs.et.nrows || self.ef.params() != rhs.ef.params() {
            return Err(ReduceError::Incompatible("different row counts or domains".into()));
        }
        let (a, b) = (left_rows.start, left_rows.end);
        debug_assert_eq!(rhs.block.nrows(), b);

        // Z = U_left^-1 * block_right, by back substitution over the band.
        let mut z = rhs.block.clone().into_rows();
        for col in self.et.columns.iter().rev() {
            let k = col.offset;
            let (top, bottom) = z.split_at_mut(k);
            let zk = &bottom[0];
            for (zj, u) in top.iter_mut().zip(&col.above) {
                if u.is_zero() {
                    continue;
                }
                for (x, y) in zj.iter_mut().zip(zk) {
                    if !y.is_zero() {
                        *x = x.sub(&u.mul(y));
                    }
                }
            }
        }
        let mut z = z.into_iter();

        let params = self.ef.params().clone();
        let width = rhs.ef.ncols() - self.col_start;
        let block_rows: Vec<Vec<T>> = self
            .block
            .rows()
            .iter()
            .zip(z.by_ref())
            .map(|(l, r)| l.iter().cloned().chain(r).collect())
            .collect();
        debug_assert_eq!(block_rows.len(), a);
        let mut ef_rows: Vec<EchelonFormRow<T>> = self
            .ef
            .rows()
            .iter()
            .zip(z)
            .map(|(l, r)| {
                EchelonFormRow::from_parts(l.offset(), l.row().iter().cloned().chain(r).collect())
            })
            .collect();
        ef_rows.extend(rhs.ef.rows().iter().cloned());
        let mut columns = self.et.columns.clone();
        columns.extend(rhs.et.columns.iter().cloned());
        Ok(ERHook {
            et: EchelonTransformation { params: params.clone(), nrows: self.et.nrows, columns },
            block: Matrix::from_parts(params.clone(), a, width, block_rows),
            ef: EchelonForm::from_parts(params, self.ef.nrows(), rhs.ef.ncols(), a, ef_rows),
            col_start: self.col_start,
        })
    }
}

/// Splits the rightmost pivot off `e`, whose pivot rows start at row 0.
///
/// Returns the hook clearing that pivot's column and the remaining echelon
/// form: the other pivot rows cut off left of the pivot column. `None` when
/// `e` has no pivot rows.
pub fn split_off_er_hook<T: DivisionRing>(e: EchelonForm<T>) -> Option<(ERHook<T>, EchelonForm<T>)> {
    let k = e.rank();
    if k == 0 {
        return None;
    }
    let params = e.params().clone();
    let (nrows, ncols) = (e.nrows(), e.ncols());
    let zero = T::zero(&params);
    let mut rows = e.into_rows();
    let last = rows.pop().expect("k > 0");
    let c = last.offset();
    let above: Vec<T> = rows.iter().map(|r| r.entry(c, &zero)).collect();
    let block: Vec<Vec<T>> = rows
        .iter()
        .zip(&above)
        .map(|(r, x)| {
            let right = &r.row()[c - r.offset()..];
            if x.is_zero() {
                right.to_vec()
            } else {
                right.iter().zip(last.row()).map(|(y, p)| y.sub(&x.mul(p))).collect()
            }
        })
        .collect();
    let remaining = rows
        .into_iter()
        .map(|r| {
            let offset = r.offset();
            let mut row = r.into_row();
            row.truncate(c - offset);
            EchelonFormRow::from_parts(offset, row)
        })
        .collect();
    let hook = ERHook {
        et: EchelonTransformation {
            params: params.clone(),
            nrows,
            columns: vec![EchelonTransformationColumn { offset: k - 1, above }],
        },
        block: Matrix::from_parts(params.clone(), k - 1, ncols - c, block),
        ef: EchelonForm::from_parts(params.clone(), nrows, ncols, k - 1, vec![last]),
        col_start: c,
    };
    Some((hook, EchelonForm::from_parts(params, nrows, c, 0, remaining)))
}

/// The ER hooks of `e`, rightmost pivot first.
pub struct ErHooks<T: DivisionRing> {
    state: Option<EchelonForm<T>>,
}

impl<T: DivisionRing> Iterator for ErHooks<T> {
    type Item = ERHook<T>;

    fn next(&mut self) -> Option<ERHook<T>> {
        let (hook, rest) = split_off_er_hook(self.state.take()?)?;
        self.state = Some(rest);
        Some(hook)
    }
}

/// Panics if the pivot rows of `e` do not start at row 0.
pub fn unfold_er_hooks<T: DivisionRing>(e: &EchelonForm<T>) -> ErHooks<T> {
    assert_eq!(e.first_row(), 0, "pivot rows must start at row 0");
    ErHooks { state: Some(e.clone()) }
}

/// `(U, E')` with `E = U * E'` and `E'` reduced.
///
/// Panics if the pivot rows of `e` do not start at row 0.
pub fn reduce_echelon<T: DivisionRing>(e: &EchelonForm<T>) -> (EchelonTransformation<T>, EchelonForm<T>) {
    let seed = ERHook::identity_at(e.params().clone(), e.nrows(), e.ncols(), e.rank(), e.ncols());
    let hook = unfold_er_hooks(e).fold(seed, |acc, h| {
        h.mul(&acc).expect("unfolded ER hooks are adjacent")
    });
    debug_assert_eq!(hook.block.nrows(), 0);
    (hook.et, hook.ef)
}

/// `M = P * L * U * E'` with `E'` the reduced row echelon form of `M`.
#[derive(Clone, PartialEq, Debug)]
pub struct PLUEHook<T: Ring> {
    ple: PLEHook<T>,
    et: EchelonTransformation<T>,
    ef: EchelonForm<T>,
}

impl<T: Ring> PLUEHook<T> {
    pub fn ple(&self) -> &PLEHook<T> {
        &self.ple
    }

    pub fn et(&self) -> &EchelonTransformation<T> {
        &self.et
    }

    /// The reduced row echelon form.
    pub fn ef(&self) -> &EchelonForm<T> {
        &self.ef
    }

    pub fn rank(&self) -> usize {
        self.ef.rank()
    }

    /// `(P, L, U, E')`.
    pub fn to_matrices(&self) -> (Matrix<T>, Matrix<T>, Matrix<T>, Matrix<T>) {
        let (p, l, _) = self.ple.to_matrices();
        (p, l, self.et.to_matrix(), self.ef.to_matrix())
    }
}

pub fn rref<T: DivisionRing>(m: &Matrix<T>) -> PLUEHook<T> {
    let ple = ple(m);
    let (et, ef) = reduce_echelon(ple.ef());
    PLUEHook { ple, et, ef }
}

/// The reduced row echelon form of `m` as a dense matrix.
pub fn rref_matrix<T: DivisionRing>(m: &Matrix<T>) -> Matrix<T> {
    rref(m).ef.to_matrix()
}

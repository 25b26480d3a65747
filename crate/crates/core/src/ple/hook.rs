use crate::algebra::{DivisionRing, Ring};
use crate::matrix::{Matrix, RPermute};

use super::{EchelonForm, EchelonFormRow, LeftTransformation, LeftTransformationColumn, PleError};

/// A triple `(P, L, E)` of size `n` with rank `r` and corank `r'`.
///
/// With the band `s..n-r'` where `s = n - r - r'` (0-based):
///
/// * `P` fixes every index below `s`;
/// * `L` differs from the identity only in the `r` band columns;
/// * `E` is zero outside the `r` band rows, which hold its pivot rows.
///
/// Hooks represent the matrix `P * L * E` and multiply partially: see
/// [`PLEHook::mul`].
#[derive(Clone, PartialEq, Debug)]
pub struct PLEHook<T: Ring> {
    perm: RPermute,
    lt: LeftTransformation<T>,
    ef: EchelonForm<T>,
    rank: usize,
    corank: usize,
}

/// The rank-0 hook of size `nrs` with `P = L = I` and `E = 0`.
pub fn first_hook<T: Ring>(params: T::Params, nrs: usize, ncs: usize) -> PLEHook<T> {
    PLEHook {
        perm: RPermute::identity(nrs),
        lt: LeftTransformation::identity(params.clone(), nrs),
        ef: EchelonForm::zero(params, nrs, ncs),
        rank: 0,
        corank: nrs,
    }
}

impl<T: Ring> PLEHook<T> {
    pub fn size(&self) -> usize {
        self.perm.size()
    }

    pub fn ncols(&self) -> usize {
        self.ef.ncols()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.corank
    }

    /// First row and column of the band, `n - r - r'`.
    pub fn band_start(&self) -> usize {
        self.size() - self.rank - self.corank
    }

    pub fn perm(&self) -> &RPermute {
        &self.perm
    }

    pub fn lt(&self) -> &LeftTransformation<T> {
        &self.lt
    }

    pub fn ef(&self) -> &EchelonForm<T> {
        &self.ef
    }

    pub fn into_parts(self) -> (RPermute, LeftTransformation<T>, EchelonForm<T>) {
        (self.perm, self.lt, self.ef)
    }

    pub fn to_matrices(&self) -> (Matrix<T>, Matrix<T>, Matrix<T>) {
        let params = self.ef.params().clone();
        (self.perm.to_matrix(params), self.lt.to_matrix(), self.ef.to_matrix())
    }

    /// Builds a hook from dense factors satisfying the band conditions.
    pub fn from_matrices(
        p: &Matrix<T>,
        l: &Matrix<T>,
        e: &Matrix<T>,
        rank: usize,
        corank: usize,
    ) -> Result<Self, PleError> {
        check_dense_supports(p, l, e, rank, corank)?;
        let n = p.nrows();
        let s = n - rank - corank;
        let perm = RPermute::from_matrix(p).expect("checked above");
        let columns = (s..s + rank)
            .map(|j| {
                let tail = (j + 1..n).map(|i| l.get(i, j).clone()).collect();
                LeftTransformationColumn::new(j, l.get(j, j).clone(), tail)
            })
            .collect::<Result<_, _>>()?;
        let lt = LeftTransformation::new(l.params().clone(), n, columns)?;
        let rows = (s..s + rank)
            .map(|i| {
                let row = e.row(i);
                let j = row.iter().position(|x| !x.is_zero()).ok_or_else(|| {
                    PleError::Support(format!("band row {i} of E is zero"))
                })?;
                EchelonFormRow::new(j, row[j..].to_vec())
            })
            .collect::<Result<_, _>>()?;
        let ef = EchelonForm::new(e.params().clone(), n, e.ncols(), s, rows)?;
        let hook = PLEHook { perm, lt, ef, rank, corank };
        hook.check_supports()?;
        Ok(hook)
    }

    /// Checks the band conditions on the compact representation.
    pub fn check_supports(&self) -> Result<(), PleError> {
        let n = self.size();
        if self.rank + self.corank > n {
            return Err(PleError::Support(format!(
                "rank {} + corank {} exceeds size {n}",
                self.rank, self.corank
            )));
        }
        let s = self.band_start();
        if let Some(i) = self.perm.first_moved() {
            if i < s {
                return Err(PleError::Support(format!("P moves index {i} below band start {s}")));
            }
        }
        let offsets: Vec<usize> = self.lt.columns().iter().map(|c| c.offset()).collect();
        if self.lt.nrows() != n || offsets != (s..s + self.rank).collect::<Vec<_>>() {
            return Err(PleError::Support(format!(
                "L columns {offsets:?} do not fill the band {s}..{}",
                s + self.rank
            )));
        }
        if self.ef.nrows() != n || self.ef.first_row() != s || self.ef.rank() != self.rank {
            return Err(PleError::Support(format!(
                "E has {} pivot rows from row {}, band is {s}..{}",
                self.ef.rank(),
                self.ef.first_row(),
                s + self.rank
            )));
        }
        Ok(())
    }

    /// Places a hook of size `n2` into size `n >= n2`, fixing the top
    /// `n - n2` rows. Rank and corank are unchanged; the band moves down.
    pub fn embed(mut self, n: usize) -> Result<Self, PleError> {
        let n2 = self.size();
        if n < n2 {
            return Err(PleError::EmbedTooSmall { from: n2, into: n });
        }
        self.perm = self.perm.embed(n);
        self.lt.embed(n);
        self.ef.embed(n);
        Ok(self)
    }

    /// The product `(P1 P2, P2^-1 L1 P2 L2, E1 + E2)`.
    ///
    /// Defined when both hooks have the same size and column count and
    /// `r'1 >= r2 + r'2`. When both ranks are positive the bands must also
    /// be adjacent (`r'1 = r2 + r'2`) and the pivot columns of `rhs` must
    /// lie right of those of `self`.
    pub fn mul(&self, rhs: &Self) -> Result<Self, PleError> {
        self.clone().mul_owned(rhs.clone())
    }

    pub fn mul_owned(mut self, rhs: Self) -> Result<Self, PleError> {
        let n = self.size();
        if rhs.size() != n {
            return Err(PleError::SizeMismatch { left: n, right: rhs.size() });
        }
        if rhs.ncols() != self.ncols() {
            return Err(PleError::ColumnMismatch { left: self.ncols(), right: rhs.ncols() });
        }
        if self.corank < rhs.rank + rhs.corank {
            return Err(PleError::Precondition {
                corank_left: self.corank,
                rank_right: rhs.rank,
                corank_right: rhs.corank,
            });
        }
        if self.rank > 0 && rhs.rank > 0 {
            if self.corank != rhs.rank + rhs.corank {
                return Err(PleError::NotAdjacent {
                    left_end: n - self.corank,
                    right_start: rhs.band_start(),
                });
            }
            let previous = self.ef.rows().last().map(|r| r.offset()).unwrap_or(0);
            let next = rhs.ef.rows()[0].offset();
            if next <= previous {
                return Err(PleError::PivotOrder { previous, next });
            }
        }
        let corank = if rhs.rank > 0 { rhs.corank } else { self.corank };

        // P2^-1 L1 P2 moves tail entries of L1 along the points moved by P2,
        // all of which lie strictly below the columns of L1.
        let moved: Vec<(usize, usize)> = rhs
            .perm
            .images()
            .iter()
            .enumerate()
            .filter(|&(a, &b)| a != b)
            .map(|(a, &b)| (a, b))
            .collect();
        if !moved.is_empty() {
            for col in self.lt.columns_mut() {
                let base = col.offset() + 1;
                let tail = col.tail_mut();
                let sources: Vec<T> = moved.iter().map(|&(_, b)| tail[b - base].clone()).collect();
                for (&(a, _), value) in moved.iter().zip(sources) {
                    tail[a - base] = value;
                }
            }
        }

        let rank = self.rank + rhs.rank;
        let perm = self.perm.compose(&rhs.perm)?;
        let mut lt = self.lt;
        let mut ef = self.ef;
        let (_, rhs_lt, rhs_ef) = rhs.into_parts();
        lt.append(rhs_lt);
        ef.append(rhs_ef);
        ef.set_first_row(n - rank - corank);
        let hook = PLEHook { perm, lt, ef, rank, corank };
        hook.check_supports()?;
        Ok(hook)
    }
}

/// Checks the band conditions of a hook directly on dense factors.
pub fn check_dense_supports<T: Ring>(
    p: &Matrix<T>,
    l: &Matrix<T>,
    e: &Matrix<T>,
    rank: usize,
    corank: usize,
) -> Result<(), PleError> {
    let n = p.nrows();
    if p.shape() != (n, n) || l.shape() != (n, n) || e.nrows() != n {
        return Err(PleError::Support(format!(
            "shapes {:?}, {:?}, {:?} are not compatible",
            p.shape(),
            l.shape(),
            e.shape()
        )));
    }
    if rank + corank > n {
        return Err(PleError::Support(format!("rank {rank} + corank {corank} exceeds {n}")));
    }
    let s = n - rank - corank;
    let band = s..n - corank;
    let perm = RPermute::from_matrix(p)
        .ok_or_else(|| PleError::Support("P is not a permutation matrix".into()))?;
    if let Some(i) = perm.first_moved() {
        if i < s {
            return Err(PleError::Support(format!("P moves index {i} below band start {s}")));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let x = l.get(i, j);
            let ok = if band.contains(&j) {
                match i.cmp(&j) {
                    std::cmp::Ordering::Less => x.is_zero(),
                    std::cmp::Ordering::Equal => !x.is_zero(),
                    std::cmp::Ordering::Greater => true,
                }
            } else {
                (i == j && x.is_one()) || (i != j && x.is_zero())
            };
            if !ok {
                return Err(PleError::Support(format!("L has entry {x} at ({i}, {j})")));
            }
        }
    }
    for i in (0..n).filter(|i| !band.contains(i)) {
        if e.row(i).iter().any(|x| !x.is_zero()) {
            return Err(PleError::Support(format!("E row {i} is nonzero outside the band")));
        }
    }
    Ok(())
}

/// Splits off one elimination step from `m`, whose first column sits at
/// column `col_base` of the full matrix.
///
/// The pivot is the topmost nonzero entry of the leftmost nonzero column.
/// Returns the rank-1 hook of size `m.nrows()` and the rows below the pivot
/// with the pivot column and everything left of it removed, after
/// elimination. `None` when `m` has no nonzero entry.
pub fn split_off_hook<T: DivisionRing>(
    m: Matrix<T>,
    col_base: usize,
) -> Option<(PLEHook<T>, Matrix<T>)> {
    let (k, w) = m.shape();
    let (j, p) = (0..w).find_map(|j| (0..k).find(|&i| !m.get(i, j).is_zero()).map(|i| (j, i)))?;
    let params = m.params().clone();
    let mut rows = m.into_rows();
    rows.swap(0, p);
    let mut rows = rows.into_iter();
    let top = rows.next().expect("k > 0");
    let pivot = top[j].clone();
    let inv = pivot.reciprocal().expect("pivot is nonzero");
    let e: Vec<T> = std::iter::once(T::one(&params))
        .chain(top[j + 1..].iter().map(|x| inv.mul(x)))
        .collect();

    let mut tail = Vec::with_capacity(k - 1);
    let remainder: Vec<Vec<T>> = rows
        .map(|mut row| {
            let t = row[j].clone();
            let rest: Vec<T> = if t.is_zero() {
                row.drain(j + 1..).collect()
            } else {
                row[j + 1..]
                    .iter()
                    .zip(&e[1..])
                    .map(|(x, ec)| if ec.is_zero() { x.clone() } else { x.sub(&t.mul(ec)) })
                    .collect()
            };
            tail.push(t);
            rest
        })
        .collect();

    let lt = LeftTransformation::new(
        params.clone(),
        k,
        vec![LeftTransformationColumn::new(0, pivot, tail).expect("nonzero pivot")],
    )
    .expect("single column fits");
    let ef = EchelonForm::from_parts(
        params.clone(),
        k,
        col_base + w,
        0,
        vec![EchelonFormRow::from_parts(col_base + j, e)],
    );
    let hook = PLEHook { perm: RPermute::transposition(k, 0, p), lt, ef, rank: 1, corank: k - 1 };
    let remainder = Matrix::from_parts(params, k - 1, w - j - 1, remainder);
    Some((hook, remainder))
}

/// The hooks of the elimination of `m`, each embedded into `m.nrows()`.
pub struct PleHooks<T: DivisionRing> {
    nrows: usize,
    state: Option<(Matrix<T>, usize)>,
}

impl<T: DivisionRing> Iterator for PleHooks<T> {
    type Item = PLEHook<T>;

    fn next(&mut self) -> Option<PLEHook<T>> {
        let (m, col_base) = self.state.take()?;
        let (hook, rest) = split_off_hook(m, col_base)?;
        let next_base = hook.ef.rows()[0].offset() + 1;
        self.state = Some((rest, next_base));
        Some(hook.embed(self.nrows).expect("remainders shrink"))
    }
}

pub fn unfold_hooks<T: DivisionRing>(m: &Matrix<T>) -> PleHooks<T> {
    PleHooks { nrows: m.nrows(), state: Some((m.clone(), 0)) }
}

/// Normalized PLE decomposition: the product of [`first_hook`] and all
/// hooks of [`unfold_hooks`].
pub fn ple<T: DivisionRing>(m: &Matrix<T>) -> PLEHook<T> {
    unfold_hooks(m).fold(first_hook(m.params().clone(), m.nrows(), m.ncols()), |acc, h| {
        acc.mul_owned(h).expect("unfolded hooks satisfy the product precondition")
    })
}

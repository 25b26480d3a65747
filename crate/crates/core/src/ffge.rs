//! Fraction-free (Bareiss) elimination over the integers.
//!
//! One-step recurrence: after pivot `p` with previous pivot `d`,
//! `a[i][j] <- (p * a[i][j] - a[i][k] * a[k][j]) / d`, every division exact.
//! Pivots are the topmost nonzero entry of the leftmost remaining column,
//! the same choice as [`crate::ple::ple`].

use dashu_int::ops::DivRem;
use dashu_int::{IBig, UBig};
use thiserror::Error;

use crate::algebra::{Integer, Rational};
use crate::matrix::{Matrix, RPermute};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FfgeError {
    /// A division that must be exact left a remainder. Indicates a bug.
    #[error("inexact division at ({row}, {col})")]
    InexactDivision { row: usize, col: usize },
}

#[derive(Clone, PartialEq, Debug)]
pub struct FfgeResult {
    /// Unnormalized echelon form of `m.permute_rows(&perm)`.
    pub echelon: Matrix<Integer>,
    pub perm: RPermute,
    pub pivot_cols: Vec<usize>,
    /// Determinant for square input (zero when singular). For other shapes,
    /// the signed determinant of the pivot-column minor when the rows are
    /// independent, zero otherwise.
    pub det_factor: IBig,
    pub rank: usize,
}

fn exact_div(num: IBig, den: &IBig, row: usize, col: usize) -> Result<IBig, FfgeError> {
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(FfgeError::InexactDivision { row, col })
    }
}

pub fn ffge_int(m: &Matrix<Integer>) -> Result<FfgeResult, FfgeError> {
    let (n, w) = m.shape();
    let mut a: Vec<Vec<IBig>> =
        m.rows().iter().map(|r| r.iter().map(|x| x.as_ibig().clone()).collect()).collect();
    let mut perm = RPermute::identity(n);
    let mut negate = false;
    let mut prev = IBig::ONE;
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for k in 0..w {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a[i][k].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            perm = RPermute::transposition(n, p, r).compose(&perm).expect("same size");
            negate = !negate;
        }
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[k];
        for (offset, row) in bottom.iter_mut().enumerate() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..w {
                let mut num = pivot * &row[j];
                if !factor.is_zero() {
                    num -= &factor * &pivot_row[j];
                }
                row[j] = exact_div(num, &prev, r + 1 + offset, j)?;
            }
        }
        prev = pivot.clone();
        pivot_cols.push(k);
        r += 1;
    }
    let det_factor = if r == n {
        if negate {
            -prev
        } else {
            prev
        }
    } else {
        IBig::ZERO
    };
    let rows = a.into_iter().map(|row| row.into_iter().map(Integer).collect()).collect();
    Ok(FfgeResult {
        echelon: Matrix::from_parts((), n, w, rows),
        perm,
        pivot_cols,
        det_factor,
        rank: r,
    })
}

/// Reduced row echelon form from a fraction-free echelon form.
///
/// With `d` the last pivot, `d * E'` is integral; it is found by
/// fraction-free back substitution on the pivot columns and divided by `d`
/// at the end.
#[allow(clippy::needless_range_loop)]
pub fn normalize(res: &FfgeResult) -> Result<Matrix<Rational>, FfgeError> {
    let (n, w) = res.echelon.shape();
    let r = res.rank;
    let mut out = Matrix::<Rational>::zeros((), n, w).into_rows();
    if r == 0 {
        return Ok(Matrix::from_parts((), n, w, out));
    }
    let u = |i: usize, j: usize| res.echelon.get(i, j).as_ibig();
    let d = u(r - 1, res.pivot_cols[r - 1]).clone();
    let mut x = vec![IBig::ZERO; r];
    for j in res.pivot_cols[0]..w {
        if let Ok(k) = res.pivot_cols.binary_search(&j) {
            out[k][j] = Rational::one();
            continue;
        }
        for i in (0..r).rev() {
            if res.pivot_cols[i] > j {
                x[i] = IBig::ZERO;
                continue;
            }
            let mut num = &d * u(i, j);
            for k in i + 1..r {
                if !x[k].is_zero() {
                    num -= u(i, res.pivot_cols[k]) * &x[k];
                }
            }
            x[i] = exact_div(num, u(i, res.pivot_cols[i]), i, j)?;
        }
        for i in 0..r {
            out[i][j] = Rational::new(x[i].clone(), d.clone()).expect("nonzero pivot");
        }
    }
    Ok(Matrix::from_parts((), n, w, out))
}

/// Fraction-free elimination of a rational matrix after clearing
/// denominators row by row.
#[derive(Clone, PartialEq, Debug)]
pub struct FfgeRational {
    pub result: FfgeResult,
    /// Row `i` of the input was multiplied by `row_scales[i]`, the least
    /// common multiple of its denominators.
    pub row_scales: Vec<UBig>,
}

pub fn clear_denominators(m: &Matrix<Rational>) -> (Matrix<Integer>, Vec<UBig>) {
    let mut scales = Vec::with_capacity(m.nrows());
    let rows = m
        .rows()
        .iter()
        .map(|row| {
            let scale = row.iter().fold(UBig::ONE, |acc, x| lcm(acc, x.denominator()));
            let ints = row
                .iter()
                .map(|x| Integer(x.numerator() * IBig::from(&scale / x.denominator())))
                .collect();
            scales.push(scale);
            ints
        })
        .collect();
    (Matrix::from_parts((), m.nrows(), m.ncols(), rows), scales)
}

fn lcm(a: UBig, b: &UBig) -> UBig {
    use dashu_int::ops::Gcd;
    if b.is_one() {
        return a;
    }
    let g = (&a).gcd(b);
    a / g * b
}

pub fn ffge_rational(m: &Matrix<Rational>) -> Result<FfgeRational, FfgeError> {
    let (ints, row_scales) = clear_denominators(m);
    Ok(FfgeRational { result: ffge_int(&ints)?, row_scales })
}

/// Reduced row echelon form of `m` via fraction-free elimination.
pub fn ffge_rref(m: &Matrix<Rational>) -> Result<Matrix<Rational>, FfgeError> {
    normalize(&ffge_rational(m)?.result)
}

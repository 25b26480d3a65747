//! Independent oracles shared by the integration tests.
//!
//! The oracles share no code with the elimination under test: reduced forms
//! come from textbook Gauss-Jordan elimination and determinants from
//! cofactor expansion. The product and hook helpers wrap the code under
//! test for reuse across suites.
#![allow(dead_code)]

use dashu_int::IBig;
use exactple::algebra::{DivisionRing, Integer, Ring};
use exactple::matrix::Matrix;
use exactple::ple::{first_hook, ple, unfold_hooks, PLEHook};
use exactple::reduce::rref;

/// Reduced row echelon form and rank by Gauss-Jordan elimination.
pub fn gauss_jordan<T: DivisionRing>(m: &Matrix<T>) -> (Matrix<T>, usize) {
    let (n, w) = m.shape();
    let mut a: Vec<Vec<T>> = m.rows().to_vec();
    let mut rank = 0;
    for col in 0..w {
        let Some(p) = (rank..n).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].reciprocal().expect("nonzero pivot");
        a[rank] = a[rank].iter().map(|x| inv.mul(x)).collect();
        for i in 0..n {
            if i != rank && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                let pivot_row = a[rank].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        rank += 1;
    }
    (Matrix::from_fn(m.params().clone(), n, w, |i, j| a[i][j].clone()), rank)
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<IBig>]) -> IBig {
    match m.len() {
        0 => IBig::ONE,
        1 => m[0][0].clone(),
        n => {
            let mut det = IBig::ZERO;
            for j in 0..n {
                if m[0][j] == IBig::ZERO {
                    continue;
                }
                let minor: Vec<Vec<IBig>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][j] * cofactor_det(&minor);
                if j % 2 == 0 {
                    det += term;
                } else {
                    det -= term;
                }
            }
            det
        }
    }
}

pub fn int_rows(m: &Matrix<Integer>) -> Vec<Vec<IBig>> {
    m.rows().iter().map(|r| r.iter().map(|x| x.as_ibig().clone()).collect()).collect()
}

pub fn naive_gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

pub fn ple_product<T: DivisionRing>(m: &Matrix<T>) -> Matrix<T> {
    let (p, l, e) = ple(m).to_matrices();
    p.mul(&l).and_then(|x| x.mul(&e)).expect("factor shapes agree")
}

pub fn plue_product<T: DivisionRing>(m: &Matrix<T>) -> Matrix<T> {
    let (p, l, u, e) = rref(m).to_matrices();
    p.mul(&l).and_then(|x| x.mul(&u)).and_then(|x| x.mul(&e)).expect("factor shapes agree")
}

fn same_hook<T: Ring>(a: &PLEHook<T>, b: &PLEHook<T>) -> bool {
    a.rank() == b.rank() && a.corank() == b.corank() && a.to_matrices() == b.to_matrices()
}

/// Checks the hook algebra on the unfolded sequence of `m`: the product
/// precondition at every fold step, associativity on consecutive triples,
/// and `first_hook` as a left identity.
pub fn check_hook_algebra<T: DivisionRing>(m: &Matrix<T>) -> Result<(), String> {
    let hooks: Vec<PLEHook<T>> = unfold_hooks(m).collect();
    let (n, w) = m.shape();
    let unit = first_hook(m.params().clone(), n, w);
    let mut acc = unit.clone();
    for (k, h) in hooks.iter().enumerate() {
        if acc.corank() < h.rank() + h.corank() {
            return Err(format!(
                "step {k}: corank {} < {} + {}",
                acc.corank(),
                h.rank(),
                h.corank()
            ));
        }
        let left_unit = unit.mul(h).map_err(|e| format!("first_hook * hook {k}: {e}"))?;
        if !same_hook(&left_unit, h) {
            return Err(format!("first_hook is not a left identity for hook {k}"));
        }
        acc = acc.mul(h).map_err(|e| format!("fold step {k}: {e}"))?;
    }
    if !same_hook(&acc, &ple(m)) {
        return Err("fold of the unfolded hooks differs from ple".into());
    }
    for (k, t) in hooks.windows(3).enumerate() {
        let left = t[0].mul(&t[1]).and_then(|x| x.mul(&t[2]));
        let right = t[1].mul(&t[2]).and_then(|x| t[0].mul(&x));
        match (left, right) {
            (Ok(l), Ok(r)) if same_hook(&l, &r) => {}
            (Ok(_), Ok(_)) => return Err(format!("associativity fails at triple {k}")),
            (l, r) => return Err(format!("triple {k}: {:?} / {:?}", l.err(), r.err())),
        }
    }
    Ok(())
}

pub mod strategies {
    use exactple::algebra::{PrimeField, PrimeFieldElement, Rational};
    use exactple::matrix::Matrix;
    use proptest::collection::vec;
    use proptest::prelude::*;

    pub fn rational() -> impl Strategy<Value = Rational> {
        // Zero-heavy so that rank deficiency and pivot search are exercised.
        prop_oneof![
            2 => Just(Rational::zero()),
            5 => (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d).unwrap()),
        ]
    }

    pub fn rational_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
        (0..=max_rows, 0..=max_cols).prop_flat_map(|(r, c)| {
            vec(vec(rational(), c), r).prop_map(move |rows| Matrix::from_fn((), r, c, |i, j| rows[i][j].clone()))
        })
    }

    pub fn fp_matrix(
        field: PrimeField,
        max_rows: usize,
        max_cols: usize,
    ) -> impl Strategy<Value = Matrix<PrimeFieldElement>> {
        let p = field.modulus();
        (0..=max_rows, 0..=max_cols).prop_flat_map(move |(r, c)| {
            vec(vec(prop_oneof![1 => Just(0u64), 3 => 0..p], c), r)
                .prop_map(move |rows| Matrix::from_fn(field, r, c, |i, j| field.element_from_residue(rows[i][j])))
        })
    }

    pub fn int_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix<exactple::algebra::Integer>> {
        (0..=max_rows, 0..=max_cols).prop_flat_map(|(r, c)| {
            vec(vec(prop_oneof![1 => Just(0i64), 3 => -40i64..=40], c), r)
                .prop_map(move |rows| Matrix::from_fn((), r, c, |i, j| rows[i][j].into()))
        })
    }
}

mod common;

use common::strategies::{fp_matrix, rational_matrix};
use common::{check_hook_algebra, gauss_jordan, ple_product};
use exactple::algebra::{PrimeField, Rational};
use exactple::matrix::Matrix;
use exactple::ple::{check_dense_supports, first_hook, ple, split_off_hook, unfold_hooks, EchelonForm, PleError};
use proptest::prelude::*;

fn f(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reconstructs_over_q(m in rational_matrix(7, 7)) {
        prop_assert_eq!(ple_product(&m), m);
    }

    #[test]
    fn reconstructs_over_small_fields(m in fp_matrix(f(3), 6, 6), n in fp_matrix(f(1_000_000_007), 6, 8)) {
        prop_assert_eq!(ple_product(&m), m);
        prop_assert_eq!(ple_product(&n), n);
    }

    #[test]
    fn rank_matches_gauss_jordan(m in rational_matrix(6, 6), n in fp_matrix(f(2), 6, 6)) {
        prop_assert_eq!(ple(&m).rank(), gauss_jordan(&m).1);
        prop_assert_eq!(ple(&n).rank(), gauss_jordan(&n).1);
    }

    #[test]
    fn factors_have_the_promised_shape(m in rational_matrix(6, 7)) {
        let h = ple(&m);
        prop_assert_eq!(h.rank() + h.corank(), m.nrows());
        prop_assert!(h.check_supports().is_ok());
        let (p, l, e) = h.to_matrices();
        prop_assert!(check_dense_supports(&p, &l, &e, h.rank(), h.corank()).is_ok());
        // E is a normalized echelon form: leading ones in increasing columns.
        prop_assert!(EchelonForm::from_matrix(&e).is_ok());
        // The echelon form of an echelon form is itself.
        let again = ple(&e);
        prop_assert!(again.perm().is_identity());
        prop_assert_eq!(again.to_matrices().2, e);
    }

    #[test]
    fn hook_algebra_holds(m in rational_matrix(6, 6), n in fp_matrix(f(5), 6, 6)) {
        prop_assert_eq!(check_hook_algebra(&m), Ok(()));
        prop_assert_eq!(check_hook_algebra(&n), Ok(()));
    }

    #[test]
    fn unfold_yields_one_hook_per_pivot(m in rational_matrix(6, 6)) {
        let hooks: Vec<_> = unfold_hooks(&m).collect();
        prop_assert_eq!(hooks.len(), ple(&m).rank());
        prop_assert!(hooks.iter().all(|h| h.rank() == 1 && h.size() == m.nrows()));
    }

    #[test]
    fn split_off_removes_one_pivot(m in rational_matrix(5, 5)) {
        match split_off_hook(m.clone(), 0) {
            None => prop_assert!(m.is_zero()),
            Some((hook, rest)) => {
                prop_assert_eq!(hook.rank(), 1);
                prop_assert_eq!(rest.nrows() + 1, m.nrows());
                prop_assert_eq!(gauss_jordan(&rest).1 + 1, gauss_jordan(&m).1);
            }
        }
    }
}

#[test]
fn products_violating_the_precondition_are_rejected() {
    let m: Matrix<Rational> = Matrix::from_i64_rows(&[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
    let hooks: Vec<_> = unfold_hooks(&m).collect();
    assert_eq!(hooks.len(), 2);
    let err = hooks[1].mul(&hooks[0]).unwrap_err();
    assert!(matches!(err, PleError::Precondition { corank_left: 1, rank_right: 1, corank_right: 2 }));
    let full = ple(&m);
    assert!(full.mul(&hooks[0]).is_err());
}

#[test]
fn first_hook_of_a_zero_matrix_is_the_whole_decomposition() {
    let z: Matrix<Rational> = Matrix::zeros((), 3, 4);
    assert_eq!(ple(&z), first_hook((), 3, 4));
    let (p, l, e) = ple(&z).to_matrices();
    assert_eq!(p, Matrix::identity((), 3));
    assert_eq!(l, Matrix::identity((), 3));
    assert!(e.is_zero());
}

#[test]
fn degenerate_shapes() {
    for (r, c) in [(0, 0), (0, 3), (3, 0), (1, 1)] {
        let m: Matrix<Rational> = Matrix::zeros((), r, c);
        assert_eq!(ple_product(&m), m);
        assert_eq!(ple(&m).rank(), 0);
    }
}

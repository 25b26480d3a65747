//! Fraction-free elimination: the integer echelon form with its determinant,
//! then the normalized reduced form.
use exactple::algebra::{Integer, Rational};
use exactple::ffge::{ffge_int, ffge_rational, normalize};
use exactple::matrix::Matrix;
use exactple::reduce::rref_matrix;

fn main() {
    let z: Matrix<Integer> = Matrix::from_i64_rows(&[&[2, 4, 1], &[3, 5, 7], &[1, 1, 1]]).unwrap();
    let res = ffge_int(&z).expect("exact divisions");
    println!("echelon:\n{}\ndeterminant {}", res.echelon, res.det_factor);

    let q: Matrix<Rational> = Matrix::from_rows(vec![
        vec!["1/2".parse().unwrap(), "2/3".parse().unwrap(), "1".parse().unwrap()],
        vec!["3/4".parse().unwrap(), "-1/5".parse().unwrap(), "2".parse().unwrap()],
    ])
    .unwrap();
    let scaled = ffge_rational(&q).expect("exact divisions");
    println!("row scales {:?}", scaled.row_scales.iter().map(ToString::to_string).collect::<Vec<_>>());
    let e = normalize(&scaled.result).expect("exact divisions");
    assert_eq!(e, rref_matrix(&q));
    println!("normalized form matches classical elimination:\n{e}");
}

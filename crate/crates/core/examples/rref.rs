//! Reduced row echelon form through the PLUE decomposition.
use exactple::algebra::Rational;
use exactple::matrix::Matrix;
use exactple::reduce::rref;

fn main() {
    let m: Matrix<Rational> = Matrix::from_i64_rows(&[
        &[0, 2, 4, 1],
        &[3, 1, 0, 2],
        &[3, 3, 4, 3],
    ])
    .expect("rectangular");
    let plue = rref(&m);
    let (p, l, u, e) = plue.to_matrices();
    println!("rank {}", plue.rank());
    println!("P =\n{p}\nL =\n{l}\nU =\n{u}\nE' =\n{e}");
    assert!(plue.ef().is_reduced());
    let back = p.mul(&l).and_then(|x| x.mul(&u)).and_then(|x| x.mul(&e)).unwrap();
    assert_eq!(back, m);
}

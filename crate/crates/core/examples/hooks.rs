//! Elimination as a fold over hooks: unfold a matrix into one hook per
//! pivot, inspect them, and multiply them back together.
use exactple::algebra::Rational;
use exactple::matrix::Matrix;
use exactple::ple::{first_hook, ple, unfold_hooks};

fn main() {
    let m: Matrix<Rational> =
        Matrix::from_i64_rows(&[&[0, 0, 1], &[2, 4, 0], &[1, 2, 5], &[3, 1, 1]]).unwrap();
    let hooks: Vec<_> = unfold_hooks(&m).collect();
    for (k, h) in hooks.iter().enumerate() {
        println!(
            "hook {k}: rank {}, corank {}, band starts at row {}, permutation {:?}",
            h.rank(),
            h.corank(),
            h.band_start(),
            h.perm().images()
        );
    }

    let (nrs, ncs) = m.shape();
    let mut acc = first_hook((), nrs, ncs);
    for h in &hooks {
        acc = acc.mul(h).expect("unfolded hooks compose");
    }
    assert_eq!(acc, ple(&m));
    println!("folded product has rank {} and corank {}", acc.rank(), acc.corank());

    // The left factor must leave room for the right factor's band.
    if let [a, b, ..] = hooks.as_slice() {
        match b.mul(a) {
            Ok(_) => println!("reversed order unexpectedly composed"),
            Err(e) => println!("reversed order rejected: {e}"),
        }
    }
}

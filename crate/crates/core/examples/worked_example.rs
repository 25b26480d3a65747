//! PLE decomposition of a small integer matrix with a known factorization.
use exactple::ple::ple;
use exactple::tools::io::to_text;
use exactple::tools::selftest::worked_example;

fn main() {
    let m = worked_example();
    let hook = ple(&m);
    let (p, l, e) = hook.to_matrices();
    println!("rank {}, permutation {:?}", hook.rank(), hook.perm().images());
    println!("L =\n{}", to_text(&l));
    println!("E =\n{}", to_text(&e));
    let product = p.mul(&l).and_then(|pl| pl.mul(&e)).expect("compatible shapes");
    assert_eq!(product, m);
    println!("P*L*E reproduces the input");
}

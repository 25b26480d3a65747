//! The same elimination over a word-size prime field.
use exactple::algebra::PrimeField;
use exactple::ple::ple;
use exactple::reduce::rref_matrix;
use exactple::tools::{gen_random_fp_matrix, gen_random_fp_ple_matrix};

fn main() {
    let field = PrimeField::new(1_000_000_007).expect("prime modulus");
    let m = gen_random_fp_matrix(field, 5, 7, 42);
    println!("random 5x7 over F_p has rank {}", ple(&m).rank());

    let low = gen_random_fp_ple_matrix(field, 6, 6, 3, 7);
    let hook = ple(&low);
    println!("generated with rank 3, found rank {}", hook.rank());
    println!("reduced form:\n{}", rref_matrix(&low));

    let f5 = PrimeField::new(5).unwrap();
    let small = gen_random_fp_matrix(f5, 3, 4, 1);
    println!("over F5:\n{small}\nreduces to\n{}", rref_matrix(&small));
}

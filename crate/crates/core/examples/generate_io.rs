//! Seeded generation of random and random-PLE matrices, written to and
//! read back from the text format.
use dashu_int::ops::BitTest;
use exactple::ple::ple;
use exactple::tools::io::{read_matrix, write_matrix, AnyMatrix};
use exactple::tools::{gen_random_matrix, gen_random_ple_matrix_with_rank, GenParams};

fn max_den_bits(m: &exactple::matrix::Matrix<exactple::algebra::Rational>) -> usize {
    m.rows().iter().flatten().map(|x| x.denominator().bit_len()).max().unwrap_or(0)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = GenParams::new(6, 8, 1, 3, 1, 2024);
    let random = gen_random_matrix(&params)?;
    let structured = gen_random_ple_matrix_with_rank(&params, 4)?;
    assert_eq!(random, gen_random_matrix(&params)?, "same seed, same matrix");

    for (name, m) in [("random", &random), ("random-PLE", &structured)] {
        let (_, l, e) = ple(m).to_matrices();
        println!(
            "{name}: rank {}, largest denominator in L and E has {} bits",
            ple(m).rank(),
            max_den_bits(&l).max(max_den_bits(&e))
        );
    }

    let path = std::env::temp_dir().join("exactple-example.txt");
    write_matrix(&path, &structured)?;
    match read_matrix(&path)? {
        AnyMatrix::Rational(back) => assert_eq!(back, structured),
        AnyMatrix::PrimeField(_) => unreachable!("rational header"),
    }
    println!("round trip through {} succeeded", path.display());
    std::fs::remove_file(path)?;
    Ok(())
}

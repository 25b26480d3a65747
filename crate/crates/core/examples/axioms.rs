//! Checking the division-ring laws of a coefficient domain.
use exactple::algebra::{AxiomSuite, PrimeField, Rational};
use exactple::tools::uniform_i64_inclusive;

fn main() {
    let f7 = PrimeField::new(7).unwrap();
    let elements: Vec<_> = f7.elements().collect();
    let report = AxiomSuite::new(f7).commutative(true).run_exhaustive(&elements);
    println!("F7, exhaustive:\n{report}");

    let report = AxiomSuite::<Rational>::new(()).commutative(true).run_random(2_000, 11, |rng| {
        let num = uniform_i64_inclusive(rng, -1000, 1000);
        let den = uniform_i64_inclusive(rng, 1, 1000);
        Rational::new(num, den).unwrap()
    });
    println!("Q, 2000 random triples:\n{report}");
    assert!(report.all_passed());
}

mod common;

use common::naive_gcd;
use dashu_int::IBig;
use exactple::algebra::{xgcd, AlgebraError, AxiomSuite, DivisionRing, PrimeField, Rational, Ring};
use exactple::tools::uniform_i64_inclusive;
use proptest::prelude::*;

proptest! {
    #[test]
    fn bezout_identity_for_machine_words(a in 0i64..1_000_000_000, b in 0i64..1_000_000_000) {
        let (x, y) = xgcd(a, b);
        prop_assert_eq!(x * a + y * b, naive_gcd(a, b));
    }

    #[test]
    fn bezout_identity_for_big_integers(a in any::<u64>(), b in any::<u64>(), shift in 0usize..200) {
        let (a, b) = (IBig::from(a) << shift, IBig::from(b) << (shift / 2));
        let (x, y) = xgcd(a.clone(), b.clone());
        let g = &x * &a + &y * &b;
        prop_assert!(g >= IBig::ZERO);
        if g != IBig::ZERO {
            prop_assert_eq!(&a % &g, IBig::ZERO);
            prop_assert_eq!(&b % &g, IBig::ZERO);
        }
    }

    #[test]
    fn prime_field_inverse_agrees_with_search(residue in 1u64..257) {
        let field = PrimeField::new(257).unwrap();
        let x = field.element_from_residue(residue);
        let inv = x.reciprocal().unwrap();
        let searched = (1..257).find(|k| (residue * k) % 257 == 1).unwrap();
        prop_assert_eq!(inv.residue(), searched);
    }

    #[test]
    fn rational_arithmetic_matches_cross_multiplication(
        (a, b) in (-1000i64..1000, 1i64..1000), (c, d) in (-1000i64..1000, 1i64..1000)
    ) {
        let x = Rational::new(a, b).unwrap();
        let y = Rational::new(c, d).unwrap();
        prop_assert_eq!(x.add(&y), Rational::new(a * d + c * b, b * d).unwrap());
        prop_assert_eq!(x.mul(&y), Rational::new(a * c, b * d).unwrap());
        prop_assert_eq!(x.sub(&y), Rational::new(a * d - c * b, b * d).unwrap());
    }
}

#[test]
fn axioms_hold_for_several_prime_fields() {
    for p in [2, 3, 5, 11] {
        let field = PrimeField::new(p).unwrap();
        let elements: Vec<_> = field.elements().collect();
        let report = AxiomSuite::new(field).commutative(true).run_exhaustive(&elements);
        assert!(report.all_passed(), "F_{p}:\n{report}");
    }
    let big = PrimeField::new(1_000_000_007).unwrap();
    let report = AxiomSuite::new(big).commutative(true).run_random(2000, 1, |rng| big.random_element(rng));
    assert!(report.all_passed(), "{report}");
}

#[test]
fn rationals_pass_the_axiom_suite() {
    let report = AxiomSuite::<Rational>::new(()).commutative(true).run_random(1000, 5, |rng| {
        Rational::new(uniform_i64_inclusive(rng, -99, 99), uniform_i64_inclusive(rng, 1, 99)).unwrap()
    });
    assert!(report.all_passed(), "{report}");
}

#[test]
fn domain_errors() {
    assert_eq!(Rational::new(1, 0), Err(AlgebraError::ZeroDenominator));
    assert_eq!(Rational::zero().reciprocal(), Err(AlgebraError::ZeroReciprocal));
    assert!(matches!(PrimeField::new(91), Err(AlgebraError::NotPrime(91))));
    let (f5, f7) = (PrimeField::new(5).unwrap(), PrimeField::new(7).unwrap());
    assert!(f5.element(1).try_add(&f7.element(1)).is_err());
    assert_eq!("3/-6".parse::<Rational>().ok(), Rational::new(-1, 2).ok());
    assert!("1/0".parse::<Rational>().is_err());
}

//! Fast consistency checks run by the `selftest` CLI verb.

use std::fmt;

use crate::algebra::{xgcd, AxiomSuite, PrimeField, Rational};
use crate::ffge::ffge_rref;
use crate::matrix::Matrix;
use crate::ple::ple;
use crate::reduce::rref;

use super::random::{gen_random_fp_matrix, gen_random_matrix, gen_random_ple_matrix, uniform_i64_inclusive, GenParams};

/// The 4×6 integer matrix whose decomposition has a known closed form.
pub fn worked_example() -> Matrix<Rational> {
    Matrix::from_i64_rows(&[
        &[84, 168, 588, -252, 336, 49],
        &[672, 1344, 4704, -1992, 4722, 2552],
        &[-504, -1008, -3528, 2100, -1575, -4998],
        &[168, 336, 1176, -168, 1428, -2002],
    ])
    .expect("rectangular literal")
}

#[derive(Clone, Debug)]
pub struct SelfCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for SelfCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> SelfCheck {
    SelfCheck { name, passed, detail: detail.into() }
}

fn reconstructs<T: crate::algebra::DivisionRing>(m: &Matrix<T>) -> bool {
    let (p, l, e) = ple(m).to_matrices();
    let ple_ok = p.mul(&l).and_then(|pl| pl.mul(&e)).is_ok_and(|x| &x == m);
    let (p, l, u, e2) = rref(m).to_matrices();
    let plue_ok = p
        .mul(&l)
        .and_then(|x| x.mul(&u))
        .and_then(|x| x.mul(&e2))
        .is_ok_and(|x| &x == m);
    ple_ok && plue_ok
}

/// Runs every check with the given seed.
pub fn run(seed: u64) -> Vec<SelfCheck> {
    let mut out = Vec::new();

    let m = worked_example();
    let hook = ple(&m);
    out.push(check(
        "worked example",
        reconstructs(&m) && hook.perm().is_identity() && hook.rank() == 3,
        format!("rank {}", hook.rank()),
    ));

    let mut failures = 0;
    for k in 0..50 {
        let params = GenParams::new(k % 7, (k * 3) % 8, 1, 2, 1, seed.wrapping_add(k as u64));
        let q = gen_random_matrix(&params).expect("valid parameters");
        let q_ple = gen_random_ple_matrix(&params).expect("valid parameters");
        let f = gen_random_fp_matrix(PrimeField::new(1_000_000_007).expect("prime"), k % 7, (k * 5) % 9, seed ^ k as u64);
        if !(reconstructs(&q) && reconstructs(&q_ple) && reconstructs(&f)) {
            failures += 1;
        }
    }
    out.push(check("reconstruction", failures == 0, format!("{failures} of 50 seeds failed")));

    let mut disagreements = 0;
    for k in 0..30u64 {
        let params = GenParams::new(1 + (k as usize % 6), 1 + (k as usize % 7), 1, 2, 1, seed.wrapping_add(k));
        let q = gen_random_ple_matrix(&params).expect("valid parameters");
        if ffge_rref(&q).ok() != Some(crate::reduce::rref_matrix(&q)) {
            disagreements += 1;
        }
    }
    out.push(check("fraction-free agrees", disagreements == 0, format!("{disagreements} of 30 disagree")));

    let f7 = PrimeField::new(7).expect("prime");
    let elements: Vec<_> = f7.elements().collect();
    let report = AxiomSuite::new(f7).commutative(true).run_exhaustive(&elements);
    out.push(check("F7 axioms", report.all_passed(), format!("{} laws", report.outcomes.len())));
    let report = AxiomSuite::<Rational>::new(()).commutative(true).run_random(500, seed, |rng| {
        let num = uniform_i64_inclusive(rng, -50, 50);
        let den = uniform_i64_inclusive(rng, 1, 50);
        Rational::new(num, den).expect("nonzero denominator")
    });
    out.push(check("Q axioms", report.all_passed(), format!("{} laws", report.outcomes.len())));

    let mut bad = 0;
    for a in 0..=40i64 {
        for b in 0..=40i64 {
            let (x, y) = xgcd(a, b);
            if x * a + y * b != naive_gcd(a, b) {
                bad += 1;
            }
        }
    }
    out.push(check("xgcd", bad == 0, format!("{bad} failing pairs")));
    out
}

fn naive_gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

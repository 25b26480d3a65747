//! Randomized and exhaustive checks of the ring and division-ring axioms.
//!
//! A failing axiom is a report entry carrying a counterexample, never a
//! panic, so callers can assert on the whole report or inspect single laws.

use std::fmt;

use rand_core::SeedableRng;

use super::DivisionRing;
use crate::tools::Prng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomOutcome {
    pub axiom: &'static str,
    /// Number of instances evaluated.
    pub checks: usize,
    /// First violating instance, if any.
    pub counterexample: Option<String>,
}

impl AxiomOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(AxiomOutcome::passed)
    }

    pub fn outcome(&self, axiom: &str) -> Option<&AxiomOutcome> {
        self.outcomes.iter().find(|o| o.axiom == axiom)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomOutcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            match &o.counterexample {
                None => writeln!(f, "PASS {} ({} checks)", o.axiom, o.checks)?,
                Some(cx) => writeln!(f, "FAIL {}: {}", o.axiom, cx)?,
            }
        }
        Ok(())
    }
}

pub const ADDITIVE_ASSOCIATIVITY: &str = "additive associativity";
pub const ADDITIVE_COMMUTATIVITY: &str = "additive commutativity";
pub const ADDITIVE_IDENTITY: &str = "additive identity";
pub const ADDITIVE_INVERSE: &str = "additive inverse";
pub const SUBTRACTION: &str = "subtraction";
pub const MULTIPLICATIVE_ASSOCIATIVITY: &str = "multiplicative associativity";
pub const MULTIPLICATIVE_COMMUTATIVITY: &str = "multiplicative commutativity";
pub const MULTIPLICATIVE_IDENTITY: &str = "multiplicative identity";
pub const LEFT_DISTRIBUTIVITY: &str = "left distributivity";
pub const RIGHT_DISTRIBUTIVITY: &str = "right distributivity";
pub const DECIDABLE_ZERO: &str = "decidable zero";
pub const UNIT_IFF_NONZERO: &str = "unit iff nonzero";
pub const RECIPROCAL: &str = "reciprocal";

type Law<T> = fn(&T, &T, &T, &T, &T) -> bool;

/// Axiom checks for one coefficient domain.
///
/// ```
/// use exactple::algebra::{AxiomSuite, PrimeField};
///
/// let f7 = PrimeField::new(7).unwrap();
/// let elements: Vec<_> = f7.elements().collect();
/// let report = AxiomSuite::new(f7).commutative(true).run_exhaustive(&elements);
/// assert!(report.all_passed());
/// ```
pub struct AxiomSuite<T: DivisionRing> {
    params: T::Params,
    commutative: bool,
}

impl<T: DivisionRing> AxiomSuite<T> {
    pub fn new(params: T::Params) -> Self {
        AxiomSuite { params, commutative: false }
    }

    /// Also check `a*b = b*a`.
    pub fn commutative(mut self, claims: bool) -> Self {
        self.commutative = claims;
        self
    }

    /// Checks every law on `samples` random triples drawn with `sample`.
    pub fn run_random<F>(&self, samples: usize, seed: u64, mut sample: F) -> AxiomReport
    where
        F: FnMut(&mut Prng) -> T,
    {
        let mut rng = Prng::seed_from_u64(seed);
        let triples = (0..samples).map(|_| {
            let a = sample(&mut rng);
            let b = sample(&mut rng);
            let c = sample(&mut rng);
            (a, b, c)
        });
        self.run(triples)
    }

    /// Checks every law on all triples of `elements`.
    pub fn run_exhaustive(&self, elements: &[T]) -> AxiomReport {
        let triples = elements.iter().flat_map(|a| {
            elements.iter().flat_map(move |b| {
                elements.iter().map(move |c| (a.clone(), b.clone(), c.clone()))
            })
        });
        self.run(triples)
    }

    fn laws(&self) -> Vec<(&'static str, Law<T>)> {
        let mut laws: Vec<(&'static str, Law<T>)> = vec![
            (ADDITIVE_ASSOCIATIVITY, |a, b, c, _, _| a.add(b).add(c) == a.add(&b.add(c))),
            (ADDITIVE_COMMUTATIVITY, |a, b, _, _, _| a.add(b) == b.add(a)),
            (ADDITIVE_IDENTITY, |a, _, _, zero, _| a.add(zero) == *a && zero.add(a) == *a),
            (ADDITIVE_INVERSE, |a, _, _, zero, _| a.add(&a.neg()) == *zero),
            (SUBTRACTION, |a, b, _, _, _| a.sub(b) == a.add(&b.neg())),
            (MULTIPLICATIVE_ASSOCIATIVITY, |a, b, c, _, _| {
                a.mul(b).mul(c) == a.mul(&b.mul(c))
            }),
            (MULTIPLICATIVE_IDENTITY, |a, _, _, _, one| a.mul(one) == *a && one.mul(a) == *a),
            (LEFT_DISTRIBUTIVITY, |a, b, c, _, _| a.mul(&b.add(c)) == a.mul(b).add(&a.mul(c))),
            (RIGHT_DISTRIBUTIVITY, |a, b, c, _, _| a.add(b).mul(c) == a.mul(c).add(&b.mul(c))),
            (DECIDABLE_ZERO, |a, _, _, zero, _| a.is_zero() == (a == zero)),
            (UNIT_IFF_NONZERO, |a, _, _, _, _| a.is_unit() != a.is_zero()),
            (RECIPROCAL, |a, _, _, _, one| match a.reciprocal() {
                Ok(inv) => !a.is_zero() && a.mul(&inv) == *one && inv.mul(a) == *one,
                Err(_) => a.is_zero(),
            }),
        ];
        if self.commutative {
            laws.insert(6, (MULTIPLICATIVE_COMMUTATIVITY, |a, b, _, _, _| a.mul(b) == b.mul(a)));
        }
        laws
    }

    fn run(&self, triples: impl Iterator<Item = (T, T, T)>) -> AxiomReport {
        let zero = T::zero(&self.params);
        let one = T::one(&self.params);
        let laws = self.laws();
        let mut outcomes: Vec<AxiomOutcome> = laws
            .iter()
            .map(|(axiom, _)| AxiomOutcome { axiom, checks: 0, counterexample: None })
            .collect();
        for (a, b, c) in triples {
            for ((_, law), outcome) in laws.iter().zip(outcomes.iter_mut()) {
                if outcome.counterexample.is_some() {
                    continue;
                }
                outcome.checks += 1;
                if !law(&a, &b, &c, &zero, &one) {
                    outcome.counterexample = Some(format!("a = {a}, b = {b}, c = {c}"));
                }
            }
        }
        AxiomReport { outcomes }
    }
}

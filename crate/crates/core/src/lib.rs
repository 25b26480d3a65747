//! Exact dense linear algebra over division rings.
//!
//! The central algorithm computes a normalized PLE decomposition `M = P L E`
//! (permutation, lower triangular with nonzero diagonal, echelon form with
//! unit pivots) by *unfolding* the matrix into a sequence of elimination
//! hooks, one per pivot, and *folding* them back together with an
//! associative, partially defined hook product. Reduction to the reduced row
//! echelon form (`M = P L U E'`) uses the same pattern with hooks that clear
//! entries above pivots, from the rightmost pivot leftward.
//!
//! Modules:
//!
//! - [`algebra`]: coefficient domain traits, [`Rational`](algebra::Rational),
//!   [`PrimeFieldElement`](algebra::PrimeFieldElement), extended Euclid and
//!   an axiom test suite.
//! - [`matrix`]: dense matrices and row permutations.
//! - [`ple`]: PLE hooks and the fold/unfold decomposition.
//! - [`reduce`]: echelon reduction hooks, `rref` and PLUE decompositions.
//! - [`ffge`]: fraction-free (Bareiss) elimination over the integers.
//! - [`tools`]: random matrix generators, matrix files, benchmark harness.
//!
//! ```
//! use exactple::matrix::Matrix;
//! use exactple::algebra::Rational;
//! use exactple::ple::ple;
//!
//! let m: Matrix<Rational> = Matrix::from_i64_rows(&[&[0, 2], &[3, 4]]).unwrap();
//! let (p, l, e) = ple(&m).to_matrices();
//! assert_eq!(p.mul(&l).unwrap().mul(&e).unwrap(), m);
//! ```

pub mod algebra;
pub mod ffge;
pub mod matrix;
pub mod ple;
pub mod reduce;
pub mod tools;

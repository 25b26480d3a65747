//! Normalized PLE decomposition by fold/unfold of elimination hooks.
//!
//! `ple(m)` unfolds `m` into one rank-1 hook per pivot with
//! [`split_off_hook`], embeds each into the full row count, and folds the
//! sequence with [`PLEHook::mul`] starting from [`first_hook`]. The result
//! is a hook of rank `rank(m)` and corank `nrows - rank(m)` whose factors
//! satisfy `P * L * E == m`.

mod echelon;
mod hook;
mod left;

use thiserror::Error;

use crate::matrix::MatrixError;

pub use echelon::{EchelonForm, EchelonFormRow};
pub use hook::{
    check_dense_supports, first_hook, ple, split_off_hook, unfold_hooks, PLEHook, PleHooks,
};
pub use left::{LeftTransformation, LeftTransformationColumn};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PleError {
    #[error("hook product undefined: left corank {corank_left} < right rank {rank_right} + right corank {corank_right}")]
    Precondition { corank_left: usize, rank_right: usize, corank_right: usize },
    #[error("hook product undefined: left band ends at {left_end}, right band starts at {right_start}")]
    NotAdjacent { left_end: usize, right_start: usize },
    #[error("pivot column {next} does not follow pivot column {previous}")]
    PivotOrder { previous: usize, next: usize },
    #[error("hooks of sizes {left} and {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("echelon forms with {left} and {right} columns")]
    ColumnMismatch { left: usize, right: usize },
    #[error("cannot embed a hook of size {from} into size {into}")]
    EmbedTooSmall { from: usize, into: usize },
    #[error("support condition violated: {0}")]
    Support(String),
    #[error("malformed factor: {0}")]
    Structure(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

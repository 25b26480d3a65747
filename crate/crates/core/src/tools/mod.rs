//! Generators, matrix files and the benchmark harness.

pub mod bench;
pub mod io;
pub mod random;
pub mod selftest;

use thiserror::Error;

pub use bench::{run_bench, Algorithm, BenchConfig, BenchRecord, Family};
pub use io::{parse_matrix, read_matrix, to_text, write_matrix, AnyMatrix, FileDomain};
pub use random::{
    gen_random_fp_matrix, gen_random_fp_ple_matrix, gen_random_matrix, gen_random_ple_matrix,
    gen_random_ple_matrix_with_rank, prng, random_permutation, random_ple_product,
    random_subset, uniform_bits, uniform_i64_inclusive, uniform_u64_below, uniform_ubig_below,
    EntrySampler, GenParams, Prng,
};

#[derive(Debug, Error)]
pub enum ToolsError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("malformed matrix file: {0}")]
    Format(String),
    #[error("algorithms disagree: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Ffge(#[from] crate::ffge::FfgeError),
}

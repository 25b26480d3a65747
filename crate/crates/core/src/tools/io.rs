//! Plain-text matrix files.
//!
//! ```text
//! 2 3
//! 1 -2/3 0
//! 4 5 7/2
//! ```
//!
//! The header holds the row and column counts, followed by `mod p` for
//! matrices over a prime field. Each following line holds one row of
//! whitespace-separated literals, `p/q` or `p` for rationals and integers
//! for prime-field residues. Blank lines are ignored.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::algebra::{PrimeField, PrimeFieldElement, Rational, Ring};
use crate::matrix::Matrix;

use super::ToolsError;

/// A coefficient domain with a text representation in matrix files.
pub trait FileDomain: Ring {
    /// The `mod p` header suffix, if any.
    fn modulus(params: &Self::Params) -> Option<u64>;
    fn parse_entry(params: &Self::Params, token: &str) -> Result<Self, String>;
}

impl FileDomain for Rational {
    fn modulus(_: &()) -> Option<u64> {
        None
    }

    fn parse_entry(_: &(), token: &str) -> Result<Self, String> {
        Rational::from_str(token).map_err(|e| e.to_string())
    }
}

impl FileDomain for PrimeFieldElement {
    fn modulus(field: &PrimeField) -> Option<u64> {
        Some(field.modulus())
    }

    fn parse_entry(field: &PrimeField, token: &str) -> Result<Self, String> {
        let digits = token.strip_prefix('+').unwrap_or(token);
        let value = i128::from_str(digits).map_err(|e| format!("{token:?}: {e}"))?;
        let residue = value.rem_euclid(field.modulus() as i128) as u64;
        Ok(field.element_from_residue(residue))
    }
}

/// A matrix read from a file, in whichever domain its header names.
#[derive(Clone, PartialEq, Debug)]
pub enum AnyMatrix {
    Rational(Matrix<Rational>),
    PrimeField(Matrix<PrimeFieldElement>),
}

impl AnyMatrix {
    pub fn shape(&self) -> (usize, usize) {
        match self {
            AnyMatrix::Rational(m) => m.shape(),
            AnyMatrix::PrimeField(m) => m.shape(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            AnyMatrix::Rational(m) => to_text(m),
            AnyMatrix::PrimeField(m) => to_text(m),
        }
    }
}

pub fn to_text<T: FileDomain>(m: &Matrix<T>) -> String {
    let mut out = format!("{} {}", m.nrows(), m.ncols());
    if let Some(p) = T::modulus(m.params()) {
        write!(out, " mod {p}").expect("string write");
    }
    out.push('\n');
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - line.as_ptr() as usize + 1, tok))
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> ToolsError {
    ToolsError::Parse { line, column, message: message.into() }
}

pub fn parse_matrix(text: &str) -> Result<AnyMatrix, ToolsError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines.next().ok_or_else(|| ToolsError::Format("empty file".into()))?;
    let fields: Vec<(usize, &str)> = tokens(header).collect();
    let count = |k: usize| -> Result<usize, ToolsError> {
        let (col, tok) = fields[k];
        tok.parse().map_err(|_| parse_error(hline, col, format!("bad dimension {tok:?}")))
    };
    let modulus = match fields.len() {
        2 => None,
        4 if fields[2].1 == "mod" => {
            let (col, tok) = fields[3];
            let p: u64 = tok.parse().map_err(|_| parse_error(hline, col, format!("bad modulus {tok:?}")))?;
            Some(PrimeField::new(p).map_err(|e| parse_error(hline, col, e.to_string()))?)
        }
        _ => {
            return Err(parse_error(hline, 1, "header must be \"nrs ncs\" or \"nrs ncs mod p\""));
        }
    };
    let (nrs, ncs) = (count(0)?, count(1)?);
    match modulus {
        None => parse_rows((), nrs, ncs, lines).map(AnyMatrix::Rational),
        Some(field) => parse_rows(field, nrs, ncs, lines).map(AnyMatrix::PrimeField),
    }
}

fn parse_rows<'a, T: FileDomain>(
    params: T::Params,
    nrs: usize,
    ncs: usize,
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Matrix<T>, ToolsError> {
    let mut rows = Vec::with_capacity(nrs);
    for (lineno, line) in lines {
        if rows.len() == nrs {
            return Err(ToolsError::Format(format!(
                "line {lineno}: more than {nrs} rows"
            )));
        }
        let row = tokens(line)
            .map(|(col, tok)| T::parse_entry(&params, tok).map_err(|e| parse_error(lineno, col, e)))
            .collect::<Result<Vec<T>, _>>()?;
        if row.len() != ncs {
            return Err(ToolsError::Format(format!(
                "line {lineno}: {} entries, header says {ncs}",
                row.len()
            )));
        }
        rows.push(row);
    }
    // Rows of a zero-column matrix are blank lines, which the reader skips.
    if ncs == 0 && rows.is_empty() {
        return Ok(Matrix::zeros(params, nrs, 0));
    }
    if rows.len() != nrs {
        return Err(ToolsError::Format(format!("{} rows, header says {nrs}", rows.len())));
    }
    if nrs == 0 {
        return Ok(Matrix::zeros(params, 0, ncs));
    }
    Matrix::from_rows_in(params, rows).map_err(|e| ToolsError::Format(e.to_string()))
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<AnyMatrix, ToolsError> {
    parse_matrix(&std::fs::read_to_string(path)?)
}

pub fn write_matrix<T: FileDomain>(path: impl AsRef<Path>, m: &Matrix<T>) -> Result<(), ToolsError> {
    std::fs::write(path, to_text(m))?;
    Ok(())
}

//! Text format for matrices and vectors.
//!
//! A matrix file is a header line `m n` followed by `m` lines of `n` scalar
//! tokens: `-inf`, an integer `k`, or `kg` for the ghost `k^∘`. A vector file
//! is a single line of tokens. Blank lines and lines starting with `#` are
//! skipped.

use num_rational::Ratio;
use num_traits::CheckedMul;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::semiring::{ExtNumber, Weight, MAGNITUDE_CAP};

/// A scalar type readable from a token.
pub trait Scalar: Copy + std::fmt::Display {
    /// Parses `tok`, multiplying its numeric part by `scale`. With a scale
    /// other than 1, rational tokens `p/q` are accepted as long as the scaled
    /// value is an integer.
    fn parse_scaled(tok: &str, scale: i128) -> std::result::Result<Self, String>;
}

fn scaled_integer(body: &str, scale: i128) -> std::result::Result<i128, String> {
    let bad = || format!("invalid scalar token `{body}`");
    let value = match body.split_once('/') {
        None => Ratio::from_integer(body.parse::<i128>().map_err(|_| bad())?),
        Some(_) if scale == 1 => return Err(format!("rational token `{body}` needs --scale")),
        Some((p, q)) => {
            let p: i128 = p.parse().map_err(|_| bad())?;
            let q: i128 = q.parse().map_err(|_| bad())?;
            if q <= 0 {
                return Err(bad());
            }
            Ratio::new(p, q)
        }
    };
    let scaled = value
        .checked_mul(&Ratio::from_integer(scale))
        .ok_or_else(|| format!("`{body}` overflows after scaling"))?;
    if !scaled.is_integer() {
        return Err(format!("`{body}` times {scale} is not an integer"));
    }
    let v = scaled.to_integer();
    if v.abs() > MAGNITUDE_CAP {
        return Err(format!("scalar `{body}` exceeds the magnitude cap 1e12"));
    }
    Ok(v)
}

impl Scalar for Weight {
    fn parse_scaled(tok: &str, scale: i128) -> std::result::Result<Self, String> {
        if tok == "-inf" {
            return Ok(Weight::Bottom);
        }
        scaled_integer(tok, scale).map(Weight::Finite)
    }
}

impl Scalar for ExtNumber {
    fn parse_scaled(tok: &str, scale: i128) -> std::result::Result<Self, String> {
        match tok.strip_suffix('g') {
            Some("-inf") => Err(format!("invalid scalar token `{tok}`")),
            Some(body) => scaled_integer(body, scale).map(ExtNumber::ghost_of),
            None => Weight::parse_scaled(tok, scale).map(crate::semiring::inject),
        }
    }
}

/// Non-skipped lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

/// Tokens of a line with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (k, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((line[..s].chars().count() + 1, &line[s..k]));
                start = None;
            }
            (false, None) => start = Some(k),
            _ => {}
        }
    }
    out
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_row<T: Scalar>(line_no: usize, line: &str, expected: usize, scale: i128) -> Result<Vec<T>> {
    let toks = tokens(line);
    if toks.len() != expected {
        let column = toks.get(expected).map_or(line.len() + 1, |t| t.0);
        return Err(parse_error(
            line_no,
            column,
            format!("expected {expected} tokens, found {}", toks.len()),
        ));
    }
    toks.into_iter()
        .map(|(col, tok)| T::parse_scaled(tok, scale).map_err(|e| parse_error(line_no, col, e)))
        .collect()
}

/// Parses a matrix file.
pub fn parse_matrix<T: Scalar>(text: &str) -> Result<Matrix<T>> {
    parse_matrix_scaled(text, 1)
}

/// Parses a matrix file, multiplying every finite entry by `scale`.
pub fn parse_matrix_scaled<T: Scalar>(text: &str, scale: i128) -> Result<Matrix<T>> {
    if scale <= 0 {
        return Err(Error::Token(format!("scale must be positive, got {scale}")));
    }
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_error(1, 1, "missing header `m n`"))?;
    let htoks = tokens(header);
    if htoks.len() != 2 {
        return Err(parse_error(hline, 1, "header must be `m n`"));
    }
    let dim = |(col, tok): (usize, &str)| {
        tok.parse::<usize>()
            .map_err(|_| parse_error(hline, col, format!("invalid dimension `{tok}`")))
    };
    let (m, n) = (dim(htoks[0])?, dim(htoks[1])?);
    if m == 0 || n == 0 {
        return Err(parse_error(hline, 1, "dimensions must be positive"));
    }
    let mut data = Vec::with_capacity(m * n);
    let mut read = 0;
    for (line_no, line) in lines {
        if read == m {
            return Err(parse_error(line_no, 1, format!("more than {m} rows")));
        }
        data.extend(parse_row::<T>(line_no, line, n, scale)?);
        read += 1;
    }
    if read < m {
        let last = text.lines().count();
        return Err(parse_error(last + 1, 1, format!("expected {m} rows, found {read}")));
    }
    Matrix::new(m, n, data)
}

/// Parses a vector file (one line of tokens).
pub fn parse_vector<T: Scalar>(text: &str) -> Result<Vec<T>> {
    parse_vector_scaled(text, 1)
}

pub fn parse_vector_scaled<T: Scalar>(text: &str, scale: i128) -> Result<Vec<T>> {
    let mut lines = content_lines(text);
    let (line_no, line) = lines.next().ok_or_else(|| parse_error(1, 1, "empty vector file"))?;
    if let Some((extra, _)) = lines.next() {
        return Err(parse_error(extra, 1, "vector file must have a single line"));
    }
    let n = tokens(line).len();
    if n == 0 {
        return Err(parse_error(line_no, 1, "empty vector"));
    }
    parse_row(line_no, line, n, scale)
}

/// Canonical text of a matrix; inverse of [`parse_matrix`].
pub fn print_matrix<T: Scalar>(a: &Matrix<T>) -> String {
    format!("{} {}\n{a}", a.rows(), a.cols())
}

/// Canonical text of a vector: tokens separated by single spaces.
pub fn format_vector<T: Scalar>(x: &[T]) -> String {
    x.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn print_vector<T: Scalar>(x: &[T]) -> String {
    format_vector(x) + "\n"
}

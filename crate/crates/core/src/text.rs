//! Plain-text formats.
//!
//! Scalars are printed with 17 significant digits (C `%.17g`), infinities
//! as `inf` / `-inf`. A matrix file is a `<rows> <cols>` header followed by
//! the entries in row-major order, separated by any whitespace. Lines whose
//! first character is `#` are comments.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::semiring::Semiring;

/// `%.17g` formatting; round-trips every `f64`.
pub fn format_scalar(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent in scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..17).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", strip_zeros(mantissa), exp.abs())
    } else {
        let decimals = (16 - exp) as usize;
        strip_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Parses a real number or `inf` / `+inf` / `-inf`. NaN is rejected.
pub fn parse_scalar(token: &str) -> std::result::Result<f64, String> {
    match token {
        "inf" | "+inf" => return Ok(f64::INFINITY),
        "-inf" => return Ok(f64::NEG_INFINITY),
        _ => {}
    }
    if token.contains("..") {
        return Err(format!("interval literal '{token}' requires interval mode"));
    }
    match token.parse::<f64>() {
        Ok(x) if !x.is_nan() && !token.chars().any(|c| c.is_ascii_alphabetic() && c != 'e' && c != 'E') => Ok(x),
        _ => Err(format!("'{token}' is not a number")),
    }
}

/// Element types with a text representation.
pub trait TextValue: Sized {
    fn parse_token(token: &str) -> std::result::Result<Self, String>;
    fn format_token(&self) -> String;
}

impl TextValue for f64 {
    fn parse_token(token: &str) -> std::result::Result<Self, String> {
        parse_scalar(token)
    }

    fn format_token(&self) -> String {
        format_scalar(*self)
    }
}

/// A whitespace-separated token with its 1-based position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub line: usize,
    pub column: usize,
}

/// Splits a line into tokens, recording 1-based character columns.
pub(crate) fn tokens(line_no: usize, line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in line.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((byte, col)),
            (true, Some((b, c))) => {
                out.push(Token { text: &line[b..byte], line: line_no, column: c + 1 });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((b, c)) = start {
        out.push(Token { text: &line[b..], line: line_no, column: c + 1 });
    }
    out
}

pub(crate) fn parse_cell<S>(s: &S, tok: Token<'_>) -> Result<S::Elem>
where
    S: Semiring,
    S::Elem: TextValue,
{
    let v = S::Elem::parse_token(tok.text).map_err(|m| Error::parse(tok.line, tok.column, m))?;
    s.check(v)
        .map_err(|e| Error::parse(tok.line, tok.column, e.to_string()))
}

/// Reads a matrix and validates every entry against the carrier of `s`.
pub fn parse_matrix<S>(s: &S, input: &str) -> Result<Matrix<S::Elem>>
where
    S: Semiring,
    S::Elem: TextValue,
{
    let mut toks = input
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
        .flat_map(|(i, l)| tokens(i + 1, l));

    let mut dim = |what: &str| -> Result<usize> {
        let t = toks
            .next()
            .ok_or_else(|| Error::parse(1, 1, format!("missing {what} in matrix header")))?;
        t.text
            .parse::<usize>()
            .map_err(|_| Error::parse(t.line, t.column, format!("'{}' is not a valid {what}", t.text)))
    };
    let rows = dim("row count")?;
    let cols = dim("column count")?;

    let mut data = Vec::with_capacity(rows * cols);
    let mut last = (1, 1);
    for tok in toks.by_ref().take(rows * cols) {
        last = (tok.line, tok.column + tok.text.chars().count());
        data.push(parse_cell(s, tok)?);
    }
    if data.len() < rows * cols {
        return Err(Error::parse(
            last.0,
            last.1,
            format!("expected {} entries, found {}", rows * cols, data.len()),
        ));
    }
    if let Some(extra) = toks.next() {
        return Err(Error::parse(extra.line, extra.column, "unexpected trailing value"));
    }
    Matrix::new(rows, cols, data)
}

/// Writes `<rows> <cols>` then one line per row.
pub fn write_matrix<E: TextValue + Copy>(m: &Matrix<E>) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(TextValue::format_token).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

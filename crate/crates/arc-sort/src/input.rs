//! Newline-separated signed decimal integers.

use std::fmt::Write as _;

use thiserror::Error;

/// A token that is not a valid `i64`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: `{token}` is not a valid 64-bit signed integer")]
pub struct ParseIntegersError {
    /// 1-based line number.
    pub line: usize,
    pub token: String,
}

/// Parse one integer per line. Blank lines (after trimming) are skipped.
/// Out-of-range values are errors, never clamped.
pub fn parse_integers(text: &str) -> Result<Vec<i64>, ParseIntegersError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let token = line.trim();
        if token.is_empty() {
            continue;
        }
        let value = token.parse::<i64>().map_err(|_| ParseIntegersError {
            line: i + 1,
            token: token.to_owned(),
        })?;
        out.push(value);
    }
    Ok(out)
}

/// One integer per line, each followed by `\n`.
pub fn format_integers(values: &[i64]) -> String {
    let mut s = String::with_capacity(values.len() * 8);
    for v in values {
        writeln!(s, "{v}").unwrap();
    }
    s
}

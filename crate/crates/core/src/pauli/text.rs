//! Plain-text Pauli-sum files.
//!
//! ```text
//! # comment
//! qubits 3
//! XZI  0.25 0.0
//! IIZ -1.0  0.0
//! ```
//!
//! Strings are written most-significant qubit first. Repeated strings are summed.

use std::fmt::Write as _;

use num_complex::Complex64;

use super::{PauliString, PauliSum, PauliTerm};
use crate::error::{Error, Result};

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn parse_f64(token: &str, line: usize, what: &str) -> Result<f64> {
    let v: f64 = token
        .parse()
        .map_err(|_| Error::parse(line, format!("cannot parse {what} {token:?}")))?;
    if !v.is_finite() {
        return Err(Error::parse(line, format!("{what} {token:?} is not finite")));
    }
    Ok(v)
}

pub fn parse_pauli_sum(text: &str) -> Result<PauliSum> {
    let mut n: Option<usize> = None;
    let mut terms = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw);
        if body.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let Some(size) = n else {
            match tokens.as_slice() {
                ["qubits", count] => {
                    let count: usize = count
                        .parse()
                        .map_err(|_| Error::parse(line, format!("bad qubit count {count:?}")))?;
                    if count == 0 || count > super::MAX_QUBITS {
                        return Err(Error::parse(line, format!("unsupported qubit count {count}")));
                    }
                    n = Some(count);
                    continue;
                }
                _ => return Err(Error::parse(line, "expected header `qubits <n>`")),
            }
        };
        let [letters, re, im] = tokens.as_slice() else {
            return Err(Error::parse(line, "expected `<letters> <re> <im>`"));
        };
        if letters.chars().count() != size {
            return Err(Error::parse(
                line,
                format!("string {letters:?} does not have {size} letters"),
            ));
        }
        let string: PauliString = letters.parse().map_err(|e: Error| Error::parse(line, e.to_string()))?;
        let coefficient = Complex64::new(
            parse_f64(re, line, "real part")?,
            parse_f64(im, line, "imaginary part")?,
        );
        terms.push(PauliTerm::new(coefficient, string).map_err(|e| Error::parse(line, e.to_string()))?);
    }
    let n = n.ok_or_else(|| Error::parse(1, "missing header `qubits <n>`"))?;
    PauliSum::from_terms(n, terms)
}

/// Serialize with 17 significant digits so that a parse round trip is exact.
pub fn write_pauli_sum(sum: &PauliSum) -> String {
    let mut out = format!("qubits {}\n", sum.num_qubits());
    for t in sum.terms() {
        let _ = writeln!(out, "{} {:.16e} {:.16e}", t.string, t.coefficient.re, t.coefficient.im);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_duplicates() {
        let text = "# a header comment\nqubits 2\nXZ 0.5 0 # inline\n\nXZ 0.25 0\nII -1 0\n";
        let s = parse_pauli_sum(text).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.coefficient(&"XZ".parse().unwrap()), Complex64::new(0.75, 0.0));
        assert!(s.is_hermitian());
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_pauli_sum("qubits 2\nXZ 0.5 0\nXQ 1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_pauli_sum("qubits 2\nXZZ 0.5 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_pauli_sum("XZ 0.5 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_pauli_sum("qubits 1\nX nan 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn write_then_parse_is_exact() {
        let s = parse_pauli_sum("qubits 3\nXYZ 0.1 -0.3\nIIZ 1e-3 0\nZZI 0.7071067811865476 0\n").unwrap();
        assert_eq!(parse_pauli_sum(&write_pauli_sum(&s)).unwrap(), s);
    }
}

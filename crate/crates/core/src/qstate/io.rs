//! Plain-text state files.
//!
//! ```text
//! # optional comments
//! 3
//! 0.7071067811865476 0
//! 0 0
//! ...
//! ```
//!
//! The first data line is the qubit count `n`, followed by `2^n` lines of
//! `re im` in basis order. Anything after `#` is ignored.

use std::fmt::Write as _;

use num_complex::Complex64;

use super::PureState;
use crate::error::{Error, Result};

/// States whose squared norm is within this of one are renormalized on read.
pub const READ_NORM_TOLERANCE: f64 = 1e-6;
const MAX_FILE_QUBITS: usize = 24;

pub fn parse_state(text: &str) -> Result<PureState> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, header) = lines.next().ok_or(Error::Parse { line: 0, message: "empty state file".into() })?;
    let n_qubits: usize = header
        .parse()
        .map_err(|_| Error::Parse { line: line_no, message: format!("expected qubit count, found {header:?}") })?;
    if n_qubits == 0 || n_qubits > MAX_FILE_QUBITS {
        return Err(Error::Parse { line: line_no, message: format!("qubit count {n_qubits} out of range") });
    }

    let dim = 1usize << n_qubits;
    let mut amplitudes = Vec::with_capacity(dim);
    let mut last_line = line_no;
    for (line_no, line) in lines {
        last_line = line_no;
        if amplitudes.len() == dim {
            return Err(Error::Parse { line: line_no, message: "more amplitudes than 2^n".into() });
        }
        let mut fields = line.split_whitespace();
        let mut next_num = |what: &str| -> Result<f64> {
            let tok = fields
                .next()
                .ok_or_else(|| Error::Parse { line: line_no, message: format!("missing {what} part") })?;
            tok.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| Error::Parse { line: line_no, message: format!("bad {what} part {tok:?}") })
        };
        let re = next_num("real")?;
        let im = next_num("imaginary")?;
        if fields.next().is_some() {
            return Err(Error::Parse { line: line_no, message: "expected exactly two numbers".into() });
        }
        amplitudes.push(Complex64::new(re, im));
    }
    if amplitudes.len() != dim {
        return Err(Error::Parse {
            line: last_line,
            message: format!("expected {dim} amplitudes, found {}", amplitudes.len()),
        });
    }

    let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
    if (norm_sq - 1.0).abs() > READ_NORM_TOLERANCE {
        return Err(Error::NotNormalized { norm_sq });
    }
    PureState::from_unnormalized(amplitudes)
}

/// Shortest round-trip formatting, so parse(format(ψ)) == ψ bit for bit.
pub fn format_state(state: &PureState) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", state.n_qubits());
    for a in state.amplitudes() {
        let _ = writeln!(out, "{:?} {:?}", a.re, a.im);
    }
    out
}

pub fn read_state_file(path: impl AsRef<std::path::Path>) -> std::io::Result<Result<PureState>> {
    Ok(parse_state(&std::fs::read_to_string(path)?))
}

pub fn write_state_file(path: impl AsRef<std::path::Path>, state: &PureState) -> std::io::Result<()> {
    std::fs::write(path, format_state(state))
}

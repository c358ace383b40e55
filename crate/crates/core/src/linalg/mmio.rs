//! Matrix Market coordinate files and plain vector files.

use std::fmt::Write as _;
use std::path::Path;

use super::{LinalgError, SparseCSR};
use crate::scalar::{Complex64, Scalar};

fn parse_err(line: usize, message: impl Into<String>) -> LinalgError {
    LinalgError::Parse { line, message: message.into() }
}

/// Parses a square coordinate matrix (real, integer, pattern or complex;
/// general, symmetric, skew-symmetric or hermitian).
pub fn parse_matrix_market<S: Scalar>(text: &str) -> Result<SparseCSR<S>, LinalgError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let fields: Vec<String> = header.split_whitespace().map(str::to_ascii_lowercase).collect();
    if fields.len() != 5 || fields[0] != "%%matrixmarket" || fields[1] != "matrix" || fields[2] != "coordinate" {
        return Err(parse_err(1, "expected '%%MatrixMarket matrix coordinate <field> <symmetry>'"));
    }
    let field = fields[3].as_str();
    if !matches!(field, "real" | "integer" | "pattern" | "complex") {
        return Err(parse_err(1, format!("unsupported field '{field}'")));
    }
    let symmetry = fields[4].as_str();
    if !matches!(symmetry, "general" | "symmetric" | "skew-symmetric" | "hermitian") {
        return Err(parse_err(1, format!("unsupported symmetry '{symmetry}'")));
    }
    let mut size: Option<(usize, usize)> = None;
    let mut trip = Vec::new();
    for (idx, line) in lines {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        let tok: Vec<&str> = line.split_whitespace().collect();
        let Some((dim, expected)) = size else {
            if tok.len() != 3 {
                return Err(parse_err(lineno, "size line needs rows, columns and entry count"));
            }
            let num = |s: &str| s.parse::<usize>().map_err(|_| parse_err(lineno, format!("bad integer '{s}'")));
            let (r, c, nnz) = (num(tok[0])?, num(tok[1])?, num(tok[2])?);
            if r != c {
                return Err(parse_err(lineno, format!("matrix must be square, got {r}×{c}")));
            }
            size = Some((r, nnz));
            trip.reserve(nnz);
            continue;
        };
        let want = match field {
            "pattern" => 2,
            "complex" => 4,
            _ => 3,
        };
        if tok.len() != want {
            return Err(parse_err(lineno, format!("expected {want} fields")));
        }
        let idx = |s: &str| -> Result<usize, LinalgError> {
            let v = s.parse::<usize>().map_err(|_| parse_err(lineno, format!("bad index '{s}'")))?;
            if v == 0 || v > dim {
                return Err(parse_err(lineno, format!("index {v} outside 1..={dim}")));
            }
            Ok(v - 1)
        };
        let real = |s: &str| s.parse::<f64>().map_err(|_| parse_err(lineno, format!("bad number '{s}'")));
        let (i, j) = (idx(tok[0])?, idx(tok[1])?);
        let z = match field {
            "pattern" => Complex64::new(1.0, 0.0),
            "complex" => Complex64::new(real(tok[2])?, real(tok[3])?),
            _ => Complex64::new(real(tok[2])?, 0.0),
        };
        let v = S::from_complex(z).ok_or_else(|| parse_err(lineno, "complex entry in a real matrix"))?;
        trip.push((i, j, v));
        if i != j {
            match symmetry {
                "symmetric" => trip.push((j, i, v)),
                "skew-symmetric" => trip.push((j, i, -v)),
                "hermitian" => trip.push((j, i, v.conj())),
                _ => {}
            }
        }
        if trip.len() > 2 * expected {
            return Err(parse_err(lineno, "more entries than declared"));
        }
    }
    let (dim, _) = size.ok_or_else(|| parse_err(1, "missing size line"))?;
    SparseCSR::from_triplets(dim, trip)
}

/// Writes a general coordinate file with round-trip exact numbers.
pub fn format_matrix_market<S: Scalar>(a: &SparseCSR<S>) -> String {
    let field = if S::IS_COMPLEX { "complex" } else { "real" };
    let mut out = format!("%%MatrixMarket matrix coordinate {field} general\n");
    let _ = writeln!(out, "{} {} {}", a.dim(), a.dim(), a.nnz());
    for (i, j, v) in a.triplets() {
        let z = v.to_complex();
        if S::IS_COMPLEX {
            let _ = writeln!(out, "{} {} {:?} {:?}", i + 1, j + 1, z.re, z.im);
        } else {
            let _ = writeln!(out, "{} {} {:?}", i + 1, j + 1, z.re);
        }
    }
    out
}

pub fn read_matrix_market<S: Scalar>(path: &Path) -> Result<SparseCSR<S>, LinalgError> {
    let text = std::fs::read_to_string(path).map_err(|e| LinalgError::Io(format!("{}: {e}", path.display())))?;
    parse_matrix_market(&text)
}

pub fn write_matrix_market<S: Scalar>(path: &Path, a: &SparseCSR<S>) -> Result<(), LinalgError> {
    std::fs::write(path, format_matrix_market(a)).map_err(|e| LinalgError::Io(format!("{}: {e}", path.display())))
}

/// One value per line; `#` starts a comment line.
pub fn parse_vector<S: Scalar>(text: &str) -> Result<Vec<S>, LinalgError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| S::parse_text(l).ok_or_else(|| parse_err(i + 1, format!("bad value '{}'", l.trim()))))
        .collect()
}

pub fn format_vector<S: Scalar>(x: &[S]) -> String {
    let mut out = String::with_capacity(x.len() * 24);
    for v in x {
        out.push_str(&v.to_text());
        out.push('\n');
    }
    out
}

pub fn read_vector<S: Scalar>(path: &Path) -> Result<Vec<S>, LinalgError> {
    let text = std::fs::read_to_string(path).map_err(|e| LinalgError::Io(format!("{}: {e}", path.display())))?;
    parse_vector(&text)
}

pub fn write_vector<S: Scalar>(path: &Path, x: &[S]) -> Result<(), LinalgError> {
    std::fs::write(path, format_vector(x)).map_err(|e| LinalgError::Io(format!("{}: {e}", path.display())))
}

//! Plain-text pencil exchange: a `dim` line, then `T0` and `T1` sections of
//! zero-based `row col value` triplets.

use std::fmt::Write as _;

use super::{PencilError, Tridiag, TridiagPencil};
use crate::scalar::Scalar;

pub fn format_pencil<S: Scalar>(p: &TridiagPencil<S>) -> String {
    let mut out = format!("dim {}\n", p.dim());
    for (name, t) in [("T0", p.t0()), ("T1", p.t1())] {
        out.push_str(name);
        out.push('\n');
        let n = t.dim();
        for i in 0..n {
            for k in i.saturating_sub(1)..(i + 2).min(n) {
                let v = t.get(i, k);
                if !v.is_zero() {
                    let _ = writeln!(out, "{i} {k} {}", v.to_text());
                }
            }
        }
    }
    out
}

pub fn parse_pencil<S: Scalar>(text: &str) -> Result<TridiagPencil<S>, PencilError> {
    let err = |line: usize, message: String| PencilError::Parse { line, message };
    let mut dim = None;
    let mut mats: [Option<Tridiag<S>>; 2] = [None, None];
    let mut current: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("dim") {
            let n: usize = rest.trim().parse().map_err(|_| err(line_no, format!("bad dimension '{}'", rest.trim())))?;
            if n == 0 {
                return Err(err(line_no, "dimension must be positive".into()));
            }
            dim = Some(n);
            continue;
        }
        if line == "T0" || line == "T1" {
            let n = dim.ok_or_else(|| err(line_no, "section before 'dim' line".into()))?;
            let k = usize::from(line == "T1");
            if mats[k].is_some() {
                return Err(err(line_no, format!("duplicate section {line}")));
            }
            mats[k] = Some(Tridiag::zeros(n));
            current = Some(k);
            continue;
        }
        let k = current.ok_or_else(|| err(line_no, "entry outside a T0/T1 section".into()))?;
        let tok: Vec<&str> = line.split_whitespace().collect();
        if tok.len() != 3 {
            return Err(err(line_no, "expected 'row col value'".into()));
        }
        let idx = |s: &str| s.parse::<usize>().map_err(|_| err(line_no, format!("bad index '{s}'")));
        let (i, j) = (idx(tok[0])?, idx(tok[1])?);
        let v = S::parse_text(tok[2]).ok_or_else(|| err(line_no, format!("bad value '{}'", tok[2])))?;
        let n = dim.expect("section implies dim");
        let t = mats[k].as_mut().expect("current section exists");
        if i >= n || j >= n {
            return Err(err(line_no, format!("entry ({i}, {j}) outside {n}×{n}")));
        }
        *t.entry_mut(i, j).ok_or_else(|| err(line_no, format!("entry ({i}, {j}) is off the tridiagonal band")))? += v;
    }
    let [t0, t1] = mats;
    let t0 = t0.ok_or_else(|| err(0, "missing T0 section".into()))?;
    let t1 = t1.ok_or_else(|| err(0, "missing T1 section".into()))?;
    TridiagPencil::new(t0, t1)
}

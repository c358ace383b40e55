//! Plain-text form of a continued fraction.
//!
//! One line per level: `i; b_i coefficients; c_i coefficients`, coefficients
//! ascending and comma separated. Level 0 has an empty `c` field and the zero
//! polynomial is written as `0`. Lines starting with `#` are comments.

use super::{CfError, ContinuedFraction, Polynomial};
use crate::scalar::Scalar;

fn poly_text<S: Scalar>(p: &Polynomial<S>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.coeffs().iter().map(|c| c.to_text()).collect::<Vec<_>>().join(", ")
}

pub fn to_text<S: Scalar>(cf: &ContinuedFraction<S>) -> String {
    let mut out = String::new();
    for i in 0..=cf.len() {
        let c = if i == 0 { String::new() } else { poly_text(cf.c(i)) };
        out.push_str(&format!("{i}; {}; {c}\n", poly_text(cf.b(i))));
    }
    out
}

fn parse_poly<S: Scalar>(field: &str, line: usize) -> Result<Polynomial<S>, CfError> {
    let coeffs = field
        .split(',')
        .map(|tok| {
            S::parse_text(tok).ok_or_else(|| CfError::Parse { line, message: format!("bad coefficient {:?}", tok.trim()) })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::new(coeffs))
}

pub fn from_text<S: Scalar>(text: &str) -> Result<ContinuedFraction<S>, CfError> {
    let mut b = Vec::new();
    let mut c = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let raw = raw.trim();
        if raw.is_empty() || raw.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split(';').collect();
        if fields.len() != 3 {
            return Err(CfError::Parse { line, message: "expected `i; b coefficients; c coefficients`".into() });
        }
        let level: usize = fields[0]
            .trim()
            .parse()
            .map_err(|_| CfError::Parse { line, message: format!("bad level {:?}", fields[0].trim()) })?;
        if level != b.len() {
            return Err(CfError::Parse { line, message: format!("expected level {}, found {level}", b.len()) });
        }
        b.push(parse_poly(fields[1], line)?);
        let cfield = fields[2].trim();
        if level == 0 {
            if !cfield.is_empty() {
                return Err(CfError::Parse { line, message: "level 0 has no partial numerator".into() });
            }
        } else {
            c.push(parse_poly(cfield, line)?);
        }
    }
    if b.is_empty() {
        return Err(CfError::Parse { line: 0, message: "no levels".into() });
    }
    ContinuedFraction::new(b, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::confrac::exp_cfraction;
    use crate::scalar::Complex64;

    #[test]
    fn exp_text_layout() {
        let text = to_text(&exp_cfraction::<f64>(2));
        assert_eq!(text, "0; 1.0; \n1; 1.0; 0.0, 1.0\n2; 1.0; 0.0, -0.5\n");
        assert_eq!(from_text::<f64>(&text).unwrap(), exp_cfraction(2));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(from_text::<f64>("0; 1; \n2; 1; 1\n"), Err(CfError::Parse { line: 2, .. })));
        assert!(matches!(from_text::<f64>("0; x; \n"), Err(CfError::Parse { line: 1, .. })));
        assert!(matches!(from_text::<f64>("0; 1; 3\n"), Err(CfError::Parse { .. })));
        assert!(from_text::<f64>("# nothing\n").is_err());
    }

    #[test]
    fn complex_coefficients_round_trip() {
        let cf = ContinuedFraction::c_fraction(Complex64::new(1.0, -0.5), &[Complex64::new(0.1, 0.2)]);
        assert_eq!(from_text::<Complex64>(&to_text(&cf)).unwrap(), cf);
    }
}

//! `{"num": [...], "den": [...]}` entries (ascending coefficients, rational
//! strings) and a `bmatrix` LaTeX emitter.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{format_rational, latex_rational, parse_rational, Matrix, RatFuncX, Rational, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl RatFuncJson {
    pub fn from_ratfunc(f: &RatFuncX) -> Self {
        let coeffs = |p: &UniPoly| p.coeffs().iter().map(format_rational).collect::<Vec<_>>();
        let num = if f.is_zero() { vec!["0".to_string()] } else { coeffs(f.num()) };
        RatFuncJson { num, den: coeffs(f.den()) }
    }

    pub fn to_ratfunc(&self) -> Result<RatFuncX> {
        let poly = |v: &[String]| -> Result<UniPoly> { Ok(UniPoly::new(v.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?)) };
        let den = poly(&self.den)?;
        if den.is_zero() {
            return Err(Error::Validation("matrix entry with zero denominator".into()));
        }
        Ok(RatFuncX::new(poly(&self.num)?, den))
    }
}

pub fn matrix_to_json(m: &Matrix<RatFuncX>) -> Vec<Vec<RatFuncJson>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(RatFuncJson::from_ratfunc).collect()).collect()
}

pub fn matrix_from_json(rows: &[Vec<RatFuncJson>]) -> Result<Matrix<RatFuncX>> {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Validation("matrix must be square and non-empty".into()));
    }
    let parsed: Vec<Vec<RatFuncX>> =
        rows.iter().map(|r| r.iter().map(RatFuncJson::to_ratfunc).collect::<Result<_>>()).collect::<Result<_>>()?;
    Ok(Matrix::from_rows(parsed))
}

/// Reads the `"entries"` of an artifact (or a bare array of rows).
pub fn parse_matrix_artifact(text: &str) -> Result<Matrix<RatFuncX>> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Validation(format!("matrix file: {e}")))?;
    let entries = match v {
        Value::Object(mut o) => o.remove("entries").ok_or_else(|| Error::Validation("matrix file has no \"entries\"".into()))?,
        arr @ Value::Array(_) => arr,
        _ => return Err(Error::Validation("matrix file must be an object or an array".into())),
    };
    let rows: Vec<Vec<RatFuncJson>> =
        serde_json::from_value(entries).map_err(|e| Error::Validation(format!("matrix entries: {e}")))?;
    matrix_from_json(&rows)
}

/// Integer-coefficient `(num, den)` with the same ratio and a positive
/// leading denominator coefficient.
fn integral_parts(f: &RatFuncX) -> (UniPoly, UniPoly) {
    let lcm = f
        .num()
        .coeffs()
        .iter()
        .chain(f.den().coeffs())
        .fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let s = Rational::from_integer(lcm);
    (f.num().scale(&s), f.den().scale(&s))
}

fn latex_poly(p: &UniPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{{{k}}}"),
        };
        if mono.is_empty() || !abs.is_one() {
            out.push_str(&latex_rational(&abs));
        }
        out.push_str(&mono);
    }
    out
}

fn latex_entry(f: &RatFuncX) -> String {
    if f.is_polynomial() {
        return latex_poly(&f.num().scale(&f.den().lead().recip()));
    }
    let (n, d) = integral_parts(f);
    format!("\\frac{{{}}}{{{}}}", latex_poly(&n), latex_poly(&d))
}

/// `\begin{bmatrix} ... \end{bmatrix}`.
pub fn latex_matrix(m: &Matrix<RatFuncX>) -> String {
    let mut out = String::from("\\begin{bmatrix}\n");
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(latex_entry).collect();
        out.push_str("  ");
        out.push_str(&row.join(" & "));
        out.push_str(if r + 1 < m.rows() { " \\\\\n" } else { "\n" });
    }
    out.push_str("\\end{bmatrix}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn json_roundtrip() {
        let m = fixtures::example1_display();
        let rows = matrix_to_json(&m);
        assert_eq!(rows[2][2].num, vec!["-9053/512", "-9821/512"]);
        assert_eq!(rows[2][2].den, vec!["1"]);
        assert_eq!(matrix_from_json(&rows).unwrap(), m);
        let text = serde_json::to_string(&serde_json::json!({ "entries": rows })).unwrap();
        assert_eq!(parse_matrix_artifact(&text).unwrap(), m);
    }

    #[test]
    fn latex_form() {
        let m = fixtures::example1_display();
        let tex = latex_matrix(&m);
        assert!(tex.starts_with("\\begin{bmatrix}"));
        assert!(tex.contains("\\frac{20668x^{2} + 38425x + 16989}{768x + 2304}"));
        assert!(tex.contains("-\\frac{9821}{512}x - \\frac{9053}{512}"));
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_matrix_artifact("[[{\"num\": [\"1\"], \"den\": [\"0\"]}]]").is_err());
        assert!(parse_matrix_artifact("[[{\"num\": [\"1\"], \"den\": [\"1\"]}, {\"num\": [\"1\"], \"den\": [\"1\"]}]]").is_err());
        assert!(parse_matrix_artifact("{}").is_err());
    }
}

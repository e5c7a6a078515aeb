//! Curve input: an infix expression grammar over `x`, `y` and rational
//! literals, and a JSON coefficient-list form.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants.

use num_bigint::BigInt;
use serde_json::Value;

use crate::algebra::{parse_rational, BiPoly, Rational};
use crate::error::{Error, Result};

const MAX_EXPONENT: u32 = 256;

pub fn parse_curve(text: &str) -> Result<BiPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected character {:?}", p.src[p.pos] as char)));
    }
    Ok(out)
}

/// Parses `[[i, j, "p/q"], ...]`; coefficients may be strings or integers.
/// Repeated `(i, j)` keys are summed.
pub fn parse_coefficient_list(value: &Value) -> Result<BiPoly> {
    let bad = |msg: String| Error::Validation(format!("coefficient list: {msg}"));
    let items = value.as_array().ok_or_else(|| bad("expected an array".into()))?;
    let mut p = BiPoly::zero();
    for (k, item) in items.iter().enumerate() {
        let triple = item
            .as_array()
            .filter(|t| t.len() == 3)
            .ok_or_else(|| bad(format!("entry {k} is not an [i, j, c] triple")))?;
        let exp = |v: &Value| {
            v.as_u64()
                .filter(|&e| e <= MAX_EXPONENT as u64)
                .map(|e| e as u32)
                .ok_or_else(|| bad(format!("entry {k}: exponents must be small non-negative integers")))
        };
        let c = match &triple[2] {
            Value::String(s) => parse_rational(s)?,
            Value::Number(n) if n.is_i64() => Rational::from_integer(n.as_i64().unwrap().into()),
            _ => return Err(bad(format!("entry {k}: coefficient must be a rational string"))),
        };
        p.add_term(exp(&triple[0])?, exp(&triple[1])?, c);
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            let op_pos = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            if c == b'*' {
                acc = &acc * &rhs;
            } else {
                let divisor = constant_value(&rhs).ok_or(Error::Syntax {
                    pos: op_pos,
                    msg: "division is only allowed by constants".into(),
                })?;
                if divisor == Rational::from_integer(0.into()) {
                    return Err(Error::Syntax { pos: op_pos, msg: "division by zero".into() });
                }
                acc = acc.scale(&divisor.recip());
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BiPoly> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BiPoly> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            self.pos = start;
            return Err(self.error("exponent must be a non-negative integer literal"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let e: u32 = digits
            .parse()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or(Error::Syntax { pos: start, msg: format!("exponent {digits} too large") })?;
        let mut out = BiPoly::constant(Rational::from_integer(1.into()));
        for _ in 0..e {
            out = &out * &base;
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<BiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(BiPoly::x())
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(BiPoly::y())
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let v: BigInt = digits.parse().expect("digits");
                Ok(BiPoly::constant(Rational::from_integer(v)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                Err(self.error(format!("unknown variable {:?}; only x and y are allowed", c as char)))
            }
            Some(c) => Err(self.error(format!("unexpected character {:?}", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

fn constant_value(p: &BiPoly) -> Option<Rational> {
    if p.is_zero() {
        return Some(Rational::from_integer(0.into()));
    }
    let mut terms = p.terms();
    let (i, j, c) = terms.next()?;
    (i == 0 && j == 0 && terms.next().is_none()).then(|| c.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn example_curve_fragment() {
        let p = parse_curve("(x+3)*y^3 + x^2 - 3/8*x - 5/8").unwrap();
        let want = BiPoly::from_terms([
            (1, 3, int(1)),
            (0, 3, int(3)),
            (2, 0, int(1)),
            (1, 0, rat(-3, 8)),
            (0, 0, rat(-5, 8)),
        ]);
        assert_eq!(p, want);
    }

    #[test]
    fn zero_and_errors() {
        assert!(parse_curve("x - x").unwrap().is_zero());
        match parse_curve("y^(1/2)") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(parse_curve("x + z"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_curve("1/x"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_curve("1/(x-x)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_curve("(x+1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_curve("x y"), Err(Error::Syntax { pos: 2, .. })));
    }

    #[test]
    fn coefficient_list_form() {
        let v: Value = serde_json::from_str(r#"[[1,3,"1"],[0,3,3],[0,0,"-5/8"]]"#).unwrap();
        let p = parse_coefficient_list(&v).unwrap();
        assert_eq!(p, parse_curve("x*y^3 + 3*y^3 - 5/8").unwrap());
        let bad: Value = serde_json::from_str(r#"[[1,3]]"#).unwrap();
        assert!(parse_coefficient_list(&bad).is_err());
    }
}

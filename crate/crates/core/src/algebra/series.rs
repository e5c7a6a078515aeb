//! Truncated Laurent series in one local parameter `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::Rational;
use super::scalar::{ExactDiv, Ring, Scalar};
use crate::error::{Error, Result};

/// Sentinel precision for series known exactly (finitely many terms).
pub const EXACT: i64 = i64::MAX / 4;

/// Relative precision used when inverting an exactly known series with
/// more than one term.
const FALLBACK_TERMS: i64 = 32;

/// `sum coeffs[k] t^(val + k) + O(t^prec)`.
///
/// Invariants: `val + coeffs.len() <= prec`, and a non-empty `coeffs` has a
/// nonzero first entry. Terms past the stored ones and below `prec` are
/// zero.
#[derive(Clone)]
pub struct Laurent<S> {
    val: i64,
    coeffs: Vec<S>,
    prec: i64,
}

impl<S: Scalar> Laurent<S> {
    pub fn new(val: i64, coeffs: Vec<S>, prec: i64) -> Self {
        let mut s = Laurent { val, coeffs, prec };
        s.normalize();
        s
    }

    pub fn constant(c: S) -> Self {
        Self::new(0, vec![c], EXACT)
    }

    /// The local parameter `t`, known to relative order `prec` (the result
    /// is `t + O(t^prec)`).
    pub fn variable(prec: i64) -> Self {
        Self::new(1, vec![S::one()], prec.max(2))
    }

    /// `O(t^prec)`.
    pub fn big_o(prec: i64) -> Self {
        Laurent { val: prec, coeffs: Vec::new(), prec }
    }

    /// A power series with the given coefficients of `t^0, t^1, ...`.
    pub fn from_coeffs(coeffs: Vec<S>, prec: i64) -> Self {
        Self::new(0, coeffs, prec)
    }

    fn normalize(&mut self) {
        let max_len = (self.prec - self.val).max(0) as usize;
        if self.prec != EXACT && self.coeffs.len() > max_len {
            self.coeffs.truncate(max_len);
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.val += lead_zeros as i64;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.val = if self.prec == EXACT { 0 } else { self.prec };
        }
    }

    /// Valuation, i.e. the exponent of the first known nonzero term.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.val)
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec == EXACT
    }

    /// Coefficient of `t^k`; errors when `k` lies beyond the known range.
    pub fn coeff(&self, k: i64) -> Result<S> {
        if k >= self.prec {
            return Err(Error::Precision(format!(
                "coefficient of t^{k} requested, series known to O(t^{})",
                self.prec
            )));
        }
        if k < self.val || self.coeffs.is_empty() {
            return Ok(S::zero());
        }
        Ok(self.coeffs.get((k - self.val) as usize).cloned().unwrap_or_else(S::zero))
    }

    /// Drops all information from `t^prec` on.
    pub fn truncate(&self, prec: i64) -> Self {
        Self::new(self.val, self.coeffs.clone(), prec.min(self.prec))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        let prec = if self.prec == EXACT { EXACT } else { self.prec + k };
        Laurent { val: self.val + k, coeffs: self.coeffs.clone(), prec }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Laurent<T> {
        Laurent::new(self.val, self.coeffs.iter().map(f).collect(), self.prec)
    }

    /// Substitutes this series (valuation >= 1) into a polynomial with
    /// coefficients in `S` (ascending).
    pub fn compose_into(&self, poly: &[S]) -> Self {
        let mut acc = Self::zero_exact();
        for c in poly.iter().rev() {
            acc = acc * self.clone() + Self::constant(c.clone());
        }
        acc
    }

    fn zero_exact() -> Self {
        Laurent { val: 0, coeffs: Vec::new(), prec: EXACT }
    }

    fn term_end(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }
}

fn add_prec(a: i64, b: i64) -> i64 {
    if a == EXACT || b == EXACT {
        EXACT
    } else {
        a + b
    }
}

impl<S: Scalar> Add for Laurent<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.coeffs.is_empty() && self.prec == EXACT {
            return rhs;
        }
        if rhs.coeffs.is_empty() && rhs.prec == EXACT {
            return self;
        }
        let prec = self.prec.min(rhs.prec);
        let lo = self.val.min(rhs.val);
        let hi = self.term_end().max(rhs.term_end()).min(prec).max(lo);
        let coeffs = (lo..hi)
            .map(|k| {
                let a = self.coeff(k).unwrap_or_else(|_| S::zero());
                let b = rhs.coeff(k).unwrap_or_else(|_| S::zero());
                a + b
            })
            .collect();
        Laurent::new(lo, coeffs, prec)
    }
}

impl<S: Scalar> Neg for Laurent<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Laurent { val: self.val, coeffs: self.coeffs.into_iter().map(|c| -c).collect(), prec: self.prec }
    }
}

impl<S: Scalar> Sub for Laurent<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Scalar> Mul for Laurent<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let prec = add_prec(self.val, rhs.prec).min(add_prec(rhs.val, self.prec));
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return if prec == EXACT { Self::zero_exact() } else { Self::big_o(prec) };
        }
        let val = self.val + rhs.val;
        let mut len = self.coeffs.len() + rhs.coeffs.len() - 1;
        if prec != EXACT {
            len = len.min((prec - val).max(0) as usize);
        }
        let mut out = vec![S::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Laurent::new(val, out, prec)
    }
}

impl<S: Scalar> Ring for Laurent<S> {
    fn zero() -> Self {
        Self::zero_exact()
    }
    fn one() -> Self {
        Self::constant(S::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<S: Scalar> Scalar for Laurent<S> {
    fn from_rational(r: &Rational) -> Self {
        Self::constant(S::from_rational(r))
    }

    /// Inverts when the leading known coefficient is a unit of `S`.
    fn try_inv(&self) -> Option<Self> {
        let a0_inv = self.coeffs.first()?.try_inv()?;
        let rel = if self.prec == EXACT {
            if self.coeffs.len() == 1 {
                return Some(Laurent { val: -self.val, coeffs: vec![a0_inv], prec: EXACT });
            }
            FALLBACK_TERMS
        } else {
            self.prec - self.val
        };
        let n = rel.max(1) as usize;
        let a = |i: usize| self.coeffs.get(i).cloned().unwrap_or_else(S::zero);
        let mut b: Vec<S> = Vec::with_capacity(n);
        b.push(a0_inv.clone());
        for j in 1..n {
            let mut acc = S::zero();
            for i in 1..=j.min(self.coeffs.len().saturating_sub(1)) {
                acc = acc + a(i) * b[j - i].clone();
            }
            b.push(-(acc * a0_inv.clone()));
        }
        Some(Laurent::new(-self.val, b, -self.val + n as i64))
    }
}

impl<S: Scalar> ExactDiv for Laurent<S> {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        self.try_div(divisor)
    }
}

impl<S: Scalar> fmt::Debug for Laurent<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            write!(f, "({:?}) t^{} + ", c, self.val + k as i64)?;
        }
        if self.prec == EXACT {
            write!(f, "[exact]")
        } else {
            write!(f, "O(t^{})", self.prec)
        }
    }
}

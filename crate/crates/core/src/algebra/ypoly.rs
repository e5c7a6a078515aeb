//! Polynomials in `y` whose coefficients are rational functions of `x`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::rational::Rational;
use super::ratfunc::RatFuncX;
use super::scalar::{ExactDiv, Scalar};
use super::unipoly::{forward_owned, UniPoly};

/// Ascending coefficients, trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct YPoly {
    coeffs: Vec<RatFuncX>,
}

impl YPoly {
    pub fn new(mut coeffs: Vec<RatFuncX>) -> Self {
        while coeffs.last().is_some_and(RatFuncX::is_zero) {
            coeffs.pop();
        }
        YPoly { coeffs }
    }

    pub fn zero() -> Self {
        YPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(RatFuncX::one())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == RatFuncX::one()
    }

    pub fn constant(c: RatFuncX) -> Self {
        Self::new(vec![c])
    }

    pub fn y() -> Self {
        Self::new(vec![RatFuncX::zero(), RatFuncX::one()])
    }

    /// `y - c`.
    pub fn linear(c: &Rational) -> Self {
        Self::new(vec![RatFuncX::constant(-c.clone()), RatFuncX::one()])
    }

    /// A polynomial in `y` with constant coefficients.
    pub fn from_unipoly_in_y(p: &UniPoly) -> Self {
        Self::new(p.coeffs().iter().map(|c| RatFuncX::constant(c.clone())).collect())
    }

    pub fn monomial(c: RatFuncX, k: usize) -> Self {
        let mut v = vec![RatFuncX::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[RatFuncX] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RatFuncX {
        self.coeffs.get(k).cloned().unwrap_or_else(RatFuncX::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> RatFuncX {
        self.coeffs.last().cloned().unwrap_or_else(RatFuncX::zero)
    }

    pub fn scale(&self, c: &RatFuncX) -> Self {
        Self::new(self.coeffs.iter().map(|v| v * c).collect())
    }

    /// Value at a constant `y = c`, a function of `x`.
    pub fn eval_at(&self, c: &Rational) -> RatFuncX {
        let cc = RatFuncX::constant(c.clone());
        let mut acc = RatFuncX::zero();
        for v in self.coeffs.iter().rev() {
            acc = &(&acc * &cc) + v;
        }
        acc
    }

    /// Value at a point `(x, y)` in any backend; `None` if `x` hits a pole
    /// of a coefficient.
    pub fn eval_generic<S: Scalar>(&self, x: &S, y: &S) -> Option<S> {
        let mut acc = S::zero();
        for v in self.coeffs.iter().rev() {
            acc = acc * y.clone() + v.eval_generic(x)?;
        }
        Some(acc)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rational::from_integer(BigInt::from(k))))
                .collect(),
        )
    }

    /// Substitutes `y -> c + t`, returning coefficients in `t`.
    pub fn shift(&self, c: &Rational) -> Self {
        let lin = Self::new(vec![RatFuncX::constant(c.clone()), RatFuncX::one()]);
        let mut out = Self::zero();
        for v in self.coeffs.iter().rev() {
            out = &(&out * &lin) + &Self::constant(v.clone());
        }
        out
    }

    /// Synthetic division by `(y - c)`: quotient and remainder.
    pub fn divide_linear(&self, c: &Rational) -> (Self, RatFuncX) {
        if self.coeffs.is_empty() {
            return (Self::zero(), RatFuncX::zero());
        }
        let cc = RatFuncX::constant(c.clone());
        let n = self.coeffs.len();
        let mut quot = vec![RatFuncX::zero(); n - 1];
        let mut carry = RatFuncX::zero();
        for k in (0..n).rev() {
            let val = &self.coeffs[k] + &(&carry * &cc);
            if k == 0 {
                return (Self::new(quot), val);
            }
            quot[k - 1] = val.clone();
            carry = val;
        }
        unreachable!()
    }

    /// Euclidean division over the field of functions of `x`.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        if self.degree().is_none_or(|d| d < dd) {
            return Some((Self::zero(), self.clone()));
        }
        let lead_inv = divisor.lead().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![RatFuncX::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &(&c * dc);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Some((Self::new(quot), Self::new(rem)))
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::constant(RatFuncX::one()), |acc, _| &acc * self)
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*y"),
                _ => format!("({c})*y^{k}"),
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl<'a> Add<&'a YPoly> for &'a YPoly {
    type Output = YPoly;
    fn add(self, rhs: &YPoly) -> YPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        YPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a YPoly> for &'a YPoly {
    type Output = YPoly;
    fn sub(self, rhs: &YPoly) -> YPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        YPoly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a YPoly> for &'a YPoly {
    type Output = YPoly;
    fn mul(self, rhs: &YPoly) -> YPoly {
        if self.is_zero() || rhs.is_zero() {
            return YPoly::zero();
        }
        let mut out = vec![RatFuncX::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        YPoly::new(out)
    }
}

impl Neg for &YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        YPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

forward_owned!(YPoly, Add, add);
forward_owned!(YPoly, Sub, sub);
forward_owned!(YPoly, Mul, mul);

impl Neg for YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        -&self
    }
}

impl super::scalar::Ring for YPoly {
    fn zero() -> Self {
        YPoly::zero()
    }
    fn one() -> Self {
        YPoly::constant(RatFuncX::one())
    }
    fn is_zero(&self) -> bool {
        YPoly::is_zero(self)
    }
}

impl ExactDiv for YPoly {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }
}

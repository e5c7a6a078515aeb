//! Arithmetic traits shared by the exact, numeric and series backends.
//!
//! Every formula in the kernel and reconstruction layers is written once
//! against [`Scalar`] and then instantiated with exact rationals, complex
//! doubles, truncated Laurent series, or rational functions of the generic
//! curve point.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use super::Rational;

/// A commutative ring with a computable zero test.
pub trait Ring:
    Clone
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// A ring in which exact quotients can be computed when they exist.
///
/// Used by fraction-free elimination, where every division is known in
/// advance to be exact.
pub trait ExactDiv: Ring {
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

/// A ring that embeds the rationals and can invert (some of) its units.
pub trait Scalar: Ring {
    fn from_rational(r: &Rational) -> Self;

    /// Multiplicative inverse, or `None` when `self` is not invertible in
    /// this representation.
    fn try_inv(&self) -> Option<Self>;

    fn try_div(&self, rhs: &Self) -> Option<Self> {
        rhs.try_inv().map(|inv| self.clone() * inv)
    }

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Rational::from_integer(v.into()))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl ExactDiv for Rational {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            None
        } else {
            Some(self / divisor)
        }
    }
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Ring for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
}

impl ExactDiv for Complex64 {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if Ring::is_zero(divisor) {
            None
        } else {
            Some(self / divisor)
        }
    }
}

impl Scalar for Complex64 {
    fn from_rational(r: &Rational) -> Self {
        Complex64::new(rational_to_f64(r), 0.0)
    }
    fn try_inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(self.inv())
        }
    }
}

/// Nearest double to a rational; saturates to +-inf on overflow.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Fall back to scaling for numbers with very large numerators/denominators.
    let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
    let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
    n / d
}

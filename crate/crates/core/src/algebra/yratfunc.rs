//! Rational functions of `y` over the field of rational functions of `x`,
//! with a factored denominator.
//!
//! The value is `num / (other * prod (y - c)^k)`. Linear factors with
//! rational roots are tracked individually so pole orders and residues can
//! be read off without bivariate gcds; `other` holds the remaining factor
//! (typically the curve polynomial `E(x, y)`, or `1`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::{format_rational, Rational};
use super::ratfunc::RatFuncX;
use super::scalar::Scalar;
use super::unipoly::{forward_owned, UniPoly};
use super::ypoly::YPoly;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct YRatFunc {
    num: YPoly,
    poles: BTreeMap<Rational, u32>,
    other: YPoly,
}

impl YRatFunc {
    /// Builds `num / (other * prod (y - c)^k)` and cancels common linear
    /// factors.
    pub fn new(num: YPoly, poles: BTreeMap<Rational, u32>, other: YPoly) -> Self {
        assert!(!other.is_zero(), "zero denominator");
        let mut f = YRatFunc { num, poles, other };
        f.normalize();
        f
    }

    pub fn zero() -> Self {
        Self::from_ypoly(YPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_ypoly(YPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn from_ypoly(p: YPoly) -> Self {
        YRatFunc { num: p, poles: BTreeMap::new(), other: YPoly::one() }
    }

    pub fn constant(c: RatFuncX) -> Self {
        Self::from_ypoly(YPoly::constant(c))
    }

    pub fn x() -> Self {
        Self::constant(RatFuncX::x())
    }

    pub fn y() -> Self {
        Self::from_ypoly(YPoly::y())
    }

    /// `1 / (y - c)^k`.
    pub fn pole(c: &Rational, k: u32) -> Self {
        let mut poles = BTreeMap::new();
        poles.insert(c.clone(), k);
        Self::new(YPoly::one(), poles, YPoly::one())
    }

    /// Divides by a factor that is kept unexpanded in the denominator.
    pub fn divide_by_other(&self, factor: &YPoly) -> Self {
        Self::new(self.num.clone(), self.poles.clone(), &self.other * factor)
    }

    pub fn numerator(&self) -> &YPoly {
        &self.num
    }

    pub fn linear_poles(&self) -> &BTreeMap<Rational, u32> {
        &self.poles
    }

    pub fn other_factor(&self) -> &YPoly {
        &self.other
    }

    /// The full denominator as one polynomial in `y`.
    pub fn denominator(&self) -> YPoly {
        let mut d = self.other.clone();
        for (c, &k) in &self.poles {
            d = &d * &YPoly::linear(c).pow(k as usize);
        }
        d
    }

    /// Some(p) when the value is a polynomial in `y`.
    pub fn as_ypoly(&self) -> Option<YPoly> {
        if !self.poles.is_empty() {
            return None;
        }
        let (q, r) = self.num.div_rem(&self.other)?;
        r.is_zero().then_some(q)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.poles.clear();
            self.other = YPoly::one();
            return;
        }
        if self.other.degree() == Some(0) {
            let inv = self.other.coeff(0).inv().expect("nonzero constant");
            self.num = self.num.scale(&inv);
            self.other = YPoly::one();
        }
        let mut poles = std::mem::take(&mut self.poles);
        for (c, k) in poles.iter_mut() {
            while *k > 0 {
                let (q, r) = self.num.divide_linear(c);
                if !r.is_zero() {
                    break;
                }
                self.num = q;
                *k -= 1;
            }
        }
        poles.retain(|_, k| *k > 0);
        self.poles = poles;
    }

    /// Order of the pole at `y = c` after cancellation (0 if regular there,
    /// as far as the linear factors are concerned).
    pub fn pole_order(&self, c: &Rational) -> u32 {
        self.poles.get(c).copied().unwrap_or(0)
    }

    /// `res_{y=c}` of `f dy`.
    pub fn residue_at(&self, c: &Rational) -> Result<RatFuncX> {
        let k = self.pole_order(c) as usize;
        let mut rest = self.other.clone();
        for (c2, &k2) in &self.poles {
            if c2 != c {
                rest = &rest * &YPoly::linear(c2).pow(k2 as usize);
            }
        }
        let rest_t = rest.shift(c);
        if rest_t.coeff(0).is_zero() {
            return Err(Error::Representation(format!(
                "denominator factor vanishes identically at y = {}",
                format_rational(c)
            )));
        }
        if k == 0 {
            return Ok(RatFuncX::zero());
        }
        let num_t = self.num.shift(c);
        // Taylor coefficients of num_t / rest_t up to t^(k-1).
        let r0_inv = rest_t.coeff(0).inv().expect("nonzero");
        let mut s: Vec<RatFuncX> = Vec::with_capacity(k);
        for j in 0..k {
            let mut acc = num_t.coeff(j);
            for i in 1..=j {
                acc = &acc - &(&rest_t.coeff(i) * &s[j - i]);
            }
            s.push(&acc * &r0_inv);
        }
        Ok(s.pop().unwrap())
    }

    /// `res_{y=inf}` of `f dy`, i.e. minus the coefficient of `1/y` in the
    /// expansion at infinity.
    pub fn residue_at_infinity(&self) -> RatFuncX {
        let den = self.denominator();
        let d = den.degree().unwrap_or(0);
        if d == 0 {
            return RatFuncX::zero();
        }
        let (_, r) = self.num.div_rem(&den).expect("nonzero denominator");
        let c = r.coeff(d - 1);
        if c.is_zero() {
            return RatFuncX::zero();
        }
        -(&c * &den.lead().inv().expect("nonzero lead"))
    }

    /// Value at a point in any backend.
    pub fn eval_generic<S: Scalar>(&self, x: &S, y: &S) -> Option<S> {
        let mut den = self.other.eval_generic(x, y)?;
        for (c, &k) in &self.poles {
            den = den * (y.clone() - S::from_rational(c)).pow(k as usize);
        }
        self.num.eval_generic(x, y)?.try_div(&den)
    }

    /// Value at a constant `y = c` where the function is regular.
    pub fn eval_at_y(&self, c: &Rational) -> Result<RatFuncX> {
        if self.pole_order(c) > 0 {
            return Err(Error::Pole(format!("pole at y = {}", format_rational(c))));
        }
        let mut den = self.other.eval_at(c);
        for (c2, &k) in &self.poles {
            let v = RatFuncX::constant(c - c2);
            for _ in 0..k {
                den = &den * &v;
            }
        }
        let inv = den
            .inv()
            .ok_or_else(|| Error::Pole(format!("denominator vanishes at y = {}", format_rational(c))))?;
        Ok(&self.num.eval_at(c) * &inv)
    }

    fn scale_num(&self, p: &YPoly) -> Self {
        Self::new(&self.num * p, self.poles.clone(), self.other.clone())
    }
}

impl fmt::Debug for YRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}] / (", self.num)?;
        for (c, k) in &self.poles {
            write!(f, "(y - {})^{} ", format_rational(c), k)?;
        }
        write!(f, "* [{:?}])", self.other)
    }
}

impl PartialEq for YRatFunc {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

/// Brings two functions to a common denominator, returning the two
/// numerators and the shared denominator parts.
fn common(a: &YRatFunc, b: &YRatFunc) -> (YPoly, YPoly, BTreeMap<Rational, u32>, YPoly) {
    let mut poles = a.poles.clone();
    for (c, &k) in &b.poles {
        let e = poles.entry(c.clone()).or_insert(0);
        *e = (*e).max(k);
    }
    let lift = |f: &YRatFunc| {
        let mut n = f.num.clone();
        for (c, &k) in &poles {
            let have = f.poles.get(c).copied().unwrap_or(0);
            if k > have {
                n = &n * &YPoly::linear(c).pow((k - have) as usize);
            }
        }
        n
    };
    let (mut na, mut nb) = (lift(a), lift(b));
    let other = if a.other == b.other {
        a.other.clone()
    } else {
        na = &na * &b.other;
        nb = &nb * &a.other;
        &a.other * &b.other
    };
    (na, nb, poles, other)
}

impl<'a> Add<&'a YRatFunc> for &'a YRatFunc {
    type Output = YRatFunc;
    fn add(self, rhs: &YRatFunc) -> YRatFunc {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        let (na, nb, poles, other) = common(self, rhs);
        YRatFunc::new(&na + &nb, poles, other)
    }
}

impl<'a> Sub<&'a YRatFunc> for &'a YRatFunc {
    type Output = YRatFunc;
    fn sub(self, rhs: &YRatFunc) -> YRatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a YRatFunc> for &'a YRatFunc {
    type Output = YRatFunc;
    fn mul(self, rhs: &YRatFunc) -> YRatFunc {
        if self.num.is_zero() || rhs.num.is_zero() {
            return YRatFunc::zero();
        }
        if rhs.poles.is_empty() && rhs.other.is_one() {
            return self.scale_num(&rhs.num);
        }
        if self.poles.is_empty() && self.other.is_one() {
            return rhs.scale_num(&self.num);
        }
        let mut poles = self.poles.clone();
        for (c, &k) in &rhs.poles {
            *poles.entry(c.clone()).or_insert(0) += k;
        }
        let other = if rhs.other.is_one() {
            self.other.clone()
        } else if self.other.is_one() {
            rhs.other.clone()
        } else {
            &self.other * &rhs.other
        };
        YRatFunc::new(&self.num * &rhs.num, poles, other)
    }
}

impl Neg for &YRatFunc {
    type Output = YRatFunc;
    fn neg(self) -> YRatFunc {
        YRatFunc { num: -&self.num, poles: self.poles.clone(), other: self.other.clone() }
    }
}

forward_owned!(YRatFunc, Add, add);
forward_owned!(YRatFunc, Sub, sub);
forward_owned!(YRatFunc, Mul, mul);

impl Neg for YRatFunc {
    type Output = YRatFunc;
    fn neg(self) -> YRatFunc {
        -&self
    }
}

impl super::scalar::Ring for YRatFunc {
    fn zero() -> Self {
        YRatFunc::zero()
    }
    fn one() -> Self {
        YRatFunc::one()
    }
    fn is_zero(&self) -> bool {
        YRatFunc::is_zero(self)
    }
}

impl Scalar for YRatFunc {
    fn from_rational(r: &Rational) -> Self {
        YRatFunc::constant(RatFuncX::constant(r.clone()))
    }

    /// Inverts when the numerator is `l(x) * U(y)` with `U` splitting into
    /// linear factors over the rationals; otherwise `None`.
    fn try_inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        let lead = self.num.lead();
        let lead_inv = lead.inv()?;
        let monic = self.num.scale(&lead_inv);
        let mut u = Vec::with_capacity(monic.coeffs().len());
        for c in monic.coeffs() {
            u.push(c.as_constant()?);
        }
        let u = UniPoly::new(u);
        let mut new_poles = BTreeMap::new();
        if u.degree().unwrap_or(0) > 0 {
            let (roots, complete) = u.rational_roots();
            if !complete {
                return None;
            }
            for (r, m) in roots {
                new_poles.insert(r, m as u32);
            }
        }
        let mut num = self.other.scale(&lead_inv);
        for (c, &k) in &self.poles {
            num = &num * &YPoly::linear(c).pow(k as usize);
        }
        Some(YRatFunc::new(num, new_poles, YPoly::one()))
    }
}

impl From<YPoly> for YRatFunc {
    fn from(p: YPoly) -> Self {
        YRatFunc::from_ypoly(p)
    }
}

impl Default for YRatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

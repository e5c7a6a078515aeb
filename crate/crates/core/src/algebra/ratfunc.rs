//! Rational functions of one variable, kept in lowest terms with a monic
//! denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};
use super::scalar::{ExactDiv, Scalar};
use super::unipoly::{forward_owned, UniPoly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFuncX {
    num: UniPoly,
    den: UniPoly,
}

impl RatFuncX {
    /// `num / den` reduced to canonical form. Panics on a zero denominator.
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lead = den.lead();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFuncX { num, den }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFuncX { num: p, den: UniPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    /// The identity function `x`.
    pub fn x() -> Self {
        Self::from_poly(UniPoly::var())
    }

    pub fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value when the function is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::new(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFuncX { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, at: &Rational) -> Option<Rational> {
        let d = self.den.eval(at);
        (!d.is_zero()).then(|| self.num.eval(at) / d)
    }

    pub fn eval_generic<S: Scalar>(&self, at: &S) -> Option<S> {
        self.num.eval_generic(at).try_div(&self.den.eval_generic(at))
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den)
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.display_with(var)
        } else {
            format!("({})/({})", self.num.display_with(var), self.den.display_with(var))
        }
    }
}

impl fmt::Debug for RatFuncX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

impl fmt::Display for RatFuncX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_constant() {
            Some(c) => write!(f, "{}", format_rational(&c)),
            None => write!(f, "{}", self.display_with("x")),
        }
    }
}

impl<'a> Add<&'a RatFuncX> for &'a RatFuncX {
    type Output = RatFuncX;
    fn add(self, rhs: &RatFuncX) -> RatFuncX {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFuncX::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFuncX::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RatFuncX> for &'a RatFuncX {
    type Output = RatFuncX;
    fn sub(self, rhs: &RatFuncX) -> RatFuncX {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFuncX> for &'a RatFuncX {
    type Output = RatFuncX;
    fn mul(self, rhs: &RatFuncX) -> RatFuncX {
        if self.is_zero() || rhs.is_zero() {
            return RatFuncX::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFuncX::from_poly(&self.num * &rhs.num);
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        RatFuncX::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFuncX {
    type Output = RatFuncX;
    fn neg(self) -> RatFuncX {
        RatFuncX { num: -&self.num, den: self.den.clone() }
    }
}

forward_owned!(RatFuncX, Add, add);
forward_owned!(RatFuncX, Sub, sub);
forward_owned!(RatFuncX, Mul, mul);

impl Neg for RatFuncX {
    type Output = RatFuncX;
    fn neg(self) -> RatFuncX {
        -&self
    }
}

impl super::scalar::Ring for RatFuncX {
    fn zero() -> Self {
        RatFuncX::zero()
    }
    fn one() -> Self {
        RatFuncX::one()
    }
    fn is_zero(&self) -> bool {
        RatFuncX::is_zero(self)
    }
}

impl ExactDiv for RatFuncX {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        divisor.inv().map(|inv| self * &inv)
    }
}

impl Scalar for RatFuncX {
    fn from_rational(r: &Rational) -> Self {
        RatFuncX::constant(r.clone())
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }
}

impl From<UniPoly> for RatFuncX {
    fn from(p: UniPoly) -> Self {
        RatFuncX::from_poly(p)
    }
}

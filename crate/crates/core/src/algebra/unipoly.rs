//! Dense univariate polynomials with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::rational::{format_rational, Rational};
use super::scalar::{ExactDiv, Scalar};
use crate::error::{Error, Result};

/// Coefficients in ascending degree; the leading coefficient is nonzero
/// unless the polynomial is zero (empty vector).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `v`.
    pub fn var() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `v - root`.
    pub fn linear(root: &Rational) -> Self {
        Self::new(vec![-root.clone(), Rational::one()])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().recip();
        self.scale(&inv)
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Horner evaluation in any scalar backend.
    pub fn eval_generic<S: Scalar>(&self, at: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + S::from_rational(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        if self.degree().is_none_or(|d| d < dd) {
            return Some((Self::zero(), self.clone()));
        }
        let lead_inv = divisor.lead().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient, or `None` if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Synthetic division by `(v - root)`; errors unless `root` is a zero.
    pub fn exact_divide_linear(&self, root: &Rational) -> Result<Self> {
        let (q, r) = synthetic_division(&self.coeffs, root);
        if !r.is_zero() {
            return Err(Error::InvalidDivision(format!(
                "remainder {} on division by (v - {})",
                format_rational(&r),
                format_rational(root)
            )));
        }
        Ok(Self::new(q))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `v -> c + v`.
    pub fn shift(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        let lin = Self::new(vec![c.clone(), Rational::one()]);
        for coef in self.coeffs.iter().rev() {
            out = &(&out * &lin) + &Self::constant(coef.clone());
        }
        out
    }

    /// Multiplies by the lcm of the coefficient denominators and divides by
    /// the integer content, returning a primitive integer polynomial with
    /// positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -1 } else { 1 };
        ints.iter().map(|c| c / &content * sign).collect()
    }

    /// Sylvester resultant `res(f, g)`.
    ///
    /// Conventions for degenerate inputs: both zero is an error; a zero
    /// polynomial against a nonconstant one gives 0; a nonzero constant `c`
    /// against a polynomial of degree `d` gives `c^d` (and 1 against zero).
    pub fn resultant(f: &Self, g: &Self) -> Result<Rational> {
        match (f.degree(), g.degree()) {
            (None, None) => Err(Error::DegenerateInput("resultant of two zero polynomials".into())),
            (None, Some(0)) | (Some(0), None) => Ok(Rational::one()),
            (None, Some(_)) | (Some(_), None) => Ok(Rational::zero()),
            (Some(0), Some(dg)) => Ok(pow_rat(&f.lead(), dg)),
            (Some(df), Some(0)) => Ok(pow_rat(&g.lead(), df)),
            (Some(df), Some(dg)) => {
                let size = df + dg;
                let mut syl = Matrix::<Rational>::zeros(size, size);
                for r in 0..dg {
                    for (k, c) in f.coeffs.iter().rev().enumerate() {
                        syl[(r, r + k)] = c.clone();
                    }
                }
                for r in 0..df {
                    for (k, c) in g.coeffs.iter().rev().enumerate() {
                        syl[(dg + r, r + k)] = c.clone();
                    }
                }
                Ok(syl.det_bareiss())
            }
        }
    }

    /// All rational roots with multiplicities, plus a flag reporting whether
    /// they account for the full degree.
    pub fn rational_roots(&self) -> (Vec<(Rational, usize)>, bool) {
        let Some(deg) = self.degree() else {
            return (Vec::new(), false);
        };
        let mut rest = self.clone();
        let mut roots: Vec<(Rational, usize)> = Vec::new();
        let mut zero_mult = 0;
        while rest.degree().unwrap_or(0) > 0 && rest.coeff(0).is_zero() {
            rest = rest.exact_divide_linear(&Rational::zero()).expect("zero root");
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push((Rational::zero(), zero_mult));
        }
        if rest.degree().unwrap_or(0) > 0 {
            let ints = rest.primitive_integer();
            let p_divs = divisors(&ints[0].abs());
            let q_divs = divisors(&ints.last().unwrap().abs());
            let mut candidates: Vec<Rational> = Vec::new();
            for p in &p_divs {
                for q in &q_divs {
                    let c = Rational::new(p.clone(), q.clone());
                    candidates.push(c.clone());
                    candidates.push(-c);
                }
            }
            candidates.sort();
            candidates.dedup();
            for c in candidates {
                let mut mult = 0;
                while rest.degree().unwrap_or(0) > 0 && rest.eval(&c).is_zero() {
                    rest = rest.exact_divide_linear(&c).expect("root");
                    mult += 1;
                }
                if mult > 0 {
                    roots.push((c, mult));
                }
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        let total: usize = roots.iter().map(|r| r.1).sum();
        (roots, total == deg)
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&format_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", format_rational(&abs), mono));
            }
        }
        out
    }
}

fn pow_rat(c: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * c)
}

/// Synthetic division of ascending coefficients by `(v - root)`.
pub(crate) fn synthetic_division(coeffs: &[Rational], root: &Rational) -> (Vec<Rational>, Rational) {
    if coeffs.is_empty() {
        return (Vec::new(), Rational::zero());
    }
    let n = coeffs.len();
    let mut quot = vec![Rational::zero(); n - 1];
    let mut carry = Rational::zero();
    for k in (0..n).rev() {
        let val = &coeffs[k] + &carry * root;
        if k == 0 {
            return (quot, val);
        }
        quot[k - 1] = val.clone();
        carry = val;
    }
    unreachable!()
}

/// Positive divisors of `n` (n > 0). Trial division up to 10^6; a
/// remaining cofactor is treated as prime, so the list may be incomplete
/// for integers with two or more very large prime factors.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= m && p <= limit {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1u32;
    }
    if m > BigInt::one() {
        factors.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (prime, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &prime;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("v"))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    };
}
pub(crate) use forward_owned;

forward_owned!(UniPoly, Add, add);
forward_owned!(UniPoly, Sub, sub);
forward_owned!(UniPoly, Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl super::scalar::Ring for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
}

impl ExactDiv for UniPoly {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        self.div_exact(divisor)
    }
}

/// Largest absolute coefficient, as `f64` (at least `f64::MIN_POSITIVE`).
pub fn coefficient_scale(p: &UniPoly) -> f64 {
    p.coeffs()
        .iter()
        .map(|c| super::scalar::rational_to_f64(c).abs())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE)
}

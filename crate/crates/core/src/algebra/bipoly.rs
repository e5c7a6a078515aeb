//! Sparse bivariate polynomials in `x` and `y`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use super::ratfunc::RatFuncX;
use super::scalar::Scalar;
use super::unipoly::{forward_owned, UniPoly};
use super::ypoly::YPoly;

/// Terms keyed by `(i, j)` for the monomial `x^i y^j`. Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, Rational)>) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms([(0, 0, c)])
    }

    pub fn x() -> Self {
        Self::from_terms([(1, 0, Rational::one())])
    }

    pub fn y() -> Self {
        Self::from_terms([(0, 1, Rational::one())])
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> Vec<(i64, i64)> {
        self.terms.keys().map(|&(i, j)| (i as i64, j as i64)).collect()
    }

    pub fn deg_x(&self) -> usize {
        self.terms.keys().map(|k| k.0 as usize).max().unwrap_or(0)
    }

    pub fn deg_y(&self) -> usize {
        self.terms.keys().map(|k| k.1 as usize).max().unwrap_or(0)
    }

    /// Coefficient of `y^j` as a polynomial in `x`.
    pub fn a(&self, j: usize) -> UniPoly {
        let mut c = vec![Rational::zero(); self.deg_x() + 1];
        for (&(i, jj), v) in &self.terms {
            if jj as usize == j {
                c[i as usize] = v.clone();
            }
        }
        UniPoly::new(c)
    }

    /// Coefficient of `x^i` as a polynomial in `y`.
    pub fn b(&self, i: usize) -> UniPoly {
        let mut c = vec![Rational::zero(); self.deg_y() + 1];
        for (&(ii, j), v) in &self.terms {
            if ii as usize == i {
                c[j as usize] = v.clone();
            }
        }
        UniPoly::new(c)
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_xy(&self) -> Self {
        Self::from_terms(self.terms().map(|(i, j, c)| (j, i, c.clone())))
    }

    pub fn d_dx(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|t| t.0 > 0)
                .map(|(i, j, c)| (i - 1, j, c * Rational::from_integer(BigInt::from(i)))),
        )
    }

    pub fn d_dy(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|t| t.1 > 0)
                .map(|(i, j, c)| (i, j - 1, c * Rational::from_integer(BigInt::from(j)))),
        )
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.eval_generic(x, y)
    }

    /// Evaluation in any scalar backend via nested Horner in `y`.
    pub fn eval_generic<S: Scalar>(&self, x: &S, y: &S) -> S {
        let n = self.deg_y();
        let mut acc = S::zero();
        for j in (0..=n).rev() {
            acc = acc * y.clone() + self.a(j).eval_generic(x);
        }
        acc
    }

    /// `E(x0, y)` as a polynomial in `y`.
    pub fn at_x(&self, x0: &Rational) -> UniPoly {
        UniPoly::new((0..=self.deg_y()).map(|j| self.a(j).eval(x0)).collect())
    }

    /// `E(x, y0)` as a polynomial in `x`.
    pub fn at_y(&self, y0: &Rational) -> UniPoly {
        UniPoly::new((0..=self.deg_x()).map(|i| self.b(i).eval(y0)).collect())
    }

    /// The same polynomial viewed in `y` over the field of functions of `x`.
    pub fn to_ypoly(&self) -> YPoly {
        YPoly::new((0..=self.deg_y()).map(|j| RatFuncX::from_poly(self.a(j))).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms().map(|(i, j, v)| (i, j, v * c)))
    }

    /// Canonical text form, descending in `y` then in `x`; parsable back by
    /// the curve grammar.
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 .1, k.0 .0)));
        for (k, (&(i, j), c)) in keys.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = monomial(i, j);
            if mono.is_empty() {
                out.push_str(&format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format_rational(&mag));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

fn monomial(i: u32, j: u32) -> String {
    let part = |v: &str, e: u32| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    };
    let (px, py) = (part("x", i), part("y", j));
    match (px.is_empty(), py.is_empty()) {
        (false, false) => format!("{px}*{py}"),
        _ => px + &py,
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({})", self.to_canonical_string())
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (i1, j1, c1) in self.terms() {
            for (i2, j2, c2) in rhs.terms() {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::from_terms(self.terms().map(|(i, j, c)| (i, j, -c)))
    }
}

forward_owned!(BiPoly, Add, add);
forward_owned!(BiPoly, Sub, sub);
forward_owned!(BiPoly, Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl super::scalar::Ring for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn one() -> Self {
        BiPoly::constant(<Rational as One>::one())
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
}

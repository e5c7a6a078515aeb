//! The third-kind seed `Omega(p; q, p_o)`.
//!
//! Orientation `Y`:
//! `E(z,y)/((x-z)(y-w)) - E(p_ox,y)/((x-p_ox)(y-p_oy)) + y^(n-1) (DD_an(z,x) - DD_an(p_ox,x))`
//! with `DD_f(u,v) = (f(u) - f(v))/(u - v)`; orientation `X` swaps the roles
//! of the two coordinates in every point and uses `b_m`.
//!
//! Writing `Omega(p; q, p_o) = F(p, q) - F(p, p_o)`, each half `F` with one
//! point fixed is stored in structured form: one simple-pole term whose
//! numerator is an exact polynomial quotient, plus a polynomial.

use crate::algebra::{format_rational, BiPoly, Rational, Scalar, UniPoly};
use crate::curve::{CurvePoint, Orientation, SpectralCurve};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Which argument of `Omega` is left symbolic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreeSlot {
    P,
    Q,
}

/// `numer(v) / (u - at)`, where `v` is the coordinate `numer_var` of the
/// free point and `u` the other one.
#[derive(Clone, Debug, PartialEq)]
pub struct PoleTerm {
    pub numer: UniPoly,
    pub numer_var: Var,
    pub at: Rational,
}

impl PoleTerm {
    pub fn eval<S: Scalar>(&self, x: &S, y: &S) -> Result<S> {
        let (v, u) = match self.numer_var {
            Var::X => (x, y),
            Var::Y => (y, x),
        };
        let den = u.clone() - S::from_rational(&self.at);
        self.numer.eval_generic(v).try_div(&den).ok_or_else(|| {
            Error::NonGeneric(format!(
                "coalesced coordinate {} in the third-kind seed",
                format_rational(&self.at)
            ))
        })
    }
}

/// `Omega` with one slot symbolic: `plus - minus + poly` in the free point.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaSeed {
    pub orientation: Orientation,
    pub free: FreeSlot,
    pub plus: PoleTerm,
    pub minus: Option<PoleTerm>,
    pub poly: BiPoly,
}

impl OmegaSeed {
    /// `Omega` as a function of `p`, for fixed `q` and base point `p_o`.
    pub fn with_p_free(curve: &SpectralCurve, q: &CurvePoint, p_o: &CurvePoint) -> Result<Self> {
        let (plus, poly_q) = half_p_free(curve, q)?;
        let (minus, poly_o) = half_p_free(curve, p_o)?;
        Ok(OmegaSeed {
            orientation: curve.orientation(),
            free: FreeSlot::P,
            plus,
            minus: Some(minus),
            poly: &poly_q - &poly_o,
        })
    }

    /// `Omega` as a function of `q`, for fixed `p` and base point `p_o`.
    pub fn with_q_free(curve: &SpectralCurve, p: &CurvePoint, p_o: &CurvePoint) -> Result<Self> {
        let (plus, poly) = half_q_free(curve, p)?;
        let (t, poly_o) = half_p_free(curve, p_o)?;
        let constant = t.eval(&p.x, &p.y)? + poly_o.eval(&p.x, &p.y);
        Ok(OmegaSeed {
            orientation: curve.orientation(),
            free: FreeSlot::Q,
            plus,
            minus: None,
            poly: &poly - &BiPoly::constant(constant),
        })
    }

    /// Value at the free point `(x, y)`.
    pub fn eval<S: Scalar>(&self, x: &S, y: &S) -> Result<S> {
        let mut v = self.plus.eval(x, y)? + self.poly.eval_generic(x, y);
        if let Some(m) = &self.minus {
            v = v - m.eval(x, y)?;
        }
        Ok(v)
    }
}

fn exact_quotient(p: &UniPoly, root: &Rational, what: &str) -> Result<UniPoly> {
    p.exact_divide_linear(root)
        .map_err(|_| Error::NotOnCurve(format!("{what}: nonzero remainder in exact division")))
}

/// `F(p, q)` as a function of the free `p`, with `q` fixed.
fn half_p_free(curve: &SpectralCurve, q: &CurvePoint) -> Result<(PoleTerm, BiPoly)> {
    match curve.orientation() {
        Orientation::Y => {
            // E(z, y) / (y - w), a polynomial in y, over (x - z)
            let numer = exact_quotient(&curve.e().at_x(&q.x), &q.y, &format!("{q}"))?;
            let dd = divided_difference(curve.leading(), &q.x);
            let n1 = (curve.n() - 1) as u32;
            let poly = BiPoly::from_terms(dd.coeffs().iter().enumerate().map(|(i, c)| (i as u32, n1, c.clone())));
            Ok((PoleTerm { numer, numer_var: Var::Y, at: q.x.clone() }, poly))
        }
        Orientation::X => {
            let numer = exact_quotient(&curve.e().at_y(&q.y), &q.x, &format!("{q}"))?;
            let dd = divided_difference(curve.b(curve.m()), &q.y);
            let m1 = (curve.m() - 1) as u32;
            let poly = BiPoly::from_terms(dd.coeffs().iter().enumerate().map(|(j, c)| (m1, j as u32, c.clone())));
            Ok((PoleTerm { numer, numer_var: Var::X, at: q.y.clone() }, poly))
        }
    }
}

/// `F(p, q)` as a function of the free `q = (x, y)`, with `p` fixed.
fn half_q_free(curve: &SpectralCurve, p: &CurvePoint) -> Result<(PoleTerm, BiPoly)> {
    match curve.orientation() {
        Orientation::Y => {
            // E(z, p_y) / ((p_x - z)(p_y - w)) = [E(., p_y)/(. - p_x)](z) / (w - p_y)
            let numer = exact_quotient(&curve.e().at_y(&p.y), &p.x, &format!("{p}"))?;
            let scale = pow(&p.y, curve.n() - 1);
            let dd = divided_difference(curve.leading(), &p.x).scale(&scale);
            let poly = BiPoly::from_terms(dd.coeffs().iter().enumerate().map(|(i, c)| (i as u32, 0, c.clone())));
            Ok((PoleTerm { numer, numer_var: Var::X, at: p.y.clone() }, poly))
        }
        Orientation::X => {
            let numer = exact_quotient(&curve.e().at_x(&p.x), &p.y, &format!("{p}"))?;
            let scale = pow(&p.x, curve.m() - 1);
            let dd = divided_difference(curve.b(curve.m()), &p.y).scale(&scale);
            let poly = BiPoly::from_terms(dd.coeffs().iter().enumerate().map(|(j, c)| (0, j as u32, c.clone())));
            Ok((PoleTerm { numer, numer_var: Var::Y, at: p.x.clone() }, poly))
        }
    }
}

fn pow(r: &Rational, k: usize) -> Rational {
    <Rational as crate::algebra::Ring>::pow(r, k)
}

/// `(f(v) - f(u)) / (v - u)` as a polynomial in `v`, for fixed `u`.
pub fn divided_difference(f: &UniPoly, u: &Rational) -> UniPoly {
    let shifted = f - &UniPoly::constant(f.eval(u));
    shifted.exact_divide_linear(u).expect("f - f(u) vanishes at u")
}

/// `(f(u) - f(v)) / (u - v)` computed as `sum_k c_k h_(k-1)(u, v)` with the
/// complete homogeneous polynomials `h`, so it never divides.
pub fn divided_difference_generic<S: Scalar>(f: &UniPoly, u: &S, v: &S) -> S {
    let mut acc = S::zero();
    let mut h = S::one();
    let mut v_pow = S::one();
    for (k, c) in f.coeffs().iter().enumerate().skip(1) {
        if k > 1 {
            v_pow = v_pow * v.clone();
            h = u.clone() * h + v_pow.clone();
        }
        acc = acc + S::from_rational(c) * h.clone();
    }
    acc
}

/// The literal formula with every point generic. Divisions are performed in
/// `S`; used for series expansions where one point moves along the curve.
pub fn omega_generic<S: Scalar>(curve: &SpectralCurve, p: (&S, &S), q: (&S, &S), p_o: (&S, &S)) -> Result<S> {
    let (x, y) = p;
    let (z, w) = q;
    let (ox, oy) = p_o;
    let e = curve.e();
    let div = |num: S, den: S| {
        num.try_div(&den)
            .ok_or_else(|| Error::NonGeneric("coalesced coordinates in the third-kind seed".into()))
    };
    let mul2 = |a: S, b: S| a * b;
    match curve.orientation() {
        Orientation::Y => {
            let t1 = div(e.eval_generic(z, y), mul2(x.clone() - z.clone(), y.clone() - w.clone()))?;
            let t2 = div(e.eval_generic(ox, y), mul2(x.clone() - ox.clone(), y.clone() - oy.clone()))?;
            let a_n = curve.leading();
            let dd = divided_difference_generic(a_n, z, x) - divided_difference_generic(a_n, ox, x);
            Ok(t1 - t2 + y.pow(curve.n() - 1) * dd)
        }
        Orientation::X => {
            let t1 = div(e.eval_generic(x, w), mul2(x.clone() - z.clone(), y.clone() - w.clone()))?;
            let t2 = div(e.eval_generic(x, oy), mul2(x.clone() - ox.clone(), y.clone() - oy.clone()))?;
            let b_m = curve.b(curve.m());
            let dd = divided_difference_generic(b_m, w, y) - divided_difference_generic(b_m, oy, y);
            Ok(t1 - t2 + x.pow(curve.m() - 1) * dd)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::curve::parse_curve;
    use crate::fixtures;

    /// Direct substitution into the orientation-Y formula with plain
    /// rational quotients.
    fn oracle_y(c: &SpectralCurve, p: &CurvePoint, q: &CurvePoint, o: &CurvePoint) -> Rational {
        let e = c.e();
        let an = c.leading();
        let t1 = e.eval(&q.x, &p.y) / ((&p.x - &q.x) * (&p.y - &q.y));
        let t2 = e.eval(&o.x, &p.y) / ((&p.x - &o.x) * (&p.y - &o.y));
        let d1 = (an.eval(&q.x) - an.eval(&p.x)) / (&q.x - &p.x);
        let d2 = (an.eval(&o.x) - an.eval(&p.x)) / (&o.x - &p.x);
        t1 - t2 + pow(&p.y, c.n() - 1) * (d1 - d2)
    }

    #[test]
    fn seeds_match_direct_substitution() {
        let data = fixtures::example1().unwrap();
        let c = &data.curve;
        let d1 = &data.divisor.points[0];
        let zo = &data.normalization_points()[0];
        let want = oracle_y(c, d1, zo, &data.p_o);
        let by_p = OmegaSeed::with_p_free(c, zo, &data.p_o).unwrap().eval(&d1.x, &d1.y).unwrap();
        let by_q = OmegaSeed::with_q_free(c, d1, &data.p_o).unwrap().eval(&zo.x, &zo.y).unwrap();
        let lit = omega_generic(c, (&d1.x, &d1.y), (&zo.x, &zo.y), (&data.p_o.x, &data.p_o.y)).unwrap();
        assert_eq!(by_p, want);
        assert_eq!(by_q, want);
        assert_eq!(lit, want);
    }

    #[test]
    fn omega_vanishes_when_q_is_base() {
        let data = fixtures::example1().unwrap();
        let c = &data.curve;
        let q = &data.divisor.points[1];
        let seed = OmegaSeed::with_p_free(c, q, q).unwrap();
        for p in data.normalization_points() {
            assert_eq!(seed.eval(&p.x, &p.y).unwrap(), int(0));
        }
    }

    #[test]
    fn monic_curve_has_no_polynomial_term() {
        let c = SpectralCurve::analyze(parse_curve("y^3 + y^2 - x^3 + x").unwrap()).unwrap();
        let q = CurvePoint::new(int(1), int(0));
        let o = CurvePoint::new(int(0), int(0));
        let seed = OmegaSeed::with_p_free(&c, &q, &o).unwrap();
        assert!(seed.poly.is_zero());
    }

    #[test]
    fn off_curve_point_rejected() {
        let data = fixtures::example1().unwrap();
        let bad = CurvePoint::new(rat(1, 7), int(2));
        assert!(matches!(OmegaSeed::with_p_free(&data.curve, &bad, &data.p_o), Err(Error::NotOnCurve(_))));
    }

    #[test]
    fn generic_divided_difference() {
        let f = UniPoly::from_i64(&[2, -1, 0, 5]);
        let (u, v) = (rat(3, 2), rat(-1, 3));
        let want = (f.eval(&u) - f.eval(&v)) / (&u - &v);
        assert_eq!(divided_difference_generic(&f, &u, &v), want);
        assert_eq!(divided_difference(&f, &u).eval(&v), want);
    }
}

//! Divisor-normalized holomorphic and second-kind differentials, read off
//! as residues of the kernel in its second argument.
//!
//! `omega_j(p) = res_{q=d_j} C(p, q) dz`,
//! `eta_k(p) = res_{q=p_o} C(p, q) dz / (z - p_ox)^(k+1)`.
//!
//! Both are computed by expanding `Q(p; q(s))` along the exact local branch
//! `q(s) = (q_x + s, w(s))`, with `p` kept symbolic.

use crate::algebra::{int, BiPoly, Laurent, Rational, Scalar, YRatFunc};
use crate::curve::{series_point, CurvePoint};
use crate::error::{Error, Result};

use super::{monomials, omega_generic, CauchyKernel};

/// `omega_j / dx = (sum_alpha coeffs[alpha] x^alpha1 y^alpha2) / E_y`.
#[derive(Clone, Debug, PartialEq)]
pub struct HolomorphicDiff {
    pub index: usize,
    pub alpha_order: Vec<(u32, u32)>,
    pub coeffs: Vec<Rational>,
}

impl HolomorphicDiff {
    pub fn numerator(&self) -> BiPoly {
        BiPoly::from_terms(self.alpha_order.iter().zip(&self.coeffs).map(|(&(a1, a2), c)| (a1, a2, c.clone())))
    }

    /// `omega_j / dx` at `p`.
    pub fn eval(&self, kernel: &CauchyKernel, p: &CurvePoint) -> Result<Rational> {
        let ey = kernel.data().curve.e_y().eval(&p.x, &p.y);
        if ey == int(0) {
            return Err(Error::BranchPoint(format!("E_y vanishes at {p}")));
        }
        Ok(self.numerator().eval(&p.x, &p.y) / ey)
    }
}

/// `eta_k / dx = numerator / E_y`.
#[derive(Clone, Debug)]
pub struct SecondKindDiff {
    pub k: usize,
    pub numerator: YRatFunc,
}

impl SecondKindDiff {
    pub fn eval(&self, kernel: &CauchyKernel, p: &CurvePoint) -> Result<Rational> {
        let ey = kernel.data().curve.e_y().eval(&p.x, &p.y);
        if ey == int(0) {
            return Err(Error::BranchPoint(format!("E_y vanishes at {p}")));
        }
        let v = self
            .numerator
            .eval_generic(&p.x, &p.y)
            .ok_or_else(|| Error::Pole(format!("eta_{} has a pole at {p}", self.k)))?;
        Ok(v / ey)
    }

    /// `eta_k / dx` along the local branch at `at`, in the coordinate `x - at.x`.
    pub fn series_at(&self, kernel: &CauchyKernel, at: &CurvePoint, order: usize) -> Result<Laurent<Rational>> {
        let (x, y) = series_point::<Rational>(&kernel.data().curve, at, order)?;
        let num = self
            .numerator
            .eval_generic(&x, &y)
            .ok_or_else(|| Error::Precision("series inversion failed".into()))?;
        let ey = kernel.data().curve.e_y().eval_generic(&x, &y);
        num.try_div(&ey).ok_or_else(|| Error::BranchPoint(format!("E_y vanishes at {at}")))
    }
}

/// `Q(P; q(s))` with `P` the generic point and `q(s)` the branch at `center`.
fn numerator_series(kernel: &CauchyKernel, center: &CurvePoint, order: usize) -> Result<Laurent<YRatFunc>> {
    let data = kernel.data();
    let c = &data.curve;
    let sys = kernel.system();
    let (z, w) = series_point::<Rational>(c, center, order)?;
    let ox = Laurent::constant(data.p_o.x.clone());
    let oy = Laurent::constant(data.p_o.y.clone());
    let sign = kernel.sign();

    // Q_alpha(q(s)) = Delta^-1 [s * Omega(d_l; q(s), p_o)]
    let mut rhs = Vec::with_capacity(sys.genus());
    for d in &data.divisor.points {
        let (dx, dy) = (Laurent::constant(d.x.clone()), Laurent::constant(d.y.clone()));
        let v = omega_generic(c, (&dx, &dy), (&z, &w), (&ox, &oy))?;
        rhs.push(v * Laurent::constant(sign.clone()));
    }
    let q_alpha = sys.solve(&rhs);

    let lift = |s: &Laurent<Rational>| s.map(YRatFunc::from_rational);
    let (px, py) = (Laurent::constant(YRatFunc::x()), Laurent::constant(YRatFunc::y()));
    let (zl, wl, oxl, oyl) = (lift(&z), lift(&w), lift(&ox), lift(&oy));
    let mut acc = omega_generic(c, (&px, &py), (&zl, &wl), (&oxl, &oyl))? * Laurent::from_rational(sign);
    for (m, qa) in monomials(&sys.alpha_order, &YRatFunc::x(), &YRatFunc::y()).into_iter().zip(&q_alpha) {
        acc = acc - lift(qa) * Laurent::constant(m);
    }
    Ok(acc)
}

/// `omega_1, ..., omega_g`.
pub fn holomorphic_diffs(kernel: &CauchyKernel) -> Result<Vec<HolomorphicDiff>> {
    let data = kernel.data();
    let alpha = kernel.system().alpha_order.clone();
    let mut out = Vec::with_capacity(alpha.len());
    for (j, d) in data.divisor.points.iter().enumerate() {
        let res = numerator_series(kernel, d, 2)?.coeff(-1)?;
        let poly = res
            .as_ypoly()
            .ok_or_else(|| Error::Internal(format!("omega_{} numerator is not polynomial in y", j + 1)))?;
        let mut bi = BiPoly::zero();
        for (k, ck) in poly.coeffs().iter().enumerate() {
            if !ck.is_polynomial() {
                return Err(Error::Internal(format!("omega_{} numerator is not polynomial in x", j + 1)));
            }
            for (i, ci) in ck.num().coeffs().iter().enumerate() {
                bi.add_term(i as u32, k as u32, ci.clone());
            }
        }
        let coeffs: Vec<Rational> = alpha.iter().map(|&(a1, a2)| bi.coeff(a1, a2)).collect();
        let diff = HolomorphicDiff { index: j, alpha_order: alpha.clone(), coeffs };
        if diff.numerator() != bi {
            return Err(Error::Internal(format!(
                "omega_{} numerator {bi} is not supported on the diminished polygon",
                j + 1
            )));
        }
        out.push(diff);
    }
    Ok(out)
}

/// `eta_k` for `k >= 1`. Its expansion at `p_o` is
/// `(x - p_ox)^-(k+1) + O(1)` times `dx`.
pub fn second_kind(kernel: &CauchyKernel, k: usize) -> Result<SecondKindDiff> {
    if k == 0 {
        return Err(Error::Validation("second-kind differentials need k >= 1".into()));
    }
    let p_o = kernel.data().p_o.clone();
    let numerator = numerator_series(kernel, &p_o, k + 2)?.coeff(k as i64)?;
    Ok(SecondKindDiff { k, numerator })
}

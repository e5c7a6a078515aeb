//! Exact local branches `y(x)` at smooth, non-branch rational points.

use crate::algebra::{Laurent, Rational, Scalar};
use crate::error::{Error, Result};

use super::{CurvePoint, SpectralCurve};

/// Coefficients `c_0 = p.y, c_1, ..., c_order` of the branch
/// `y = sum c_k (x - p.x)^k` through `p`, with
/// `E(x, y(x)) = O((x - p.x)^(order + 1))`.
pub fn local_series(curve: &SpectralCurve, p: &CurvePoint, order: usize) -> Result<Vec<Rational>> {
    if !curve.contains(&p.x, &p.y) {
        return Err(Error::NotOnCurve(format!("{p}")));
    }
    let ey = curve.e_y().eval(&p.x, &p.y);
    if ey == Rational::from_integer(0.into()) {
        return Err(Error::BranchPoint(format!("E_y vanishes at {p}; no branch y(x) exists there")));
    }
    let ey_inv = ey.recip();
    let mut coeffs = vec![p.y.clone()];
    for k in 1..=order {
        let prec = k as i64 + 1;
        let t = Laurent::<Rational>::variable(prec);
        let x = Laurent::constant(p.x.clone()) + t.clone();
        let y = t.compose_into(&coeffs).truncate(prec);
        let r = curve.e().eval_generic(&x, &y).coeff(k as i64)?;
        coeffs.push(-(r * &ey_inv));
    }
    Ok(coeffs)
}

/// The point `(p.x + t, y(p.x + t))` as series in `t` with coefficients
/// in `S`, known to `O(t^(order + 1))`.
pub fn series_point<S: Scalar>(
    curve: &SpectralCurve,
    p: &CurvePoint,
    order: usize,
) -> Result<(Laurent<S>, Laurent<S>)> {
    let coeffs = local_series(curve, p, order)?;
    let prec = order as i64 + 1;
    let x = Laurent::from_coeffs(vec![S::from_rational(&p.x), S::one()], prec);
    let y = Laurent::from_coeffs(coeffs.iter().map(S::from_rational).collect(), prec);
    Ok((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, UniPoly};
    use crate::curve::parse_curve;
    use crate::fixtures;

    #[test]
    fn parabola_branch() {
        let c = SpectralCurve::analyze(parse_curve("y - x^2").unwrap()).unwrap();
        let s = local_series(&c, &CurvePoint::new(int(0), int(0)), 3).unwrap();
        assert_eq!(s, vec![int(0), int(0), int(1), int(0)]);
    }

    #[test]
    fn implicit_function_slope_and_resubstitution() {
        let data = fixtures::example1().unwrap();
        let c = &data.curve;
        let p = &data.p_o;
        let s = local_series(c, p, 2).unwrap();
        let slope = -(c.e_x().eval(&p.x, &p.y) / c.e_y().eval(&p.x, &p.y));
        assert_eq!(s[1], slope);
        // resubstitute the truncated branch as a polynomial in x and reduce
        // modulo (x - 1)^3
        let mut y_poly = UniPoly::zero();
        for (k, ck) in s.iter().enumerate() {
            y_poly = &y_poly + &UniPoly::linear(&p.x).pow(k).scale(ck);
        }
        let mut e_at = UniPoly::zero();
        for j in 0..=c.n() {
            e_at = &e_at + &(c.a(j) * &y_poly.pow(j));
        }
        let (_, rem) = e_at.div_rem(&UniPoly::linear(&p.x).pow(3)).unwrap();
        assert!(rem.is_zero());
    }

    #[test]
    fn branch_point_rejected() {
        let c = SpectralCurve::analyze(parse_curve("y^2 - x").unwrap()).unwrap();
        assert!(matches!(
            local_series(&c, &CurvePoint::new(int(0), int(0)), 2),
            Err(Error::BranchPoint(_))
        ));
    }
}

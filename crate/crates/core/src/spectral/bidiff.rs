//! `B(p, q) / (dx dz) = Tr(Pi(p) Pi(q)) / (x - z)^2 = -K(p, q) K(q, p)`.

use serde::Serialize;

use num_traits::Zero;

use crate::algebra::{Laurent, Rational};
use crate::curve::{series_point, CurvePoint};
use crate::error::{Error, Result};
use crate::kernel::CauchyKernel;
use crate::reconstruction::LaxMatrix;

use super::{projector, render_point, IdentityReport, Measured};

#[derive(Clone, Debug, Serialize)]
pub struct BidiffValue {
    /// `Tr(Pi(p) Pi(q)) / (x - z)^2`.
    pub projector_side: String,
    /// `-K(p, q) K(q, p)`.
    pub kernel_side: String,
    pub report: IdentityReport,
}

/// Both sides of the bidifferential at two points with distinct abscissae.
pub fn bidifferential<S: Measured>(lax: &LaxMatrix, kernel: &CauchyKernel, p: (&S, &S), q: (&S, &S)) -> Result<BidiffValue> {
    let d = p.0.clone() - q.0.clone();
    if d.is_zero() {
        return Err(Error::Pole("B(p, q) needs distinct abscissae".into()));
    }
    let pp = projector(lax, p.0, p.1)?;
    let pq = projector(lax, q.0, q.1)?;
    let tr = pp.matrix.mul(&pq.matrix).trace();
    let lhs = tr.try_div(&(d.clone() * d)).ok_or_else(|| Error::Internal("division failed".into()))?;
    let rhs = -(kernel.kernel_pair(p, q)? * kernel.kernel_pair(q, p)?);
    let report = IdentityReport::compare("B = -K(p,q) K(q,p)", vec![render_point(p.0, p.1), render_point(q.0, q.1)], &lhs, &rhs);
    Ok(BidiffValue { projector_side: lhs.render(), kernel_side: rhs.render(), report })
}

/// `(x - z)^2 B(p, q) / (dx dz)` with `p` running along the branch through
/// `q`, in the local parameter `x - z`: `(kernel route, projector route)`.
pub fn bidifferential_series(
    lax: &LaxMatrix,
    kernel: &CauchyKernel,
    q: &CurvePoint,
    order: usize,
) -> Result<(Laurent<Rational>, Laurent<Rational>)> {
    let (x, y) = series_point::<Rational>(&kernel.data().curve, q, order)?;
    let t = x.clone() - Laurent::constant(q.x.clone());
    let t2 = t.clone() * t;
    let ey = kernel.data().curve.e_y().eval(&q.x, &q.y);
    if ey.is_zero() {
        return Err(Error::BranchPoint(format!("E_y vanishes at {q}")));
    }
    let back = kernel
        .symbolic_q(q)?
        .q
        .eval_generic(&x, &y)
        .ok_or_else(|| Error::Precision("series inversion failed".into()))?
        * Laurent::constant(ey.recip());
    let kk = kernel.kernel_generic(&x, &y, q)? * back;
    let via_kernel = -(t2 * kk);
    let pp = projector(lax, &x, &y)?;
    let pq = projector(lax, &q.x, &q.y)?;
    let via_projector = pp.matrix.mul(&pq.matrix.map(|v| Laurent::constant(v.clone()))).trace();
    Ok((via_kernel, via_projector))
}

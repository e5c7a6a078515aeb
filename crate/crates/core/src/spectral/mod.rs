//! Spectral projectors, the bidifferential and multi-point correlators,
//! each computed both from `L(x)` and from the Cauchy kernel.
//!
//! Differentials are returned as coefficients against `dx` (and `dz`).
//! Conventions verified against each other:
//! - `Pi(p) = adj(yI - L(x)) / P_y(x, y)`,
//! - `Pi_ab(p) = -(x - z_o)^2 K(z_o^a, p) K(p, z_o^b)`,
//! - `sum_a K(p, z_o^a) K(z_o^a, q) = K(p, q) (z - x) / ((z_o - x)(z_o - z))`.

pub mod bidiff;
pub mod correlator;

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{format_rational, rational_to_f64, ExactDiv, Laurent, Matrix, Rational, Scalar};
use crate::curve::{series_point, CurvePoint, SpectralCurve};
use crate::error::{Error, Result};
use crate::kernel::CauchyKernel;
use crate::reconstruction::LaxMatrix;

pub use bidiff::{bidifferential, bidifferential_series, BidiffValue};
pub use correlator::{correlator, permutations, CorrelatorValue};

/// Relative tolerance of numeric identity checks.
pub const NUMERIC_TOLERANCE: f64 = 1e-9;

/// Order of the local series used where a kernel formula is `0/0`.
const SERIES_ORDER: usize = 4;

/// A backend whose values can be compared and printed in reports.
pub trait Measured: Scalar + ExactDiv {
    const EXACT: bool;
    fn magnitude(&self) -> f64;
    fn render(&self) -> String;
}

impl Measured for Rational {
    const EXACT: bool = true;
    fn magnitude(&self) -> f64 {
        rational_to_f64(self).abs()
    }
    fn render(&self) -> String {
        format_rational(self)
    }
}

impl Measured for Complex64 {
    const EXACT: bool = false;
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn render(&self) -> String {
        format!("{}{:+}i", self.re, self.im)
    }
}

/// `{identity, points, lhs, rhs, abs_err, rel_err, pass}`.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub points: Vec<String>,
    pub lhs: String,
    pub rhs: String,
    pub abs_err: f64,
    pub rel_err: f64,
    pub pass: bool,
}

impl IdentityReport {
    /// Exact backends pass on equality, numeric ones within
    /// [`NUMERIC_TOLERANCE`] relative.
    pub fn compare<S: Measured>(identity: &str, points: Vec<String>, lhs: &S, rhs: &S) -> Self {
        let diff = lhs.clone() - rhs.clone();
        let abs_err = diff.magnitude();
        let rel_err = abs_err / lhs.magnitude().max(rhs.magnitude()).max(f64::MIN_POSITIVE);
        let pass = if S::EXACT { diff.is_zero() } else { rel_err <= NUMERIC_TOLERANCE };
        IdentityReport { identity: identity.into(), points, lhs: lhs.render(), rhs: rhs.render(), abs_err, rel_err, pass }
    }

    /// Entrywise, with the error relative to the largest entry.
    pub fn compare_matrix<S: Measured>(identity: &str, points: Vec<String>, lhs: &Matrix<S>, rhs: &Matrix<S>) -> Self {
        let scale = lhs.iter().chain(rhs.iter()).map(Measured::magnitude).fold(f64::MIN_POSITIVE, f64::max);
        let diff = lhs.sub(rhs);
        let abs_err = diff.iter().map(Measured::magnitude).fold(0.0, f64::max);
        let rel_err = abs_err / scale;
        let pass = if S::EXACT { diff.is_zero() } else { rel_err <= NUMERIC_TOLERANCE };
        let render = |m: &Matrix<S>| {
            let rows: Vec<String> = (0..m.rows())
                .map(|r| format!("[{}]", m.row(r).iter().map(Measured::render).collect::<Vec<_>>().join(", ")))
                .collect();
            format!("[{}]", rows.join(", "))
        };
        IdentityReport { identity: identity.into(), points, lhs: render(lhs), rhs: render(rhs), abs_err, rel_err, pass }
    }
}

pub(crate) fn render_point<S: Measured>(x: &S, y: &S) -> String {
    format!("({}, {})", x.render(), y.render())
}

#[derive(Clone, Debug)]
pub struct Projector<S> {
    pub x: S,
    pub y: S,
    pub matrix: Matrix<S>,
}

impl<S: Measured> Projector<S> {
    pub fn trace(&self) -> S {
        self.matrix.trace()
    }

    /// `Pi^2` against `Pi`.
    pub fn idempotency(&self) -> IdentityReport {
        let sq = self.matrix.mul(&self.matrix);
        IdentityReport::compare_matrix("Pi^2 = Pi", vec![render_point(&self.x, &self.y)], &sq, &self.matrix)
    }
}

/// `L(x)` in any backend.
pub fn lax_at<S: Scalar>(lax: &LaxMatrix, x: &S) -> Result<Matrix<S>> {
    lax.entries.try_map(|f| f.eval_generic(x).ok_or_else(|| Error::Pole(format!("L has a pole at x = {x:?}"))))
}

/// `adj(yI - L(x)) / P_y(x, y)`.
pub fn projector<S: Measured>(lax: &LaxMatrix, x: &S, y: &S) -> Result<Projector<S>> {
    let l = lax_at(lax, x)?;
    let n = l.rows();
    let m = Matrix::from_fn(n, n, |r, c| if r == c { y.clone() - l[(r, c)].clone() } else { -l[(r, c)].clone() });
    let (_, adj) = m.det_adjugate();
    // d/dy det(yI - L) = Tr adj(yI - L)
    let p_y = adj.trace();
    let inv = p_y.try_inv().ok_or_else(|| {
        Error::EigenvalueCollision(format!("P_y vanishes at {}: y is a repeated eigenvalue", render_point(x, y)))
    })?;
    Ok(Projector { x: x.clone(), y: y.clone(), matrix: adj.scale(&inv) })
}

/// [`projector`] at a rational curve point.
pub fn projector_exact(lax: &LaxMatrix, p: &CurvePoint) -> Result<Projector<Rational>> {
    if !lax.data.curve.contains(&p.x, &p.y) {
        return Err(Error::NotOnCurve(p.to_string()));
    }
    projector(lax, &p.x, &p.y)
}

/// `-(x - z_o)^2 K(z_o^a, p) K(p, z_o^b)` at a generic point.
pub fn projector_kernel<S: Measured>(kernel: &CauchyKernel, x: &S, y: &S) -> Result<Projector<S>> {
    let data = kernel.data();
    let z = S::from_rational(&data.z_o);
    let ws: Vec<S> = data.preimages.iter().map(S::from_rational).collect();
    let col: Result<Vec<S>> = ws.iter().map(|w| kernel.kernel_pair((&z, w), (x, y))).collect();
    let row: Result<Vec<S>> = ws.iter().map(|w| kernel.kernel_pair((x, y), (&z, w))).collect();
    let (col, row) = (col?, row?);
    let d = x.clone() - z;
    let f = -(d.clone() * d);
    let n = ws.len();
    Ok(Projector { x: x.clone(), y: y.clone(), matrix: Matrix::from_fn(n, n, |a, b| f.clone() * col[a].clone() * row[b].clone()) })
}

/// The kernel route at a rational curve point, along the local branch so
/// that points on the fibre over `z_o` (where the factors have poles) are
/// handled exactly.
pub fn projector_kernel_exact(kernel: &CauchyKernel, p: &CurvePoint) -> Result<Projector<Rational>> {
    let (x, y) = series_point::<Rational>(&kernel.data().curve, p, SERIES_ORDER)?;
    let pi = projector_kernel::<Laurent<Rational>>(kernel, &x, &y)?;
    let n = pi.matrix.rows();
    let mut out = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            let s = &pi.matrix[(a, b)];
            for k in s.valuation().unwrap_or(0)..0 {
                if s.coeff(k)? != crate::algebra::int(0) {
                    return Err(Error::Pole(format!("Pi_({a},{b}) is singular at {p}")));
                }
            }
            out[(a, b)] = s.coeff(0)?;
        }
    }
    Ok(Projector { x: p.x.clone(), y: p.y.clone(), matrix: out })
}

impl Measured for Laurent<Rational> {
    const EXACT: bool = true;
    fn magnitude(&self) -> f64 {
        self.coeff(0).map(|c| rational_to_f64(&c).abs()).unwrap_or(f64::NAN)
    }
    fn render(&self) -> String {
        format!("{self:?}")
    }
}

/// `sum_a K(p, z_o^a) K(z_o^a, q)` against `K(p, q) (z - x) / ((z_o - x)(z_o - z))`.
pub fn sheet_sum_identity<S: Measured>(kernel: &CauchyKernel, p: (&S, &S), q: (&S, &S)) -> Result<IdentityReport> {
    let data = kernel.data();
    let zo = S::from_rational(&data.z_o);
    let mut lhs = S::zero();
    for w in &data.preimages {
        let w = S::from_rational(w);
        lhs = lhs + kernel.kernel_pair(p, (&zo, &w))? * kernel.kernel_pair((&zo, &w), q)?;
    }
    let (x, z) = (p.0.clone(), q.0.clone());
    let den = (zo.clone() - x.clone()) * (zo - z.clone());
    let rhs = (kernel.kernel_pair(p, q)? * (z - x))
        .try_div(&den)
        .ok_or_else(|| Error::Pole("z_o coincides with an abscissa".into()))?;
    Ok(IdentityReport::compare("sheet sum", vec![render_point(p.0, p.1), render_point(q.0, q.1)], &lhs, &rhs))
}

/// [`sheet_sum_identity`] at rational points, exactly; coalesced
/// coordinates are resolved along the local branch.
pub fn sheet_sum_identity_exact(kernel: &CauchyKernel, p: &CurvePoint, q: &CurvePoint) -> Result<IdentityReport> {
    let data = kernel.data();
    let mut lhs = Rational::from_integer(0.into());
    for z in data.normalization_points() {
        lhs += kernel.kernel_point(p, &z)? * kernel.kernel_point(&z, q)?;
    }
    let den = (&data.z_o - &p.x) * (&data.z_o - &q.x);
    if den == crate::algebra::int(0) {
        return Err(Error::Pole("z_o coincides with an abscissa".into()));
    }
    let rhs = kernel.kernel_point(p, q)? * (&q.x - &p.x) / den;
    Ok(IdentityReport::compare("sheet sum", vec![p.to_string(), q.to_string()], &lhs, &rhs))
}

/// Both projector routes at one point.
pub fn projector_routes<S: Measured>(lax: &LaxMatrix, kernel: &CauchyKernel, x: &S, y: &S) -> Result<IdentityReport> {
    let a = projector(lax, x, y)?;
    let b = projector_kernel(kernel, x, y)?;
    Ok(IdentityReport::compare_matrix("adjugate = kernel outer product", vec![render_point(x, y)], &a.matrix, &b.matrix))
}

/// `count` deterministic abscissae spread over the square
/// `|Re x|, |Im x| <= radius` (an additive recurrence, so repeated runs
/// agree).
pub fn sample_abscissae(count: usize, radius: f64) -> Vec<Complex64> {
    let (a, b) = (0.618_033_988_749_894_9, 0.414_213_562_373_095_1);
    (1..=count)
        .map(|k| {
            let k = k as f64;
            Complex64::new(((k * a).fract() * 2.0 - 1.0) * radius, ((k * b).fract() * 2.0 - 1.0) * radius)
        })
        .collect()
}

/// A point on the curve over complex `x`, on the given sheet.
pub fn numeric_point(curve: &SpectralCurve, x: Complex64, sheet: usize) -> Result<(Complex64, Complex64)> {
    let sh = crate::curve::numeric_sheets(curve, x)?;
    let y = *sh.roots.get(sheet).ok_or_else(|| Error::Validation(format!("sheet {sheet} out of range")))?;
    Ok((x, y))
}

#[cfg(test)]
mod tests;

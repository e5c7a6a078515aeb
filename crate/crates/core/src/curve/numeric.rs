//! Floating-point sheets `y_1(x), ..., y_n(x)` over a complex abscissa.
//! Used only as an independent cross-check of exact results.

use num_complex::Complex64;

use crate::algebra::Scalar;
use crate::error::{Error, Result};

use super::SpectralCurve;

const MAX_ITER: usize = 500;
const SEPARATION_FLAG: f64 = 1e-8;

#[derive(Clone, Debug)]
pub struct NumericSheets {
    pub roots: Vec<Complex64>,
    /// Two roots closer than `1e-8`: the abscissa is near a branch point
    /// and downstream numeric comparisons are unreliable.
    pub near_branch: bool,
}

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// All roots of a complex polynomial given by ascending coefficients
/// (Aberth-Ehrlich iteration followed by Newton polishing).
pub fn polynomial_roots(c: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = c.len().saturating_sub(1);
    if n == 0 || c[n].norm() == 0.0 {
        return Err(Error::Precision("leading coefficient vanishes numerically".into()));
    }
    let scale = c.iter().map(|a| a.norm()).fold(0.0, f64::max);
    // Cauchy bound for the initial circle
    let radius = 1.0 + c[..n].iter().map(|a| (a / c[n]).norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64))
        .collect();
    for _ in 0..MAX_ITER {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner(c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j])).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / z[i].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    for r in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner(c, *r);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            if step.is_finite() {
                *r -= step;
            }
        }
    }
    for r in &z {
        let (p, _) = horner(c, *r);
        let mag: f64 = c.iter().enumerate().map(|(k, a)| a.norm() * r.norm().powi(k as i32)).sum();
        // NaN residuals fail too
        if p.norm().is_nan() || p.norm() > 1e-10 * mag.max(scale) {
            return Err(Error::Precision(format!("root {r} did not converge (residual {})", p.norm())));
        }
    }
    Ok(z)
}

/// Roots of `E(x, y) = 0` in `y` at a complex `x`.
pub fn numeric_sheets(curve: &SpectralCurve, x: Complex64) -> Result<NumericSheets> {
    let c: Vec<Complex64> = (0..=curve.n()).map(|j| curve.a(j).eval_generic::<Complex64>(&x)).collect();
    let roots = polynomial_roots(&c)?;
    let mut sep = f64::INFINITY;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            sep = sep.min((roots[i] - roots[j]).norm());
        }
    }
    Ok(NumericSheets { roots, near_branch: sep < SEPARATION_FLAG })
}

/// Converts an exact scalar into `Complex64`.
pub fn to_complex(r: &crate::algebra::Rational) -> Complex64 {
    Complex64::from_rational(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn known_fibre() {
        let c = fixtures::example1().unwrap().curve;
        let s = numeric_sheets(&c, Complex64::new(-1.0, 0.0)).unwrap();
        let mut re: Vec<f64> = s.roots.iter().map(|r| r.re).collect();
        re.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in re.iter().zip([-0.5, 0.5, 1.5]) {
            assert!((got - want).abs() < 1e-12);
        }
        assert!(s.roots.iter().all(|r| r.im.abs() < 1e-12));
        assert!(!s.near_branch);
    }

    #[test]
    fn complex_roots_and_branch_flag() {
        // y^2 + 1 at any x
        let roots = polynomial_roots(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)])
            .unwrap();
        assert!(roots.iter().all(|r| (r.norm() - 1.0).abs() < 1e-12 && r.re.abs() < 1e-12));
        let c = SpectralCurve::analyze(crate::curve::parse_curve("y^2 - x").unwrap()).unwrap();
        assert!(numeric_sheets(&c, Complex64::new(1e-20, 0.0)).unwrap().near_branch);
    }
}

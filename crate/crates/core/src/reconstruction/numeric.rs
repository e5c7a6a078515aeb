//! Floating-point cross-checks of `L(x)` against the kernel at a complex
//! abscissa.
//!
//! With `Psi_ac = K(z_o^a, x^c)` and `Psi'_cb = K(x^c, z_o^b)` over the
//! numeric sheets `x^c = (x, y_c)`:
//! - `(Psi Psi')_ab = -delta_ab / (x - z_o)^2`,
//! - `L(x) = -(x - z_o)^2 Psi diag(y_c) Psi'`.

use num_complex::Complex64;

use crate::algebra::{Matrix, Scalar};
use crate::curve::numeric::{numeric_sheets, to_complex};
use crate::error::{Error, Result};
use crate::kernel::{CauchyKernel, KernelSymbolicP, KernelSymbolicQ};

use super::{symbolic_kernels, LaxMatrix};

/// Relative tolerance of both checks.
pub const EIGEN_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct EigenReport {
    pub x: Complex64,
    pub sheets: Vec<Complex64>,
    pub near_branch: bool,
    /// Max deviation of `Psi Psi'` from `-I / (x - z_o)^2`, relative to
    /// `1 / |x - z_o|^2`.
    pub sheet_sum_error: f64,
    /// Max deviation of the reassembled matrix from `L(x)`, relative to
    /// the largest entry of `L(x)`.
    pub reassembly_error: f64,
    pub pass: bool,
}

/// Symbolic kernels at the normalization points, reusable across abscissae.
pub struct EigenChecker<'a> {
    lax: &'a LaxMatrix,
    first: Vec<KernelSymbolicQ>,
    second: Vec<KernelSymbolicP>,
    slopes: Vec<Complex64>,
}

impl<'a> EigenChecker<'a> {
    pub fn new(lax: &'a LaxMatrix) -> Result<Self> {
        let k = CauchyKernel::new(&lax.data)?;
        let sym = symbolic_kernels(&k, &k)?;
        let slopes = super::normalization_slopes(&lax.data)?.iter().map(to_complex).collect();
        Ok(EigenChecker { lax, first: sym.first, second: sym.second, slopes })
    }

    /// `(Psi, Psi')` at the sheets over `x`.
    pub fn psi(&self, x: Complex64, sheets: &[Complex64]) -> Result<(Matrix<Complex64>, Matrix<Complex64>)> {
        let c = &self.lax.data.curve;
        let n = sheets.len();
        let pole = || Error::Pole(format!("kernel pole over x = {x}"));
        let mut psi = Matrix::zeros(n, n);
        let mut psi_p = Matrix::zeros(n, n);
        for (s, y) in sheets.iter().enumerate() {
            let ey = c.e_y().eval_generic(&x, y);
            for a in 0..n {
                let v = self.first[a].q.eval_generic(&x, y).ok_or_else(pole)?;
                psi[(a, s)] = v / self.slopes[a];
                let w = self.second[a].q.eval_generic(&x, y).ok_or_else(pole)?;
                psi_p[(s, a)] = w.try_div(&ey).ok_or_else(|| Error::BranchPoint(format!("E_y vanishes over {x}")))?;
            }
        }
        Ok((psi, psi_p))
    }

    pub fn check(&self, x: Complex64) -> Result<EigenReport> {
        let data = &self.lax.data;
        let sh = numeric_sheets(&data.curve, x)?;
        let n = sh.roots.len();
        let (psi, psi_p) = self.psi(x, &sh.roots)?;
        let d = x - to_complex(&data.z_o);
        let d2 = d * d;

        let prod = psi.mul(&psi_p);
        let scale = 1.0 / d2.norm();
        let mut sheet_sum_error: f64 = 0.0;
        for a in 0..n {
            for b in 0..n {
                let want = if a == b { -1.0 / d2 } else { Complex64::new(0.0, 0.0) };
                sheet_sum_error = sheet_sum_error.max((prod[(a, b)] - want).norm() / scale);
            }
        }

        let y = Matrix::diagonal(&sh.roots);
        let rebuilt = psi.mul(&y).mul(&psi_p).scale(&(-d2));
        let exact = self
            .lax
            .entries
            .try_map(|f| f.eval_generic(&x).ok_or_else(|| Error::Pole(format!("L has a pole at x = {x}"))))?;
        let lmax = exact.iter().map(|v| v.norm()).fold(f64::MIN_POSITIVE, f64::max);
        let mut reassembly_error: f64 = 0.0;
        for a in 0..n {
            for b in 0..n {
                reassembly_error = reassembly_error.max((rebuilt[(a, b)] - exact[(a, b)]).norm() / lmax);
            }
        }
        let pass = sheet_sum_error <= EIGEN_TOLERANCE && reassembly_error <= EIGEN_TOLERANCE;
        Ok(EigenReport { x, sheets: sh.roots, near_branch: sh.near_branch, sheet_sum_error, reassembly_error, pass })
    }
}

/// Both numeric checks of `L` at one abscissa.
pub fn eigencheck_numeric(lax: &LaxMatrix, x: Complex64) -> Result<EigenReport> {
    EigenChecker::new(lax)?.check(x)
}

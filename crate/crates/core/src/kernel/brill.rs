//! The Brill-Noether matrix of the divisor against the holomorphic basis.

use crate::algebra::{QMatrix, Rational, Ring};
use crate::curve::{Divisor, SpectralCurve};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct BrillNoetherSystem {
    /// Diminished-polygon exponents in lexicographic order; column order of
    /// `delta`.
    pub alpha_order: Vec<(u32, u32)>,
    /// `delta[l][alpha] = d_lx^alpha1 * d_ly^alpha2`.
    pub delta: QMatrix,
    pub delta_inv: QMatrix,
}

/// `x^alpha1 * y^alpha2` for every exponent in `alpha`.
pub fn monomials<S: Ring>(alpha: &[(u32, u32)], x: &S, y: &S) -> Vec<S> {
    alpha.iter().map(|&(a1, a2)| x.pow(a1 as usize) * y.pow(a2 as usize)).collect()
}

impl BrillNoetherSystem {
    pub fn new(curve: &SpectralCurve, divisor: &Divisor) -> Result<Self> {
        let alpha_order = curve.alpha_order();
        let g = alpha_order.len();
        if divisor.len() != g {
            return Err(Error::Validation(format!(
                "the divisor has {} points but the curve has genus {g}",
                divisor.len()
            )));
        }
        if g == 0 {
            return Ok(BrillNoetherSystem { alpha_order, delta: QMatrix::zeros(0, 0), delta_inv: QMatrix::zeros(0, 0) });
        }
        let rows: Vec<Vec<Rational>> = divisor.points.iter().map(|d| monomials(&alpha_order, &d.x, &d.y)).collect();
        let delta = QMatrix::from_rows(rows);
        let delta_inv = delta.inverse().map_err(|_| {
            Error::SpecialDivisor(format!(
                "the Brill-Noether matrix is singular: the divisor is special (or degenerate), det = {}",
                delta.det_bareiss()
            ))
        })?;
        Ok(BrillNoetherSystem { alpha_order, delta, delta_inv })
    }

    pub fn genus(&self) -> usize {
        self.alpha_order.len()
    }

    /// `delta_inv * rhs`.
    pub fn solve<S: crate::algebra::Scalar>(&self, rhs: &[S]) -> Vec<S> {
        (0..self.genus())
            .map(|a| {
                rhs.iter()
                    .enumerate()
                    .fold(S::zero(), |acc, (l, r)| acc + S::from_rational(&self.delta_inv.row(a)[l]) * r.clone())
            })
            .collect()
    }
}

//! The Cauchy kernel `C(p, q) = Q(p; q) dx / E_y(p)` in rational form.
//!
//! `Q(p; q) = s * Omega(p; q, p_o) - sum_alpha Q_alpha(q) x^alpha1 y^alpha2`
//! with `s = +1` in orientation `Y` and `s = -1` in orientation `X` (there
//! the seed is a third-kind differential with respect to `dy / E_x`, which
//! equals `-dx / E_y` on the curve). The coefficients `Q_alpha(q)` solve
//! `Delta * Q = [s * Omega(d_l; q, p_o)]_l`, so `Q(d_l; q) = 0`.
//!
//! Kernel values are dx-trivialized: `K(p, q) = Q(p; q) / E_y(p)`.

pub mod brill;
pub mod differentials;
pub mod omega;

use crate::algebra::{int, Laurent, Rational, Scalar, YRatFunc};
use crate::curve::{series_point, CurvePoint, Orientation, SpectralCurve, SpectralData};
use crate::error::{Error, Result};

pub use brill::{monomials, BrillNoetherSystem};
pub use differentials::{holomorphic_diffs, second_kind, HolomorphicDiff, SecondKindDiff};
pub use omega::{omega_generic, FreeSlot, OmegaSeed, PoleTerm, Var};

/// Series order used to resolve removable `0/0` in pointwise evaluation.
const REMOVABLE_ORDER: usize = 3;

#[derive(Clone, Debug)]
pub struct CauchyKernel {
    data: SpectralData,
    system: BrillNoetherSystem,
    sign: Rational,
}

/// `Q(p; base)` as a rational function of `p = (x, y)`.
#[derive(Clone, Debug)]
pub struct KernelSymbolicP {
    pub base: CurvePoint,
    pub q: YRatFunc,
}

/// `Q(base; q)` as a rational function of `q = (x, y)`.
#[derive(Clone, Debug)]
pub struct KernelSymbolicQ {
    pub base: CurvePoint,
    pub q: YRatFunc,
}

/// Value on the curve; where the representation is `0/0` (another point
/// on a pole line) the value is taken along the local branch.
fn eval_symbolic(f: &YRatFunc, curve: &SpectralCurve, at: &CurvePoint) -> Result<Rational> {
    match f.eval_generic(&at.x, &at.y) {
        Some(v) => Ok(v),
        None => removable(curve, at, |x, y| {
            f.eval_generic(x, y).ok_or_else(|| Error::Precision("series inversion failed".into()))
        }),
    }
}

impl KernelSymbolicP {
    pub fn eval(&self, curve: &SpectralCurve, p: &CurvePoint) -> Result<Rational> {
        eval_symbolic(&self.q, curve, p)
    }
}

impl KernelSymbolicQ {
    pub fn eval(&self, curve: &SpectralCurve, q: &CurvePoint) -> Result<Rational> {
        eval_symbolic(&self.q, curve, q)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResidueCheck {
    pub at_q: Rational,
    pub at_base: Rational,
    pub pass: bool,
}

impl CauchyKernel {
    pub fn new(data: &SpectralData) -> Result<Self> {
        let system = BrillNoetherSystem::new(&data.curve, &data.divisor)?;
        let sign = match data.curve.orientation() {
            Orientation::Y => int(1),
            Orientation::X => int(-1),
        };
        Ok(CauchyKernel { data: data.clone(), system, sign })
    }

    pub fn data(&self) -> &SpectralData {
        &self.data
    }

    pub fn system(&self) -> &BrillNoetherSystem {
        &self.system
    }

    /// `+1` or `-1` according to the orientation.
    pub fn sign(&self) -> &Rational {
        &self.sign
    }

    fn in_divisor(&self, q: &CurvePoint) -> bool {
        self.data.divisor.points.contains(q)
    }

    /// `Omega(p; q, p_o)` at three rational points.
    pub fn omega(&self, p: &CurvePoint, q: &CurvePoint) -> Result<Rational> {
        OmegaSeed::with_p_free(&self.data.curve, q, &self.data.p_o)?.eval(&p.x, &p.y)
    }

    /// `Q_alpha(q; p_o)` in the order of `system().alpha_order`.
    pub fn q_coefficients(&self, q: &CurvePoint) -> Result<Vec<Rational>> {
        self.q_coefficients_based(q, &self.data.p_o)
    }

    /// `Q_alpha(q; base)`: the same system with another base point.
    pub fn q_coefficients_based(&self, q: &CurvePoint, base: &CurvePoint) -> Result<Vec<Rational>> {
        if self.in_divisor(q) {
            return Err(Error::Pole(format!("Q_alpha has a pole at the divisor point {q}")));
        }
        let c = &self.data.curve;
        let seed = OmegaSeed::with_p_free(c, q, base)?;
        let mut rhs = Vec::with_capacity(self.system.genus());
        for d in &self.data.divisor.points {
            let v = match seed.eval(&d.x, &d.y) {
                Ok(v) => v,
                // d shares a coordinate with q or the base: expand along the branch through d
                Err(Error::NonGeneric(_)) => removable(c, d, |x, y| seed.eval(x, y))?,
                Err(e) => return Err(e),
            };
            rhs.push(&self.sign * v);
        }
        Ok(self.system.solve(&rhs))
    }

    /// `Q(p; q)`.
    pub fn q_value(&self, p: &CurvePoint, q: &CurvePoint) -> Result<Rational> {
        self.check_pair(p, q)?;
        let coeffs = self.q_coefficients(q)?;
        let seed = OmegaSeed::with_p_free(&self.data.curve, q, &self.data.p_o)?;
        let correction = |x: &Rational, y: &Rational| -> Rational {
            monomials(&self.system.alpha_order, x, y).iter().zip(&coeffs).map(|(m, c)| m * c).sum()
        };
        match seed.eval(&p.x, &p.y) {
            Ok(v) => Ok(&self.sign * v - correction(&p.x, &p.y)),
            Err(Error::NonGeneric(_)) => removable(&self.data.curve, p, |x, y| {
                let mut acc = seed.eval(x, y)? * Laurent::constant(self.sign.clone());
                for (m, c) in monomials(&self.system.alpha_order, x, y).into_iter().zip(&coeffs) {
                    acc = acc - m * Laurent::constant(c.clone());
                }
                Ok(acc)
            }),
            Err(e) => Err(e),
        }
    }

    fn check_pair(&self, p: &CurvePoint, q: &CurvePoint) -> Result<()> {
        if p == q {
            return Err(Error::Pole(format!("the kernel has a pole at p = q = {p}")));
        }
        if *p == self.data.p_o {
            return Err(Error::Pole(format!("the kernel has a pole at p = p_o = {p}")));
        }
        Ok(())
    }

    /// `K(p, q) = Q(p; q) / E_y(p)`.
    pub fn kernel_point(&self, p: &CurvePoint, q: &CurvePoint) -> Result<Rational> {
        let ey = self.data.curve.e_y().eval(&p.x, &p.y);
        if ey == int(0) {
            return Err(Error::BranchPoint(format!("E_y vanishes at {p}")));
        }
        Ok(self.q_value(p, q)? / ey)
    }

    /// The same kernel trivialized by `dy`: `-Q(p; q) / E_x(p)`.
    pub fn kernel_point_dy(&self, p: &CurvePoint, q: &CurvePoint) -> Result<Rational> {
        let ex = self.data.curve.e_x().eval(&p.x, &p.y);
        if ex == int(0) {
            return Err(Error::BranchPoint(format!("E_x vanishes at {p}; dy is not a local coordinate")));
        }
        Ok(-(self.q_value(p, q)? / ex))
    }

    /// `K(p, q)` for a generic `p = (x, y)` and fixed rational `q`.
    pub fn kernel_generic<S: Scalar>(&self, x: &S, y: &S, q: &CurvePoint) -> Result<S> {
        let coeffs = self.q_coefficients(q)?;
        let seed = OmegaSeed::with_p_free(&self.data.curve, q, &self.data.p_o)?;
        let mut acc = seed.eval(x, y)? * S::from_rational(&self.sign);
        for (m, c) in monomials(&self.system.alpha_order, x, y).into_iter().zip(&coeffs) {
            acc = acc - m * S::from_rational(c);
        }
        let ey = self.data.curve.e_y().eval_generic(x, y);
        acc.try_div(&ey).ok_or_else(|| Error::BranchPoint("E_y vanishes".into()))
    }

    /// `K(p, q)` with both points generic, from the literal formula.
    pub fn kernel_pair<S: Scalar>(&self, p: (&S, &S), q: (&S, &S)) -> Result<S> {
        let c = &self.data.curve;
        let o = (S::from_rational(&self.data.p_o.x), S::from_rational(&self.data.p_o.y));
        let s = S::from_rational(&self.sign);
        let mut rhs = Vec::with_capacity(self.system.genus());
        for d in &self.data.divisor.points {
            let (dx, dy) = (S::from_rational(&d.x), S::from_rational(&d.y));
            rhs.push(omega_generic(c, (&dx, &dy), q, (&o.0, &o.1))? * s.clone());
        }
        let q_alpha = self.system.solve(&rhs);
        let mut acc = omega_generic(c, p, q, (&o.0, &o.1))? * s;
        for (m, qa) in monomials(&self.system.alpha_order, p.0, p.1).into_iter().zip(q_alpha) {
            acc = acc - m * qa;
        }
        let ey = c.e_y().eval_generic(p.0, p.1);
        acc.try_div(&ey).ok_or_else(|| Error::BranchPoint("E_y vanishes".into()))
    }

    /// `res_{p = at} K(p, q) dx`, from the exact local series at `at`.
    pub fn residue(&self, at: &CurvePoint, q: &CurvePoint, order: usize) -> Result<Rational> {
        let (x, y) = series_point::<Rational>(&self.data.curve, at, order)?;
        self.kernel_generic(&x, &y, q)?.coeff(-1)
    }

    /// Residues of `C(p, q)` at `p = q` and `p = p_o`; pass iff `+1` and `-1`.
    pub fn verify_residues(&self, q: &CurvePoint, order: usize) -> Result<ResidueCheck> {
        let at_q = self.residue(q, q, order)?;
        let at_base = self.residue(&self.data.p_o, q, order)?;
        let pass = at_q == int(1) && at_base == int(-1);
        Ok(ResidueCheck { at_q, at_base, pass })
    }

    /// `Q(p; base)` as a function of `p`.
    pub fn symbolic_p(&self, base: &CurvePoint) -> Result<KernelSymbolicP> {
        let coeffs = self.q_coefficients(base)?;
        let seed = OmegaSeed::with_p_free(&self.data.curve, base, &self.data.p_o)?;
        let (x, y) = (YRatFunc::x(), YRatFunc::y());
        let mut q = seed.eval(&x, &y)? * YRatFunc::from_rational(&self.sign);
        for (m, c) in monomials(&self.system.alpha_order, &x, &y).into_iter().zip(&coeffs) {
            q = q - m * YRatFunc::from_rational(c);
        }
        Ok(KernelSymbolicP { base: base.clone(), q })
    }

    /// `Q(base; q)` as a function of `q`.
    pub fn symbolic_q(&self, base: &CurvePoint) -> Result<KernelSymbolicQ> {
        let c = &self.data.curve;
        let (x, y) = (YRatFunc::x(), YRatFunc::y());
        let p_o = &self.data.p_o;
        let mut q = OmegaSeed::with_q_free(c, base, p_o)?.eval(&x, &y)?;
        // sum_alpha Q_alpha(q) base^alpha = sum_l w_l * Omega(d_l; q, p_o)
        let base_mono = monomials(&self.system.alpha_order, &base.x, &base.y);
        for (l, d) in self.data.divisor.points.iter().enumerate() {
            let w: Rational =
                base_mono.iter().enumerate().map(|(a, m)| m * &self.system.delta_inv.row(a)[l]).sum();
            if w != int(0) {
                q = q - OmegaSeed::with_q_free(c, d, p_o)?.eval(&x, &y)? * YRatFunc::from_rational(&w);
            }
        }
        Ok(KernelSymbolicQ { base: base.clone(), q: q * YRatFunc::from_rational(&self.sign) })
    }

    /// `F_{l,m}(p) = K(z_o^(m), p) / K(z_o^(l), p)`, indices from 0.
    pub fn transition_function(&self, l: usize, m: usize, p: &CurvePoint) -> Result<Rational> {
        let zs = self.data.normalization_points();
        let get = |i: usize| {
            zs.get(i).ok_or_else(|| Error::Validation(format!("sheet index {i} out of range 0..{}", zs.len())))
        };
        let num = self.kernel_point(get(m)?, p)?;
        let den = self.kernel_point(get(l)?, p)?;
        if den == int(0) {
            return Err(Error::Pole(format!("F_({l},{m}) has a pole at {p}")));
        }
        Ok(num / den)
    }
}

/// Value at `p` of a function that is regular there but whose formula is
/// `0/0`, by expanding along the local branch.
fn removable(
    curve: &SpectralCurve,
    p: &CurvePoint,
    f: impl Fn(&Laurent<Rational>, &Laurent<Rational>) -> Result<Laurent<Rational>>,
) -> Result<Rational> {
    let (x, y) = series_point::<Rational>(curve, p, REMOVABLE_ORDER)?;
    let v = f(&x, &y)?;
    for k in v.valuation().unwrap_or(0)..0 {
        if v.coeff(k)? != int(0) {
            return Err(Error::Pole(format!("pole of order {} at {}", -k, p)));
        }
    }
    v.coeff(0)
}

#[cfg(test)]
mod tests;

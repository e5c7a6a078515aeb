//! Spectral curves: analysis, standing assumptions, validated input data,
//! local series and numeric sheets.

pub mod newton;
pub mod numeric;
pub mod parse;
pub mod point;
pub mod series;

use serde::{Deserialize, Serialize};

use crate::algebra::{format_rational, BiPoly, Rational, UniPoly};
use crate::error::{Error, Result};

pub use newton::NewtonPolygon;
pub use numeric::{numeric_sheets, NumericSheets};
pub use parse::{parse_coefficient_list, parse_curve};
pub use point::{CurvePoint, Divisor, SpectralData};
pub use series::{local_series, series_point};

/// Which variant of the leading-coefficient assumption is used: `Y` when
/// the two top coefficients in `y` share no root, `X` for the analogous
/// statement in `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Y,
    X,
}

#[derive(Clone, Debug)]
pub struct SpectralCurve {
    e: BiPoly,
    e_x: BiPoly,
    e_y: BiPoly,
    n: usize,
    m: usize,
    a: Vec<UniPoly>,
    b: Vec<UniPoly>,
    polygon: NewtonPolygon,
    orientation: Orientation,
}

impl SpectralCurve {
    /// Analyzes `E`, picking orientation `Y` first and `X` second.
    pub fn analyze(e: BiPoly) -> Result<Self> {
        Self::analyze_with(e, None)
    }

    /// Analyzes `E` with an optional forced orientation.
    pub fn analyze_with(e: BiPoly, force: Option<Orientation>) -> Result<Self> {
        if e.is_zero() {
            return Err(Error::DegenerateInput("the curve polynomial is zero".into()));
        }
        let n = e.deg_y();
        if n == 0 {
            return Err(Error::DegenerateInput("the curve has degree 0 in y".into()));
        }
        let m = e.deg_x();
        let a: Vec<UniPoly> = (0..=n).map(|j| e.a(j)).collect();
        let b: Vec<UniPoly> = (0..=m).map(|i| e.b(i)).collect();
        let y_ok = UniPoly::resultant(&a[n], &a[n - 1])?;
        let x_ok = if m >= 1 { UniPoly::resultant(&b[m], &b[m - 1])? } else { Rational::from_integer(0.into()) };
        let y_holds = y_ok != Rational::from_integer(0.into());
        let x_holds = m >= 1 && x_ok != Rational::from_integer(0.into());
        let orientation = match force {
            Some(Orientation::Y) if y_holds => Orientation::Y,
            Some(Orientation::X) if x_holds => Orientation::X,
            Some(o) => {
                return Err(Error::AssumptionViolated(format!(
                    "forced orientation {o:?} does not hold: the two leading coefficients share a root"
                )))
            }
            None if y_holds => Orientation::Y,
            None if x_holds => Orientation::X,
            None => {
                return Err(Error::AssumptionViolated(format!(
                    "res(a_n, a_(n-1)) = {} and res(b_m, b_(m-1)) = {}",
                    format_rational(&y_ok),
                    format_rational(&x_ok)
                )))
            }
        };
        let polygon = NewtonPolygon::new(e.support());
        Ok(SpectralCurve { e_x: e.d_dx(), e_y: e.d_dy(), e, n, m, a, b, polygon, orientation })
    }

    pub fn e(&self) -> &BiPoly {
        &self.e
    }

    pub fn e_x(&self) -> &BiPoly {
        &self.e_x
    }

    pub fn e_y(&self) -> &BiPoly {
        &self.e_y
    }

    /// Degree in `y`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Degree in `x`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Coefficient of `y^j`.
    pub fn a(&self, j: usize) -> &UniPoly {
        &self.a[j]
    }

    /// Coefficient of `x^i`.
    pub fn b(&self, i: usize) -> &UniPoly {
        &self.b[i]
    }

    pub fn leading(&self) -> &UniPoly {
        &self.a[self.n]
    }

    pub fn polygon(&self) -> &NewtonPolygon {
        &self.polygon
    }

    pub fn genus(&self) -> usize {
        self.polygon.genus()
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Exponents `(alpha1, alpha2)` of the holomorphic basis
    /// `x^alpha1 y^alpha2 dx / E_y`, in lexicographic order.
    pub fn alpha_order(&self) -> Vec<(u32, u32)> {
        self.polygon.diminished.iter().map(|&(i, j)| (i as u32, j as u32)).collect()
    }

    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        self.e.eval(x, y) == Rational::from_integer(0.into())
    }

    /// Passes iff `E(z_o, w)` keeps degree `n` in `w` and has no repeated
    /// root, i.e. `res_w(E(z_o, w), E_y(z_o, w)) != 0`.
    pub fn check_normalization(&self, z_o: &Rational) -> Result<()> {
        let p = self.e.at_x(z_o);
        if p.degree() != Some(self.n) {
            return Err(Error::Normalization(format!(
                "a_n({}) = 0: the fibre over z_o has fewer than n points",
                format_rational(z_o)
            )));
        }
        let res = UniPoly::resultant(&p, &p.derivative())?;
        if res == Rational::from_integer(0.into()) {
            return Err(Error::Normalization(format!(
                "res_w(E(z_o, w), E_y(z_o, w)) = 0 at z_o = {}: z_o is a branch point",
                format_rational(z_o)
            )));
        }
        Ok(())
    }

    /// The `n` roots of `E(z_o, w)` in ascending order, when all rational.
    pub fn preimages(&self, z_o: &Rational) -> Result<Vec<Rational>> {
        self.check_normalization(z_o)?;
        let (roots, complete) = self.e.at_x(z_o).rational_roots();
        if !complete {
            return Err(Error::IrrationalPreimages(format!(
                "E({}, w) has only {} rational roots out of {}",
                format_rational(z_o),
                roots.len(),
                self.n
            )));
        }
        Ok(roots.into_iter().map(|r| r.0).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::fixtures;

    #[test]
    fn example_curves_have_genus_two() {
        let c1 = fixtures::example1().unwrap();
        assert_eq!(c1.curve.genus(), 2);
        assert_eq!(c1.curve.alpha_order(), vec![(0, 0), (0, 1)]);
        assert_eq!(c1.curve.orientation(), Orientation::Y);
        let c2 = fixtures::example2().unwrap();
        assert_eq!(c2.curve.genus(), 2);
    }

    #[test]
    fn normalization_and_preimages() {
        let c1 = fixtures::example1().unwrap().curve;
        assert!(c1.check_normalization(&int(-1)).is_ok());
        assert_eq!(c1.preimages(&int(-1)).unwrap(), vec![rat(-1, 2), rat(1, 2), rat(3, 2)]);
        // a_n vanishes at -3
        assert!(matches!(c1.check_normalization(&int(-3)), Err(Error::Normalization(_))));

        let c2 = fixtures::example2().unwrap().curve;
        assert_eq!(c2.preimages(&int(-1)).unwrap(), vec![rat(-1, 2), rat(1, 2), rat(3, 2)]);

        let irr = SpectralCurve::analyze(parse_curve("y^2 - 2").unwrap()).unwrap();
        assert!(matches!(irr.preimages(&int(0)), Err(Error::IrrationalPreimages(_))));

        // E(0, w) = w^2 has a double root
        let node = SpectralCurve::analyze(parse_curve("y^2 - x^2 + x^3").unwrap()).unwrap();
        assert!(matches!(node.check_normalization(&int(0)), Err(Error::Normalization(_))));
    }

    #[test]
    fn orientation_selection() {
        let g0 = SpectralCurve::analyze(parse_curve("y^2 - x").unwrap()).unwrap();
        assert_eq!(g0.genus(), 0);
        assert_eq!(g0.orientation(), Orientation::Y);
        // a_2 = a_1 = x share the root 0; b_1 = y^2 + y and b_0 = 1 do not
        let c = SpectralCurve::analyze(parse_curve("x*y^2 + x*y + 1").unwrap()).unwrap();
        assert_eq!(c.orientation(), Orientation::X);
        let bad = SpectralCurve::analyze(parse_curve("x*y^2 + x*y").unwrap());
        assert!(matches!(bad, Err(Error::AssumptionViolated(_))));
        let forced = SpectralCurve::analyze_with(parse_curve("y^2 - x").unwrap(), Some(Orientation::X));
        assert!(forced.is_ok());
    }
}

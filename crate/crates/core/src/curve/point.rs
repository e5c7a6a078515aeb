//! Rational curve points, divisors and the validated input triple.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{format_rational, Rational};
use crate::error::{Error, Result};

use super::SpectralCurve;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurvePoint {
    pub x: Rational,
    pub y: Rational,
}

impl CurvePoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        CurvePoint { x, y }
    }
}

impl fmt::Debug for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor {
    pub points: Vec<CurvePoint>,
}

impl Divisor {
    pub fn new(points: Vec<CurvePoint>) -> Self {
        Divisor { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// The full input: curve, divisor `D`, base point `p_o`, normalization
/// abscissa `z_o` and its `n` preimages (in the order that fixes the
/// diagonal of `L(z_o)`).
#[derive(Clone, Debug)]
pub struct SpectralData {
    pub curve: SpectralCurve,
    pub divisor: Divisor,
    pub p_o: CurvePoint,
    pub z_o: Rational,
    pub preimages: Vec<Rational>,
}

impl SpectralData {
    /// Builds and validates. When `preimages` is `None` they are computed
    /// as the rational roots of `E(z_o, w)`.
    pub fn new(
        curve: SpectralCurve,
        divisor: Divisor,
        p_o: CurvePoint,
        z_o: Rational,
        preimages: Option<Vec<Rational>>,
    ) -> Result<Self> {
        let preimages = match preimages {
            Some(p) => p,
            None => curve.preimages(&z_o)?,
        };
        let data = SpectralData { curve, divisor, p_o, z_o, preimages };
        data.validate()?;
        Ok(data)
    }

    /// Same data with a different divisor (validated).
    pub fn with_divisor(&self, divisor: Divisor) -> Result<Self> {
        let data = SpectralData { divisor, ..self.clone() };
        data.validate()?;
        Ok(data)
    }

    /// The points `z_o^(a) = (z_o, w_o^(a))`.
    pub fn normalization_points(&self) -> Vec<CurvePoint> {
        self.preimages.iter().map(|w| CurvePoint::new(self.z_o.clone(), w.clone())).collect()
    }

    pub fn n(&self) -> usize {
        self.curve.n()
    }

    pub fn validate(&self) -> Result<()> {
        let c = &self.curve;
        let g = c.genus();
        if self.divisor.len() != g {
            return Err(Error::Validation(format!(
                "the divisor has {} points but the curve has genus {g}",
                self.divisor.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for d in &self.divisor.points {
            if !seen.insert(d.clone()) {
                return Err(Error::SpecialDivisor(format!("repeated divisor point {d}")));
            }
        }
        for (name, p) in self
            .divisor
            .points
            .iter()
            .map(|d| ("divisor point", d))
            .chain(std::iter::once(("p_o", &self.p_o)))
        {
            if !c.contains(&p.x, &p.y) {
                return Err(Error::NotOnCurve(format!("{name} {p}")));
            }
        }
        if self.divisor.points.contains(&self.p_o) {
            return Err(Error::NonGeneric(format!("p_o = {} lies in the divisor", self.p_o)));
        }
        c.check_normalization(&self.z_o)?;
        if self.preimages.len() != c.n() {
            return Err(Error::Validation(format!(
                "{} preimages supplied, the curve has degree {} in y",
                self.preimages.len(),
                c.n()
            )));
        }
        for w in &self.preimages {
            if !c.contains(&self.z_o, w) {
                return Err(Error::NotOnCurve(format!(
                    "preimage ({}, {})",
                    format_rational(&self.z_o),
                    format_rational(w)
                )));
            }
        }
        let ys: Vec<&Rational> = self
            .divisor
            .points
            .iter()
            .map(|d| &d.y)
            .chain(std::iter::once(&self.p_o.y))
            .chain(self.preimages.iter())
            .collect();
        if let Some(v) = first_repeat(&ys) {
            return Err(Error::NonGeneric(format!(
                "y-coordinate {} repeats among divisor, p_o and preimages",
                format_rational(v)
            )));
        }
        let xs: Vec<&Rational> = self
            .divisor
            .points
            .iter()
            .map(|d| &d.x)
            .chain([&self.p_o.x, &self.z_o])
            .collect();
        if let Some(v) = first_repeat(&xs) {
            return Err(Error::NonGeneric(format!(
                "x-coordinate {} repeats among divisor, p_o and z_o",
                format_rational(v)
            )));
        }
        let all = self.divisor.points.iter().cloned().chain([self.p_o.clone()]).chain(self.normalization_points());
        for p in all {
            if c.e_y().eval(&p.x, &p.y) == Rational::from_integer(0.into()) {
                return Err(Error::BranchPoint(format!("E_y vanishes at {p}")));
            }
        }
        Ok(())
    }
}

fn first_repeat<'a>(vals: &[&'a Rational]) -> Option<&'a Rational> {
    let mut seen = BTreeSet::new();
    vals.iter().find(|v| !seen.insert(**v)).copied()
}

//! The JSON job file.
//!
//! ```json
//! {
//!   "curve": "(x+3)*y^3 + ...",
//!   "divisor": [["1/3", "1/3"], ["2/3", "4/3"]],
//!   "p_o": ["1", "0"],
//!   "z_o": "-1",
//!   "preimages": ["-1/2", "1/2", "3/2"]
//! }
//! ```
//! `curve` may also be a coefficient list `[[i, j, "p/q"], ...]`.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{parse_rational, Rational};
use crate::curve::{parse_coefficient_list, parse_curve, CurvePoint, Divisor, Orientation, SpectralCurve, SpectralData};
use crate::error::{Error, Result};

/// A rational written as a string or a JSON integer.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatText {
    Text(String),
    Int(i64),
}

impl RatText {
    pub fn value(&self) -> Result<Rational> {
        match self {
            RatText::Text(s) => parse_rational(s),
            RatText::Int(n) => Ok(Rational::from_integer((*n).into())),
        }
    }
}

impl From<&str> for RatText {
    fn from(s: &str) -> Self {
        RatText::Text(s.to_string())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub curve: Value,
    pub divisor: Vec<[RatText; 2]>,
    pub p_o: [RatText; 2],
    pub z_o: RatText,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preimages: Option<Vec<RatText>>,
    /// `"y"` or `"x"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<String>,
    /// Target divisor for `change-divisor`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_divisor: Option<Vec<[RatText; 2]>>,
    /// Evaluation points for `kernel` and `projector`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<[RatText; 2]>,
    /// Largest `k` for the second-kind differentials.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub second_kind: Option<usize>,
}

fn point(p: &[RatText; 2]) -> Result<CurvePoint> {
    Ok(CurvePoint::new(p[0].value()?, p[1].value()?))
}

pub fn parse_orientation(s: &str) -> Result<Orientation> {
    match s.trim().to_ascii_lowercase().as_str() {
        "y" => Ok(Orientation::Y),
        "x" => Ok(Orientation::X),
        other => Err(Error::Validation(format!("orientation must be \"y\" or \"x\", got {other:?}"))),
    }
}

impl JobSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Validation(format!("job file: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn curve(&self, force: Option<Orientation>) -> Result<SpectralCurve> {
        let e = match &self.curve {
            Value::String(s) => parse_curve(s)?,
            v @ Value::Array(_) => parse_coefficient_list(v)?,
            _ => return Err(Error::Validation("curve must be a string or a coefficient list".into())),
        };
        SpectralCurve::analyze_with(e, force)
    }

    /// Validated data; `orientation` overrides the job's own setting.
    pub fn data(&self, orientation: Option<Orientation>) -> Result<SpectralData> {
        let force = match orientation {
            Some(o) => Some(o),
            None => self.orientation.as_deref().map(parse_orientation).transpose()?,
        };
        let curve = self.curve(force)?;
        let divisor = Divisor::new(self.divisor.iter().map(point).collect::<Result<_>>()?);
        let preimages = match &self.preimages {
            Some(v) => Some(v.iter().map(RatText::value).collect::<Result<Vec<_>>>()?),
            None => None,
        };
        SpectralData::new(curve, divisor, point(&self.p_o)?, self.z_o.value()?, preimages)
    }

    pub fn target_divisor(&self) -> Result<Divisor> {
        let t = self
            .target_divisor
            .as_ref()
            .ok_or_else(|| Error::Validation("the job has no \"target_divisor\"".into()))?;
        Ok(Divisor::new(t.iter().map(point).collect::<Result<_>>()?))
    }

    pub fn points(&self) -> Result<Vec<CurvePoint>> {
        self.points.iter().map(point).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    const JOB: &str = r#"{
        "curve": "y^3 - y - x^3 + 2*x",
        "divisor": [["-3/2", "1/2"]],
        "p_o": ["4/3", "1/3"],
        "z_o": 0
    }"#;

    #[test]
    fn parses_and_validates() {
        let job = JobSpec::from_json(JOB).unwrap();
        let data = job.data(None).unwrap();
        assert_eq!(data.preimages, vec![int(-1), int(0), int(1)]);
        assert_eq!(data.divisor.points[0], CurvePoint::new(rat(-3, 2), rat(1, 2)));
    }

    #[test]
    fn coefficient_list_curve() {
        let text = JOB.replace(r#""y^3 - y - x^3 + 2*x""#, r#"[[0, 3, 1], [0, 1, "-1"], [3, 0, -1], [1, 0, "2"]]"#);
        let job = JobSpec::from_json(&text).unwrap();
        assert_eq!(job.data(None).unwrap().curve.genus(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(JobSpec::from_json("{\"curve\": 1}"), Err(Error::Validation(_))));
        let extra = JOB.replace("\"z_o\": 0", "\"z_o\": 0, \"zo\": 1");
        assert!(JobSpec::from_json(&extra).is_err());
        let two = JOB.replace(r#"[["-3/2", "1/2"]]"#, r#"[["-3/2", "1/2"], ["4/3", "1/3"]]"#);
        let err = JobSpec::from_json(&two).unwrap().data(None).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("genus 1"));
        assert!(parse_orientation("z").is_err());
    }
}

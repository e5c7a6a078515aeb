//! Exact arithmetic substrate: rationals, polynomials, rational functions,
//! truncated series and fraction-free linear algebra.

pub mod bipoly;
pub mod matrix;
pub mod ratfunc;
pub mod rational;
pub mod scalar;
pub mod series;
pub mod unipoly;
pub mod ypoly;
pub mod yratfunc;

pub use bipoly::BiPoly;
pub use matrix::{Matrix, QMatrix};
pub use ratfunc::RatFuncX;
pub use rational::{format_rational, int, latex_rational, parse_rational, rat, Rational};
pub use scalar::{rational_to_f64, ExactDiv, Ring, Scalar};
pub use series::Laurent;
pub use unipoly::UniPoly;
pub use ypoly::YPoly;
pub use yratfunc::YRatFunc;

//! Job files, matrix artifacts and LaTeX output.

pub mod job;
pub mod matrix;

pub use job::{JobSpec, RatText};
pub use matrix::{latex_matrix, matrix_from_json, matrix_to_json, parse_matrix_artifact, RatFuncJson};

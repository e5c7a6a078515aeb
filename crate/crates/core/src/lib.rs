pub mod algebra;
pub mod cli;
pub mod curve;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod kernel;
pub mod reconstruction;
pub mod spectral;

pub use error::{Error, Result};

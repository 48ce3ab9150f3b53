//! Exact resolution of the base points of a pencil of plane curves by point
//! blowups, with its dicritical divisors, their valuations and residual maps.

pub mod algebra;
pub mod blowup;
pub mod cli;
pub mod error;
pub mod pencil;
pub mod verify;

pub use error::{Error, Result};

//! Bond theory for closed revolute linkages in exact arithmetic.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod bonds;
pub mod classify;
pub mod curve;
pub mod diagram;
pub mod error;
pub mod expr;
pub mod fixtures;
pub mod linalg;
pub mod linkage;
pub mod motion;
pub mod poly;
pub mod roots;
pub mod series;

#[cfg(test)]
mod test_support;

pub use algebra::*;
pub use error::{Error, Result};

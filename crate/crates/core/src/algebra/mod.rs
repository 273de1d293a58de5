//! Scalars, dual numbers and dual quaternions.

pub mod bigcomplex;
pub mod dual;
pub mod dualquat;
pub mod field;
pub mod gaussian;
pub mod joint;
pub mod quadext;
pub mod rational;
pub mod scalar;

pub use bigcomplex::{BigComplex, DEFAULT_PRECISION};
pub use dual::DualNumber;
pub use dualquat::{Displacement, DualQuaternion};
pub use field::{ComplexField, Field, Ring};
pub use gaussian::Gaussian;
pub use joint::JointQuaternion;
pub use quadext::QuadExt;
pub use rational::{format_rational, int, rat, Rational};
pub use scalar::{Level, Scalar};

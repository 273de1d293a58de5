//! Ring and field abstractions shared by the scalar tower, series and
//! polynomial code.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::{Gaussian, Rational, Scalar};

/// A (not necessarily commutative) ring with unit.
///
/// Operators take their operands by value; generic code clones where it
/// needs to keep an operand.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

/// A commutative field.
pub trait Field: Ring {
    /// Multiplicative inverse, `None` for zero.
    fn try_inv(&self) -> Option<Self>;

    fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }

    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }
}

/// A field containing the Gaussian rationals, closed under complex
/// conjugation.
pub trait ComplexField: Field + Send + Sync + 'static {
    /// Embeds a Gaussian rational, taking any context (radicand, precision)
    /// from `self`.
    fn embed(&self, g: &Gaussian) -> Self;

    /// Complex conjugation. `None` when the conjugate leaves the current
    /// extension.
    fn conj(&self) -> Option<Self>;

    /// Square root inside the same field, if one exists.
    fn sqrt_in_field(&self) -> Option<Self>;

    fn to_scalar(&self) -> Scalar;

    fn approx(&self) -> Complex64;
}

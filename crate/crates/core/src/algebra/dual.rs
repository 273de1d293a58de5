use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Ring;

/// `primal + ε·dual` with ε² = 0.
#[derive(Clone, Debug, PartialEq)]
pub struct DualNumber<F> {
    pub primal: F,
    pub dual: F,
}

impl<F: Ring> DualNumber<F> {
    pub fn new(primal: F, dual: F) -> Self {
        Self { primal, dual }
    }

    pub fn real(primal: F) -> Self {
        Self { primal, dual: F::zero() }
    }

    /// True when the ε part vanishes.
    pub fn is_strictly_real(&self) -> bool {
        self.dual.is_zero()
    }
}

impl<F: Ring> Add for DualNumber<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.primal + o.primal, self.dual + o.dual)
    }
}

impl<F: Ring> Sub for DualNumber<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.primal - o.primal, self.dual - o.dual)
    }
}

impl<F: Ring> Mul for DualNumber<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let dual = self.primal.clone() * o.dual + self.dual * o.primal.clone();
        Self::new(self.primal * o.primal, dual)
    }
}

impl<F: Ring> Neg for DualNumber<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.primal, -self.dual)
    }
}

impl<F: Ring> Ring for DualNumber<F> {
    fn zero() -> Self {
        Self::real(F::zero())
    }
    fn one() -> Self {
        Self::real(F::one())
    }
    fn is_zero(&self) -> bool {
        self.primal.is_zero() && self.dual.is_zero()
    }
}

impl<F: fmt::Display + Ring> fmt::Display for DualNumber<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dual.is_zero() {
            write!(f, "{}", self.primal)
        } else {
            write!(f, "({}) + ({})ε", self.primal, self.dual)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn epsilon_squares_to_zero() {
        let eps = DualNumber::new(int(0), int(1));
        assert!((eps.clone() * eps).is_zero());
        let a = DualNumber::new(int(2), int(3));
        let b = DualNumber::new(int(5), int(7));
        assert_eq!(a * b, DualNumber::new(int(10), int(29)));
    }
}

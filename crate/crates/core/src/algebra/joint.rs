use std::fmt;

use num_traits::Signed;

use super::dualquat::DualQuaternion;
use super::field::Ring;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A revolute axis: unit dual quaternion with zero scalar part, so `h² = −1`.
#[derive(Clone, Debug, PartialEq)]
pub struct JointQuaternion {
    value: DualQuaternion<Rational>,
}

impl JointQuaternion {
    pub fn new(value: DualQuaternion<Rational>) -> Result<Self> {
        if !value.c[0].is_zero() || !value.c[4].is_zero() {
            return Err(Error::Input(format!("joint {value} has nonzero scalar part")));
        }
        if value.primal_vector_is_zero() {
            return Err(Error::Input(format!("joint {value} has zero primal part")));
        }
        let n = value.norm();
        if n.primal != Rational::from_integer(1.into()) || !n.dual.is_zero() {
            return Err(Error::Input(format!("joint {value} is not a unit (norm {n})")));
        }
        Ok(Self { value })
    }

    pub fn from_parts(primal: [Rational; 3], dual: [Rational; 3]) -> Result<Self> {
        let [a, b, c] = primal;
        let [d, e, f] = dual;
        Self::new(DualQuaternion::from_parts([Rational::zero(), a, b, c], [Rational::zero(), d, e, f]))
    }

    pub fn value(&self) -> &DualQuaternion<Rational> {
        &self.value
    }

    pub fn direction(&self) -> [Rational; 3] {
        [self.value.c[1].clone(), self.value.c[2].clone(), self.value.c[3].clone()]
    }

    /// Plücker moment `a × direction` for any point `a` on the axis.
    pub fn moment(&self) -> [Rational; 3] {
        [-self.value.c[5].clone(), -self.value.c[6].clone(), -self.value.c[7].clone()]
    }

    /// True when the first nonzero primal vector coordinate is positive.
    pub fn is_canonically_signed(&self) -> bool {
        self.direction().iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
    }

    pub fn negated(&self) -> Self {
        Self { value: -self.value.clone() }
    }

    /// The canonically signed representative and whether a flip was needed.
    pub fn canonical(&self) -> (Self, bool) {
        if self.is_canonically_signed() {
            (self.clone(), false)
        } else {
            (self.negated(), true)
        }
    }

    /// Same axis up to sign.
    pub fn same_axis(&self, o: &Self) -> bool {
        self.value == o.value || self.value == -o.value.clone()
    }
}

impl fmt::Display for JointQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

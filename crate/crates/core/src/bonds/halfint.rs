use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Neg, Sub};

use serde::{Serialize, Serializer};

/// An element of ½ℤ stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    pub twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub fn from_twice(twice: i64) -> Self {
        Self { twice }
    }

    pub fn int(n: i64) -> Self {
        Self { twice: 2 * n }
    }

    pub fn half() -> Self {
        Self { twice: 1 }
    }

    pub fn is_integer(&self) -> bool {
        self.twice % 2 == 0
    }

    pub fn to_integer(&self) -> Option<i64> {
        self.is_integer().then_some(self.twice / 2)
    }

    pub fn to_f64(&self) -> f64 {
        self.twice as f64 / 2.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.twice),
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Add for HalfInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self { twice: self.twice + o.twice }
    }
}

impl Sub for HalfInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self { twice: self.twice - o.twice }
    }
}

impl Neg for HalfInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self { twice: -self.twice }
    }
}

impl Sum for HalfInt {
    fn sum<I: Iterator<Item = Self>>(it: I) -> Self {
        it.fold(Self::ZERO, |a, b| a + b)
    }
}

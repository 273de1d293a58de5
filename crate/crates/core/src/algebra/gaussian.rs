use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::Signed;

use super::field::{ComplexField, Field, Ring};
use super::rational::{format_rational, rational_sqrt, rational_to_f64, Rational};
use super::Scalar;

/// `re + im·i` with rational parts; `i` is the complex imaginary unit, never
/// the quaternion unit.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        Self { re: Rational::zero(), im: Rational::one() }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(Rational::from_integer(re.into()), Rational::from_integer(im.into()))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact square root with nonnegative real part (positive imaginary part
    /// on the imaginary axis), if `self` is a square in ℚ(i).
    pub fn sqrt(&self) -> Option<Gaussian> {
        if self.im.is_zero() {
            return if self.re.is_negative() {
                rational_sqrt(&-self.re.clone()).map(|s| Gaussian::new(Rational::zero(), s))
            } else {
                rational_sqrt(&self.re).map(Gaussian::real)
            };
        }
        let r = rational_sqrt(&self.norm_sq())?;
        let two = Rational::from_integer(2.into());
        let x = rational_sqrt(&((&r + &self.re) / &two))?;
        let y = rational_sqrt(&((&r - &self.re) / &two))?;
        let y = if self.im.is_negative() { -y } else { y };
        Some(Gaussian::new(x, y))
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    /// Total order: real part first, then imaginary part.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }

    /// True when the canonical emission needs parentheses to act as a factor.
    pub(crate) fn is_compound(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_body = |im: &Rational| -> String {
            let a = im.abs();
            if a == Rational::one() {
                "i".to_string()
            } else {
                format!("{}i", format_rational(&a))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.re)),
            (true, false) => {
                let sign = if self.im.is_negative() { "-" } else { "" };
                write!(f, "{}{}", sign, im_body(&self.im))
            }
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{}{}{}", format_rational(&self.re), sign, im_body(&self.im))
            }
        }
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, o: Gaussian) -> Gaussian {
        Gaussian::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, o: Gaussian) -> Gaussian {
        Gaussian::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, o: Gaussian) -> Gaussian {
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        Gaussian::new(re, im)
    }
}

impl Div for Gaussian {
    type Output = Gaussian;
    fn div(self, o: Gaussian) -> Gaussian {
        self * o.inv()
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

impl From<Rational> for Gaussian {
    fn from(r: Rational) -> Self {
        Gaussian::real(r)
    }
}

impl Ring for Gaussian {
    fn zero() -> Self {
        Gaussian::real(Rational::zero())
    }
    fn one() -> Self {
        Gaussian::real(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Field for Gaussian {
    fn try_inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            return None;
        }
        let n = self.norm_sq();
        Some(Gaussian::new(&self.re / &n, -(&self.im / &n)))
    }
    fn from_rational(r: &Rational) -> Self {
        Gaussian::real(r.clone())
    }
}

impl ComplexField for Gaussian {
    fn embed(&self, g: &Gaussian) -> Self {
        g.clone()
    }
    fn conj(&self) -> Option<Self> {
        Some(Gaussian::conj(self))
    }
    fn sqrt_in_field(&self) -> Option<Self> {
        self.sqrt()
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::from_gaussian(self.clone())
    }
    fn approx(&self) -> Complex64 {
        self.to_complex64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn emission() {
        assert_eq!(Gaussian::new(rat(3, 7), rat(2, 5)).to_string(), "3/7+2/5i");
        assert_eq!(Gaussian::new(rat(0, 1), rat(-1, 1)).to_string(), "-i");
        assert_eq!(Gaussian::new(rat(-1, 1), rat(1, 1)).to_string(), "-1+i");
        assert_eq!(Gaussian::zero().to_string(), "0");
    }

    #[test]
    fn exact_square_roots() {
        let q = Gaussian::from_ints(-48, 64);
        assert_eq!(q.sqrt(), Some(Gaussian::from_ints(4, 8)));
        let q = Gaussian::from_ints(-48, -64);
        assert_eq!(q.sqrt(), Some(Gaussian::from_ints(4, -8)));
        assert_eq!(Gaussian::from_ints(-4, 0).sqrt(), Some(Gaussian::from_ints(0, 2)));
        assert_eq!(Gaussian::from_ints(2, 1).sqrt(), None);
    }

    #[test]
    fn inverse() {
        let z = Gaussian::from_ints(3, 2);
        assert_eq!(z.clone() * z.inv(), Gaussian::one());
    }
}

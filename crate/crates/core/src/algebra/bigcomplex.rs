//! Arbitrary-precision floating complex numbers, used only when a value
//! leaves every exact level of the tower.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{ComplexField, Field, Ring};
use super::rational::Rational;
use super::{Gaussian, Scalar};

pub const DEFAULT_PRECISION: u32 = 256;

/// Fixed-point complex number `(re + im·i) / 2^prec`.
#[derive(Clone, Debug)]
pub struct BigComplex {
    re: BigInt,
    im: BigInt,
    prec: u32,
}

fn shift_round(x: BigInt, bits: u32) -> BigInt {
    if bits == 0 {
        return x;
    }
    let half = BigInt::one() << (bits - 1);
    if x.is_negative() {
        -((-x + half) >> bits)
    } else {
        (x + half) >> bits
    }
}

fn rational_to_fixed(r: &Rational, prec: u32) -> BigInt {
    let scaled = r.numer() << (prec + 1);
    let q = scaled / r.denom();
    shift_round(q, 1)
}

impl BigComplex {
    pub fn zero_with(prec: u32) -> Self {
        Self { re: BigInt::zero(), im: BigInt::zero(), prec }
    }

    pub fn from_gaussian(g: &Gaussian, prec: u32) -> Self {
        Self { re: rational_to_fixed(&g.re, prec), im: rational_to_fixed(&g.im, prec), prec }
    }

    pub fn from_complex64(z: Complex64, prec: u32) -> Self {
        let conv = |x: f64| -> BigInt {
            if x == 0.0 || !x.is_finite() {
                return BigInt::zero();
            }
            let r = Rational::from_float(x).unwrap_or_else(<Rational as Ring>::zero);
            rational_to_fixed(&r, prec)
        };
        Self { re: conv(z.re), im: conv(z.im), prec }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// The same value stored at another precision.
    pub fn rescaled_to(&self, prec: u32) -> Self {
        self.rescaled(prec)
    }

    fn rescaled(&self, prec: u32) -> Self {
        if prec == self.prec {
            return self.clone();
        }
        if prec > self.prec {
            let s = prec - self.prec;
            Self { re: &self.re << s, im: &self.im << s, prec }
        } else {
            let s = self.prec - prec;
            Self { re: shift_round(self.re.clone(), s), im: shift_round(self.im.clone(), s), prec }
        }
    }

    fn align(a: Self, b: Self) -> (Self, Self, u32) {
        let p = a.prec.max(b.prec);
        (a.rescaled(p), b.rescaled(p), p)
    }

    /// |z|² as f64.
    pub fn modulus_f64(&self) -> f64 {
        self.to_complex64().norm()
    }

    pub fn to_complex64(&self) -> Complex64 {
        let conv = |x: &BigInt| -> f64 {
            let bits = x.bits();
            if bits > 1000 {
                let s = bits - 1000;
                (x >> s).to_f64().unwrap_or(0.0) * 2f64.powi(s as i32 - self.prec as i32)
            } else {
                x.to_f64().unwrap_or(0.0) * 2f64.powi(-(self.prec as i32))
            }
        };
        Complex64::new(conv(&self.re), conv(&self.im))
    }

    /// Exact rational values of the stored real and imaginary parts.
    pub fn parts_exact(&self) -> (Rational, Rational) {
        let den = BigInt::one() << self.prec;
        (Rational::new(self.re.clone(), den.clone()), Rational::new(self.im.clone(), den))
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone(), prec: self.prec }
    }

    /// Principal square root (nonnegative real part).
    pub fn sqrt(&self) -> Self {
        let p = self.prec;
        let mod_sq = &self.re * &self.re + &self.im * &self.im; // scale 2^(2p)
        let modulus = mod_sq.sqrt(); // scale 2^p
        let two_p = BigInt::one() << p;
        // sqrt((|z| ± re)/2) at scale 2^p: sqrt(((|z| ± re)/2) * 2^p) with inputs at 2^p.
        let half_plus = (&modulus + &self.re).max(BigInt::zero());
        let half_minus = (&modulus - &self.re).max(BigInt::zero());
        let x = ((half_plus * &two_p) >> 1u32).sqrt();
        let mut y = ((half_minus * &two_p) >> 1u32).sqrt();
        if self.im.sign() == Sign::Minus {
            y = -y;
        }
        Self { re: x, im: y, prec: p }
    }

    fn tolerance_bits(&self) -> u64 {
        (self.prec / 2) as u64
    }
}

impl PartialEq for BigComplex {
    fn eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_zero()
    }
}

impl Add for BigComplex {
    type Output = BigComplex;
    fn add(self, o: BigComplex) -> BigComplex {
        let (a, b, p) = Self::align(self, o);
        BigComplex { re: a.re + b.re, im: a.im + b.im, prec: p }
    }
}

impl Sub for BigComplex {
    type Output = BigComplex;
    fn sub(self, o: BigComplex) -> BigComplex {
        let (a, b, p) = Self::align(self, o);
        BigComplex { re: a.re - b.re, im: a.im - b.im, prec: p }
    }
}

impl Mul for BigComplex {
    type Output = BigComplex;
    fn mul(self, o: BigComplex) -> BigComplex {
        let (a, b, p) = Self::align(self, o);
        let re = &a.re * &b.re - &a.im * &b.im;
        let im = &a.re * &b.im + &a.im * &b.re;
        BigComplex { re: shift_round(re, p), im: shift_round(im, p), prec: p }
    }
}

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex { re: -self.re, im: -self.im, prec: self.prec }
    }
}

impl Ring for BigComplex {
    fn zero() -> Self {
        Self::zero_with(DEFAULT_PRECISION)
    }
    fn one() -> Self {
        Self { re: BigInt::one() << DEFAULT_PRECISION, im: BigInt::zero(), prec: DEFAULT_PRECISION }
    }
    fn is_zero(&self) -> bool {
        let tol = self.tolerance_bits();
        self.re.bits() <= tol && self.im.bits() <= tol
    }
}

impl Field for BigComplex {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let p = self.prec;
        let n = &self.re * &self.re + &self.im * &self.im; // scale 2^(2p)
        let re = (&self.re << (2 * p)) / &n;
        let im = -((&self.im << (2 * p)) / &n);
        Some(BigComplex { re, im, prec: p })
    }
    fn from_rational(r: &Rational) -> Self {
        Self::from_gaussian(&Gaussian::real(r.clone()), DEFAULT_PRECISION)
    }
}

impl ComplexField for BigComplex {
    fn embed(&self, g: &Gaussian) -> Self {
        Self::from_gaussian(g, self.prec)
    }
    fn conj(&self) -> Option<Self> {
        Some(BigComplex::conj(self))
    }
    fn sqrt_in_field(&self) -> Option<Self> {
        Some(self.sqrt())
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::Complex(self.clone())
    }
    fn approx(&self) -> Complex64 {
        self.to_complex64()
    }
}

impl fmt::Display for BigComplex {
    /// Decimal approximation prefixed with `~`; emission only.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.prec as f64) * std::f64::consts::LOG10_2).floor() as usize;
        let digits = digits.clamp(6, 40);
        let dec = |x: &BigInt| -> String {
            let neg = x.is_negative();
            let scaled = shift_round(x.abs() * BigInt::from(10u32).pow(digits as u32), self.prec);
            let s = scaled.to_string();
            let s = if s.len() <= digits { format!("{}{}", "0".repeat(digits + 1 - s.len()), s) } else { s };
            let (ip, fp) = s.split_at(s.len() - digits);
            let fp = fp.trim_end_matches('0');
            let body = if fp.is_empty() { ip.to_string() } else { format!("{ip}.{fp}") };
            if neg && body != "0" {
                format!("-{body}")
            } else {
                body
            }
        };
        let re = dec(&self.re);
        let im = dec(&self.im);
        if im == "0" {
            write!(f, "~{re}")
        } else if im.starts_with('-') {
            write!(f, "~{re}{im}i")
        } else {
            write!(f, "~{re}+{im}i")
        }
    }
}

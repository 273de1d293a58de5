//! Quadratic extensions ℚ(i)(√d).
//!
//! `√d` always denotes the principal complex square root of `d` (nonnegative
//! real part, positive imaginary part on the imaginary axis). The radicand
//! is stored with every element whose `y` part is nonzero; elements with
//! `y = 0` are compatible with any radicand.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex64;
use num_traits::Signed;

use super::field::{ComplexField, Field, Ring};
use super::rational::Rational;
use super::{Gaussian, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct QuadExt {
    x: Gaussian,
    y: Gaussian,
    d: Option<Arc<Gaussian>>,
}

fn merge(a: &Option<Arc<Gaussian>>, b: &Option<Arc<Gaussian>>) -> Option<Arc<Gaussian>> {
    match (a, b) {
        (None, None) => None,
        (Some(d), None) | (None, Some(d)) => Some(d.clone()),
        (Some(d1), Some(d2)) => {
            assert!(d1 == d2, "mixed radicands sqrt({d1}) and sqrt({d2}) in one computation");
            Some(d1.clone())
        }
    }
}

impl QuadExt {
    /// `x + y·√d`; fails when `d` is a square in ℚ(i) (use the Gaussian level).
    pub fn new(x: Gaussian, y: Gaussian, d: Gaussian) -> Result<Self> {
        if d.sqrt().is_some() {
            return Err(Error::UnsupportedExtension(format!("radicand {d} is a square in Q(i)")));
        }
        Ok(Self { x, y, d: Some(Arc::new(d)) })
    }

    /// `√d` itself.
    pub fn sqrt_of(d: Gaussian) -> Result<Self> {
        Self::new(Gaussian::zero(), Gaussian::one(), d)
    }

    pub fn from_gaussian(g: Gaussian) -> Self {
        Self { x: g, y: Gaussian::zero(), d: None }
    }

    pub fn x(&self) -> &Gaussian {
        &self.x
    }

    pub fn y(&self) -> &Gaussian {
        &self.y
    }

    pub fn radicand(&self) -> Option<&Gaussian> {
        if self.y.is_zero() {
            None
        } else {
            self.d.as_deref()
        }
    }

    /// Radicand carried for context even when `y = 0`.
    pub fn context_radicand(&self) -> Option<&Gaussian> {
        self.d.as_deref()
    }

    /// The Gaussian value when the extension coefficient vanishes.
    pub fn demote(&self) -> Option<Gaussian> {
        if self.y.is_zero() {
            Some(self.x.clone())
        } else {
            None
        }
    }

    pub fn is_compatible(&self, other: &Self) -> bool {
        match (self.radicand(), other.radicand()) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    /// Re-expresses `self` over the radicand `d2` when `d/d2` is a square.
    pub fn rebase(&self, d2: &Gaussian) -> Result<Self> {
        let Some(d) = self.radicand() else {
            return Ok(Self { x: self.x.clone(), y: Gaussian::zero(), d: Some(Arc::new(d2.clone())) });
        };
        if d == d2 {
            return Ok(self.clone());
        }
        let ratio = d.clone() / d2.clone();
        let s = ratio.sqrt().ok_or_else(|| {
            Error::UnsupportedExtension(format!("sqrt({d}) is not in Q(i)(sqrt({d2}))"))
        })?;
        // √d = ±s·√d2; the sign is fixed by the principal branches.
        let lhs = principal_sqrt(d);
        let rhs = s.to_complex64() * principal_sqrt(d2);
        let sign = if (lhs - rhs).norm() <= (lhs + rhs).norm() { s } else { -s };
        Ok(Self { x: self.x.clone(), y: self.y.clone() * sign, d: Some(Arc::new(d2.clone())) })
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(self.clone() + o.clone())
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(self.clone() * o.clone())
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.is_compatible(o) {
            Ok(())
        } else {
            Err(Error::UnsupportedExtension(format!(
                "incompatible radicands sqrt({}) and sqrt({})",
                self.radicand().unwrap(),
                o.radicand().unwrap()
            )))
        }
    }

    fn d_value(&self) -> Gaussian {
        self.d.as_deref().cloned().unwrap_or_else(Gaussian::zero)
    }

    /// Square root inside ℚ(i)(√d), when one exists.
    pub fn sqrt(&self) -> Option<Self> {
        if self.y.is_zero() {
            if let Some(r) = self.x.sqrt() {
                return Some(Self { x: r, y: Gaussian::zero(), d: self.d.clone() });
            }
            // √x = b·√d with b² = x/d.
            let d = self.d.as_deref()?;
            let b = (self.x.clone() / d.clone()).sqrt()?;
            let cand = Self { x: Gaussian::zero(), y: b, d: self.d.clone() };
            return Some(cand);
        }
        let d = self.d_value();
        // (a + b√d)² = a² + b²d + 2ab√d.
        let norm = self.x.clone() * self.x.clone() - self.y.clone() * self.y.clone() * d.clone();
        let s = norm.sqrt()?;
        let two = Gaussian::from_ints(2, 0);
        for s in [s.clone(), -s] {
            let a2 = (self.x.clone() + s) / two.clone();
            if a2.is_zero() {
                continue;
            }
            if let Some(a) = a2.sqrt() {
                let b = self.y.clone() / (two.clone() * a.clone());
                return Some(Self { x: a, y: b, d: self.d.clone() });
            }
        }
        None
    }

    pub fn to_complex64(&self) -> Complex64 {
        let base = self.x.to_complex64();
        match self.radicand() {
            None => base,
            Some(d) => base + self.y.to_complex64() * principal_sqrt(d),
        }
    }
}

/// Principal square root of a Gaussian rational in floating point.
pub(crate) fn principal_sqrt(d: &Gaussian) -> Complex64 {
    let z = d.to_complex64();
    let r = z.sqrt();
    if r.re == 0.0 && r.im < 0.0 {
        -r
    } else {
        r
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, o: &Self) -> bool {
        if self.x != o.x || self.y != o.y {
            return false;
        }
        self.y.is_zero() || self.radicand() == o.radicand()
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, o: QuadExt) -> QuadExt {
        let d = merge(&self.d, &o.d);
        QuadExt { x: self.x + o.x, y: self.y + o.y, d }
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, o: QuadExt) -> QuadExt {
        let d = merge(&self.d, &o.d);
        QuadExt { x: self.x - o.x, y: self.y - o.y, d }
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, o: QuadExt) -> QuadExt {
        let d = merge(&self.d, &o.d);
        let dv = d.as_deref().cloned().unwrap_or_else(Gaussian::zero);
        let x = self.x.clone() * o.x.clone() + self.y.clone() * o.y.clone() * dv;
        let y = self.x * o.y + self.y * o.x;
        QuadExt { x, y, d }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { x: -self.x, y: -self.y, d: self.d }
    }
}

impl Ring for QuadExt {
    fn zero() -> Self {
        Self::from_gaussian(Gaussian::zero())
    }
    fn one() -> Self {
        Self::from_gaussian(Gaussian::one())
    }
    fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl Field for QuadExt {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.d_value();
        let n = self.x.clone() * self.x.clone() - self.y.clone() * self.y.clone() * d;
        let ni = n.try_inv()?;
        Some(QuadExt { x: self.x.clone() * ni.clone(), y: -(self.y.clone() * ni), d: self.d.clone() })
    }
    fn from_rational(r: &Rational) -> Self {
        Self::from_gaussian(Gaussian::real(r.clone()))
    }
}

impl ComplexField for QuadExt {
    fn embed(&self, g: &Gaussian) -> Self {
        QuadExt { x: g.clone(), y: Gaussian::zero(), d: self.d.clone() }
    }

    fn conj(&self) -> Option<Self> {
        let Some(d) = self.radicand() else {
            return Some(QuadExt { x: self.x.conj(), y: Gaussian::zero(), d: self.d.clone() });
        };
        // conj(√d) = ±√conj(d); it stays in the field only when conj(d)/d is a square.
        let dc = d.conj();
        let lifted = QuadExt { x: Gaussian::zero(), y: Gaussian::one(), d: Some(Arc::new(dc.clone())) };
        let target = principal_sqrt(d).conj();
        let lifted = lifted.rebase(d).ok()?;
        let sign = if (lifted.to_complex64() - target).norm() < (lifted.to_complex64() + target).norm() {
            Gaussian::one()
        } else {
            -Gaussian::one()
        };
        let root_conj = lifted.y * sign; // conj(√d) = root_conj·√d
        Some(QuadExt { x: self.x.conj(), y: self.y.conj() * root_conj, d: self.d.clone() })
    }

    fn sqrt_in_field(&self) -> Option<Self> {
        self.sqrt()
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::from_quad(self.clone())
    }

    fn approx(&self) -> Complex64 {
        self.to_complex64()
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.radicand() else {
            return write!(f, "{}", self.x);
        };
        let mut out = String::new();
        if !self.x.is_zero() {
            out.push_str(&self.x.to_string());
        }
        let y = &self.y;
        let neg_real = y.im.is_zero() && y.re.is_negative();
        let neg_imag = y.re.is_zero() && y.im.is_negative();
        let (sign, mag) = if neg_real || neg_imag { ("-", -y.clone()) } else { ("+", y.clone()) };
        if !out.is_empty() || sign == "-" {
            out.push_str(sign);
        }
        if mag == Gaussian::one() {
            // bare sqrt
        } else if mag.is_compound() {
            out.push_str(&format!("({mag})*"));
        } else {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&format!("sqrt({d})"));
        f.write_str(&out)
    }
}

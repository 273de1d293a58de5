//! Truncated Laurent series `Σ c_k u^k + O(u^prec)` over a field.

use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{Field, Ring};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Absolute precision of exact (polynomial) series.
pub const EXACT: i64 = i64::MAX / 4;

#[derive(Clone, Debug)]
pub struct Series<F> {
    start: i64,
    c: Vec<F>,
    prec: i64,
}

fn sat_add(a: i64, b: i64) -> i64 {
    if a >= EXACT || b >= EXACT {
        EXACT
    } else {
        a + b
    }
}

impl<F: Field> Series<F> {
    fn normalized(mut start: i64, mut c: Vec<F>, prec: i64) -> Self {
        let lead = c.iter().position(|x| !x.is_zero()).unwrap_or(c.len());
        c.drain(..lead);
        start += lead as i64;
        if prec < EXACT {
            let keep = (prec - start).max(0) as usize;
            c.truncate(keep);
        }
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        if c.is_empty() {
            start = prec.min(start);
        }
        Self { start, c, prec }
    }

    pub fn exact(p: &Poly<F>) -> Self {
        Self::normalized(0, p.coeffs().to_vec(), EXACT)
    }

    pub fn constant(a: F) -> Self {
        Self::normalized(0, vec![a], EXACT)
    }

    /// The local parameter `u`.
    pub fn var() -> Self {
        Self::normalized(1, vec![F::one()], EXACT)
    }

    pub fn with_precision(mut self, prec: i64) -> Self {
        let p = self.prec.min(prec);
        self.prec = p;
        Self::normalized(self.start, self.c, p)
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    /// Index of the first nonzero coefficient, `None` if the series is zero
    /// to its precision.
    pub fn valuation(&self) -> Option<i64> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.start)
        }
    }

    /// Vanishing order, failing when the truncation hides it.
    pub fn order(&self, truncation: usize) -> Result<i64> {
        self.valuation().ok_or(Error::TruncationExceeded(truncation))
    }

    /// Lower bound on the valuation.
    fn val_bound(&self) -> i64 {
        self.valuation().unwrap_or(self.prec)
    }

    pub fn coeff(&self, k: i64) -> F {
        if k < self.start {
            return F::zero();
        }
        self.c.get((k - self.start) as usize).cloned().unwrap_or_else(F::zero)
    }

    /// Value at `u = 0` when the series has no pole there.
    pub fn value_at_zero(&self) -> Option<F> {
        match self.valuation() {
            Some(v) if v < 0 => None,
            _ => Some(self.coeff(0)),
        }
    }

    pub fn shift(&self, k: i64) -> Self {
        Self { start: self.start + k, c: self.c.clone(), prec: sat_add(self.prec, k) }
    }

    pub fn map(&self, f: impl Fn(&F) -> F) -> Self {
        Self::normalized(self.start, self.c.iter().map(f).collect(), self.prec)
    }

    fn rel_precision(&self, cap: usize) -> usize {
        if self.prec >= EXACT {
            cap
        } else {
            ((self.prec - self.start).max(0) as usize).min(cap)
        }
    }

    /// Multiplicative inverse keeping relative precision, capped at `cap`
    /// terms for exact inputs.
    pub fn inv(&self, cap: usize) -> Result<Self> {
        let v = self.valuation().ok_or(Error::TruncationExceeded(cap))?;
        let r = self.rel_precision(cap);
        let a0i = self.c[0].try_inv().expect("leading coefficient is nonzero");
        let mut b: Vec<F> = Vec::with_capacity(r);
        for n in 0..r {
            let mut s = if n == 0 { F::one() } else { F::zero() };
            for k in 1..=n.min(self.c.len() - 1) {
                s = s - self.c[k].clone() * b[n - k].clone();
            }
            b.push(s * a0i.clone());
        }
        Ok(Self::normalized(-v, b, -v + r as i64))
    }

    /// Square root with leading coefficient `w0` (`w0² = ` leading coeff).
    pub fn sqrt_with(&self, w0: &F, cap: usize) -> Result<Self> {
        let v = self.valuation().ok_or(Error::TruncationExceeded(cap))?;
        if v % 2 != 0 {
            return Err(Error::UnsupportedConfiguration("square root of a series with odd valuation".into()));
        }
        if w0.clone() * w0.clone() != self.c[0] {
            return Err(Error::Inconsistency("branch value does not square to the radicand".into()));
        }
        let r = self.rel_precision(cap);
        let two_w0_inv = (w0.clone() + w0.clone()).try_inv().expect("nonzero branch");
        let mut y: Vec<F> = vec![w0.clone()];
        for n in 1..r {
            let mut s = self.c.get(n).cloned().unwrap_or_else(F::zero);
            for k in 1..n {
                s = s - y[k].clone() * y[n - k].clone();
            }
            y.push(s * two_w0_inv.clone());
        }
        Ok(Self::normalized(v / 2, y, v / 2 + r as i64))
    }

    pub fn div(&self, o: &Self, cap: usize) -> Result<Self> {
        Ok(self.clone() * o.inv(cap)?)
    }
}

impl<F: Field> PartialEq for Series<F> {
    fn eq(&self, o: &Self) -> bool {
        (self.clone() - o.clone()).c.is_empty()
    }
}

impl<F: Field> Add for Series<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let prec = self.prec.min(o.prec);
        let span = |x: &Self| (!x.c.is_empty()).then(|| (x.start, x.start + x.c.len() as i64));
        let (lo, hi) = match (span(&self), span(&o)) {
            (None, None) => return Self::normalized(prec, vec![], prec),
            (Some(a), None) | (None, Some(a)) => a,
            (Some(a), Some(b)) => (a.0.min(b.0), a.1.max(b.1)),
        };
        let hi = hi.min(prec).max(lo);
        let c = (lo..hi).map(|k| self.coeff(k) + o.coeff(k)).collect();
        Self::normalized(lo, c, prec)
    }
}

impl<F: Field> Sub for Series<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<F: Field> Neg for Series<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { start: self.start, c: self.c.into_iter().map(|x| -x).collect(), prec: self.prec }
    }
}

impl<F: Field> Mul for Series<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let prec = sat_add(self.val_bound(), o.prec).min(sat_add(o.val_bound(), self.prec));
        if self.c.is_empty() || o.c.is_empty() {
            return Self::normalized(prec, vec![], prec);
        }
        let start = self.start + o.start;
        let full = self.c.len() + o.c.len() - 1;
        let n = if prec >= EXACT { full } else { ((prec - start).max(0) as usize).min(full) };
        let mut c = vec![F::zero(); n];
        for (i, a) in self.c.iter().enumerate() {
            if i >= n || a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate().take(n - i) {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::normalized(start, c, prec)
    }
}

impl<F: Field> Ring for Series<F> {
    fn zero() -> Self {
        Self::normalized(EXACT, vec![], EXACT)
    }
    fn one() -> Self {
        Self::constant(F::one())
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, Rational};

    fn s(start: i64, c: &[i64], prec: i64) -> Series<Rational> {
        Series::normalized(start, c.iter().map(|&x| int(x)).collect(), prec)
    }

    #[test]
    fn inverse_of_one_minus_u() {
        let a = Series::exact(&Poly::new(vec![int(1), int(-1)]));
        let b = a.inv(6).unwrap();
        assert_eq!(b, s(0, &[1, 1, 1, 1, 1, 1], 6));
        assert_eq!(b.precision(), 6);
        assert!((a * b - Series::one()).valuation().is_none());
    }

    #[test]
    fn laurent_inverse() {
        let a = s(2, &[2, 1], EXACT);
        let b = a.inv(4).unwrap();
        assert_eq!(b.valuation(), Some(-2));
        assert_eq!(b.coeff(-2), rat(1, 2));
        assert_eq!(b.coeff(-1), rat(-1, 4));
        assert_eq!(b.precision(), 2);
    }

    #[test]
    fn precision_of_products() {
        let a = s(1, &[1], 5);
        let b = s(0, &[3, 1], 4);
        let p = a * b;
        assert_eq!(p.precision(), 5);
        assert_eq!(p.valuation(), Some(1));
    }

    #[test]
    fn square_root_recurrence() {
        // √(1 + u) = 1 + u/2 − u²/8 + u³/16 − …
        let a = Series::exact(&Poly::new(vec![int(1), int(1)]));
        let r = a.sqrt_with(&int(1), 5).unwrap();
        assert_eq!(r.coeff(1), rat(1, 2));
        assert_eq!(r.coeff(2), rat(-1, 8));
        assert_eq!(r.coeff(3), rat(1, 16));
        let sq = r.clone() * r;
        assert_eq!(sq.with_precision(5), a.with_precision(5));
    }

    #[test]
    fn adding_zero_keeps_the_other_term() {
        let a = s(-1, &[2, 3], 4);
        assert_eq!((a.clone() + Series::zero()).coeff(-1), int(2));
        assert_eq!((Series::zero() - a.clone()).coeff(0), int(-3));
        assert_eq!((Series::<Rational>::zero() + Series::zero()).valuation(), None);
    }

    #[test]
    fn truncated_zero_reports_order_error() {
        let z = s(0, &[0, 0], 3);
        assert!(matches!(z.order(3), Err(Error::TruncationExceeded(3))));
    }
}

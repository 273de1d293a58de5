//! Dense univariate polynomials with ascending coefficients.
//!
//! Coefficients need not commute; the variable is central, and products
//! keep the left-to-right order of coefficient factors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{ComplexField, DualQuaternion, Field, Gaussian, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct Poly<R> {
    c: Vec<R>,
}

/// Polynomial with dual quaternion coefficients.
pub type MotionPolynomial<F> = Poly<DualQuaternion<F>>;

impl<R: Ring> Poly<R> {
    pub fn new(mut c: Vec<R>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Self { c }
    }

    pub fn constant(a: R) -> Self {
        Self::new(vec![a])
    }

    /// The variable `t`.
    pub fn x() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    pub fn monomial(a: R, k: usize) -> Self {
        let mut c = vec![R::zero(); k];
        c.push(a);
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> R {
        self.c.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn lead(&self) -> R {
        self.c.last().cloned().unwrap_or_else(R::zero)
    }

    /// Horner evaluation at a value commuting with the coefficients.
    pub fn eval(&self, x: &R) -> R {
        self.c.iter().rev().fold(R::zero(), |acc, a| acc * x.clone() + a.clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.c.iter().map(f).collect())
    }

    /// `a·p`, multiplying coefficients from the left.
    pub fn scale_left(&self, a: &R) -> Self {
        Self::new(self.c.iter().map(|x| a.clone() * x.clone()).collect())
    }

    /// `p·a`, multiplying coefficients from the right.
    pub fn scale_right(&self, a: &R) -> Self {
        Self::new(self.c.iter().map(|x| x.clone() * a.clone()).collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![R::zero(); k];
        c.extend(self.c.iter().cloned());
        Self { c }
    }

    /// Coefficient vector reversed against degree `n ≥ deg`: `tⁿ p(1/t)`.
    pub fn reversed(&self, n: usize) -> Self {
        let mut c = vec![R::zero(); n + 1];
        for (k, a) in self.c.iter().enumerate() {
            c[n - k] = a.clone();
        }
        Self::new(c)
    }

    /// `p(q(t))`.
    pub fn compose(&self, q: &Self) -> Self {
        self.c.iter().rev().fold(Self::new(vec![]), |acc, a| acc * q.clone() + Self::constant(a.clone()))
    }
}

impl<F: Field> Poly<F> {
    pub fn derivative(&self) -> Self {
        Self::new(self.c.iter().enumerate().skip(1).map(|(k, a)| F::from_int(k as i64) * a.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().inv();
        self.scale_left(&l)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let li = d.lead().inv();
        let mut r = self.c.clone();
        let n = self.c.len();
        if n <= dd {
            return (Self::new(vec![]), self.clone());
        }
        let mut q = vec![F::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let f = r[k + dd].clone() * li.clone();
            if f.is_zero() {
                continue;
            }
            for (m, dc) in d.c.iter().enumerate() {
                r[k + m] = r[k + m].clone() - f.clone() * dc.clone();
            }
            q[k] = f;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Exact quotient, `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }

    /// `p(t + a)`.
    pub fn taylor_shift(&self, a: &F) -> Self {
        self.compose(&Self::new(vec![a.clone(), F::one()]))
    }
}

impl Poly<Gaussian> {
    /// Evaluates in a larger field, taking embedding context from `ctx`.
    pub fn eval_in<F: ComplexField>(&self, ctx: &F, x: &F) -> F {
        self.c.iter().rev().fold(ctx.embed(&Gaussian::zero()), |acc, a| acc * x.clone() + ctx.embed(a))
    }

    pub fn embed_in<F: ComplexField>(&self, ctx: &F) -> Poly<F> {
        Poly::new(self.c.iter().map(|a| ctx.embed(a)).collect())
    }

    pub fn conj(&self) -> Self {
        self.map(|a| a.conj())
    }

    pub fn is_real(&self) -> bool {
        self.c.iter().all(|a| a.is_real())
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { c: self.c.into_iter().map(|x| -x).collect() }
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::new(vec![]);
        }
        let mut c = vec![R::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(c)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Self::new(vec![])
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

/// Emits `t^2-3t+1` style text in the curve grammar.
impl fmt::Display for Poly<Gaussian> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let s = a.to_string();
            let (neg, body) = if !a.is_compound() && s.starts_with('-') { (true, s[1..].to_string()) } else { (false, s) };
            let body = if a.is_compound() && k > 0 { format!("({body})") } else { body };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if k > 0 && body == "1" {
                out.push_str(&var);
            } else if k > 0 && body.ends_with('i') && !body.starts_with('(') {
                out.push_str(&format!("{body}*{var}"));
            } else {
                out.push_str(&body);
                out.push_str(&var);
            }
        }
        f.write_str(&out)
    }
}

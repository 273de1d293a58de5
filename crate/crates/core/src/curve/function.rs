//! Functions on a rational curve or a double cover `w² = q(t)`, written
//! `(A(t) + B(t)·w) / C(t)` with polynomial coefficients over ℚ(i).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::algebra::{Field, Gaussian, Ring, Scalar};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::poly::Poly;

pub type GPoly = Poly<Gaussian>;

#[derive(Clone, Debug)]
pub struct CurveFn {
    a: GPoly,
    b: GPoly,
    c: GPoly,
    q: Option<Arc<GPoly>>,
}

fn merge(x: &Option<Arc<GPoly>>, y: &Option<Arc<GPoly>>) -> Option<Arc<GPoly>> {
    match (x, y) {
        (None, None) => None,
        (Some(q), None) | (None, Some(q)) => Some(q.clone()),
        (Some(q1), Some(q2)) => {
            assert!(Arc::ptr_eq(q1, q2) || q1 == q2, "functions on different curves");
            Some(q1.clone())
        }
    }
}

impl CurveFn {
    fn build(a: GPoly, b: GPoly, c: GPoly, q: Option<Arc<GPoly>>) -> Self {
        assert!(!c.is_zero(), "zero denominator");
        let g = a.gcd(&b).gcd(&c);
        let (a, b, c) = if g.is_constant() {
            (a, b, c)
        } else {
            (a.exact_div(&g).unwrap(), b.exact_div(&g).unwrap(), c.exact_div(&g).unwrap())
        };
        let l = c.lead().inv();
        Self { a: a.scale_left(&l), b: b.scale_left(&l), c: c.scale_left(&l), q }
    }

    pub fn from_poly(p: GPoly, q: Option<Arc<GPoly>>) -> Self {
        Self::build(p, Poly::zero(), Poly::one(), q)
    }

    pub fn constant(g: Gaussian, q: Option<Arc<GPoly>>) -> Self {
        Self::from_poly(Poly::constant(g), q)
    }

    pub fn t(q: Option<Arc<GPoly>>) -> Self {
        Self::from_poly(Poly::x(), q)
    }

    pub fn w(q: Arc<GPoly>) -> Self {
        Self::build(Poly::zero(), Poly::one(), Poly::one(), Some(q))
    }

    pub fn parts(&self) -> (&GPoly, &GPoly, &GPoly) {
        (&self.a, &self.b, &self.c)
    }

    pub fn radicand(&self) -> Option<&GPoly> {
        self.q.as_deref()
    }

    pub fn is_constant(&self) -> bool {
        self.b.is_zero() && self.c.is_constant() && self.a.is_constant()
    }

    /// Numerator and denominator of `self − target`, both polynomial after
    /// eliminating `w`: the zero set on the curve projects into the roots
    /// of `(target·C − A)² − B²·q` (or `target·C − A` without `w`).
    pub fn level_polynomial(&self, target: &Gaussian) -> GPoly {
        let lhs = self.c.scale_left(target) - self.a.clone();
        match self.q.as_deref() {
            None => lhs,
            Some(q) => lhs.clone() * lhs - self.b.clone() * self.b.clone() * q.clone(),
        }
    }

    /// `(A − B·w)/C`, the image under `w ↦ −w`.
    pub fn flip_branch(&self) -> Self {
        Self { a: self.a.clone(), b: -self.b.clone(), c: self.c.clone(), q: self.q.clone() }
    }

    pub fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let q = self.q.as_deref().cloned().unwrap_or_else(Poly::zero);
        let norm = self.a.clone() * self.a.clone() - self.b.clone() * self.b.clone() * q;
        if norm.is_zero() {
            return None;
        }
        Some(Self::build(
            self.a.clone() * self.c.clone(),
            -(self.b.clone() * self.c.clone()),
            norm,
            self.q.clone(),
        ))
    }

    /// Substitutes `t = 1/u` and `w = w̃/u^g` where `w̃² = u^{2g} q(1/u)`.
    pub fn reciprocal(&self, q_rev: Option<Arc<GPoly>>, g: usize) -> Self {
        let da = self.a.degree().unwrap_or(0);
        let db = self.b.degree().map(|d| d + g).unwrap_or(0);
        let dc = self.c.degree().unwrap_or(0);
        let n = da.max(db).max(dc);
        let a = self.a.reversed(self.a.degree().unwrap_or(0)).shift_up(n - da.min(n));
        let a = if self.a.is_zero() { Poly::zero() } else { a };
        let b = if self.b.is_zero() {
            Poly::zero()
        } else {
            let d = self.b.degree().unwrap();
            self.b.reversed(d).shift_up(n - d - g)
        };
        let c = self.c.reversed(dc).shift_up(n - dc);
        Self::build(a, b, c, q_rev)
    }

    /// Evaluates an expression in `t`, `w`, `i` over the curve.
    pub fn from_expr(e: &Expr, q: Option<Arc<GPoly>>) -> Result<Self> {
        let rec = |x: &Expr| Self::from_expr(x, q.clone());
        Ok(match e {
            Expr::Int(n) => Self::constant(Gaussian::real(n.clone().into()), q.clone()),
            Expr::I => Self::constant(Gaussian::i(), q.clone()),
            Expr::T => Self::t(q.clone()),
            Expr::W => match &q {
                Some(qq) => Self::w(qq.clone()),
                None => return Err(Error::Input("w used on a rational curve".into())),
            },
            Expr::Neg(a) => -rec(a)?,
            Expr::Add(a, b) => rec(a)? + rec(b)?,
            Expr::Sub(a, b) => rec(a)? - rec(b)?,
            Expr::Mul(a, b) => rec(a)? * rec(b)?,
            Expr::Div(a, b) => {
                let d = rec(b)?;
                rec(a)? * d.try_inv().ok_or_else(|| Error::Input("division by zero".into()))?
            }
            Expr::Pow(a, k) => rec(a)?.pow(*k),
            Expr::Sqrt(a) => {
                if a.uses_t() || a.uses_w() {
                    return Err(Error::Input("sqrt applies to constants only; use w for the radicand".into()));
                }
                let v = Scalar::from_expr(a)?.sqrt()?;
                match v.to_gaussian() {
                    Some(g) => Self::constant(g, q.clone()),
                    None => {
                        return Err(Error::UnsupportedExtension(format!(
                            "curve coefficient {v} is not in Q(i)"
                        )))
                    }
                }
            }
        })
    }
}

impl PartialEq for CurveFn {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.b == o.b && self.c == o.c
    }
}

impl Add for CurveFn {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let q = merge(&self.q, &o.q);
        if self.c == o.c {
            return Self::build(self.a + o.a, self.b + o.b, self.c, q);
        }
        Self::build(
            self.a * o.c.clone() + o.a * self.c.clone(),
            self.b * o.c.clone() + o.b * self.c.clone(),
            self.c * o.c,
            q,
        )
    }
}

impl Sub for CurveFn {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for CurveFn {
    type Output = Self;
    fn neg(self) -> Self {
        Self { a: -self.a, b: -self.b, c: self.c, q: self.q }
    }
}

impl Mul for CurveFn {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let q = merge(&self.q, &o.q);
        let qq = q.as_deref().cloned().unwrap_or_else(Poly::zero);
        let a = self.a.clone() * o.a.clone() + self.b.clone() * o.b.clone() * qq;
        let b = self.a * o.b + self.b * o.a;
        Self::build(a, b, self.c * o.c, q)
    }
}

impl Ring for CurveFn {
    fn zero() -> Self {
        Self::from_poly(Poly::zero(), None)
    }
    fn one() -> Self {
        Self::from_poly(Poly::one(), None)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

fn wrap(p: &GPoly) -> String {
    let s = p.to_string();
    if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 || s.starts_with('-') {
        format!("({s})")
    } else {
        s
    }
}

/// Canonical emission in the curve grammar.
impl fmt::Display for CurveFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => self.a.to_string(),
            (true, false) => format!("{}*w", wrap(&self.b)),
            (false, false) => format!("{}+{}*w", self.a, wrap(&self.b)),
        };
        if self.c == Poly::one() {
            f.write_str(&num)
        } else {
            write!(f, "({num})/{}", wrap(&self.c))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr;

    fn q2() -> Arc<GPoly> {
        Arc::new(Poly::new(vec![
            Gaussian::from_ints(25, 0),
            Gaussian::zero(),
            Gaussian::from_ints(-14, 0),
            Gaussian::zero(),
            Gaussian::from_ints(25, 0),
        ]))
    }

    fn parse(s: &str, q: Option<Arc<GPoly>>) -> CurveFn {
        CurveFn::from_expr(&expr::parse(s).unwrap(), q).unwrap()
    }

    #[test]
    fn w_squares_to_radicand() {
        let q = q2();
        let w = CurveFn::w(q.clone());
        assert_eq!(w.clone() * w, CurveFn::from_poly((*q).clone(), Some(q)));
    }

    #[test]
    fn inverse_through_conjugate() {
        let q = q2();
        let f = parse("(5-5t^2+w)/(6t)", Some(q.clone()));
        let one = f.clone() * f.try_inv().unwrap();
        assert_eq!(one, CurveFn::one());
    }

    #[test]
    fn emission_round_trips() {
        let q = q2();
        for s in ["(5-5t^2+w)/(6t)", "(-5t^2-5+w)/(8t)", "(25t^2-7-5w)/24", "t", "(t^2-3t+1)/(2t-3)", "-(t^2+3t+1)/(2t+3)"] {
            let f = parse(s, Some(q.clone()));
            let g = parse(&f.to_string(), Some(q.clone()));
            assert_eq!(f, g, "{s} -> {f}");
        }
    }

    #[test]
    fn reciprocal_chart_of_polynomial() {
        // t ↦ 1/u
        let f = CurveFn::t(None);
        let r = f.reciprocal(None, 0);
        assert_eq!(r, parse("1/t", None));
    }
}

//! The user-facing scalar: one value from the tower
//! ℚ ⊂ ℚ(i) ⊂ ℚ(i)(√d) ⊂ BigComplex.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::bigcomplex::{BigComplex, DEFAULT_PRECISION};
use super::field::{Field, Ring};
use super::quadext::QuadExt;
use super::rational::Rational;
use super::Gaussian;
use crate::error::{Error, Result};
use crate::expr::{self, Expr};

/// A tower element, always stored at the lowest level that holds it.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(Rational),
    Gaussian(Gaussian),
    Quad(QuadExt),
    Complex(BigComplex),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Level {
    Rational,
    Gaussian,
    Quad,
    Complex,
}

impl Scalar {
    pub fn from_gaussian(g: Gaussian) -> Self {
        if g.is_real() {
            Scalar::Rational(g.re)
        } else {
            Scalar::Gaussian(g)
        }
    }

    pub fn from_quad(q: QuadExt) -> Self {
        match q.demote() {
            Some(g) => Self::from_gaussian(g),
            None => Scalar::Quad(q),
        }
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rational(Rational::from_integer(n.into()))
    }

    pub fn i() -> Self {
        Scalar::Gaussian(Gaussian::i())
    }

    pub fn level(&self) -> Level {
        match self {
            Scalar::Rational(_) => Level::Rational,
            Scalar::Gaussian(_) => Level::Gaussian,
            Scalar::Quad(_) => Level::Quad,
            Scalar::Complex(_) => Level::Complex,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Scalar::Complex(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn to_gaussian(&self) -> Option<Gaussian> {
        match self {
            Scalar::Rational(r) => Some(Gaussian::real(r.clone())),
            Scalar::Gaussian(g) => Some(g.clone()),
            _ => None,
        }
    }

    fn to_quad(&self) -> Option<QuadExt> {
        match self {
            Scalar::Quad(q) => Some(q.clone()),
            s => s.to_gaussian().map(QuadExt::from_gaussian),
        }
    }

    pub fn to_big_complex(&self, prec: u32) -> BigComplex {
        match self {
            Scalar::Rational(r) => BigComplex::from_gaussian(&Gaussian::real(r.clone()), prec),
            Scalar::Gaussian(g) => BigComplex::from_gaussian(g, prec),
            Scalar::Quad(q) => {
                let x = BigComplex::from_gaussian(q.x(), prec);
                match q.radicand() {
                    None => x,
                    Some(d) => {
                        let y = BigComplex::from_gaussian(q.y(), prec);
                        x + y * BigComplex::from_gaussian(d, prec).sqrt()
                    }
                }
            }
            Scalar::Complex(c) => c.clone(),
        }
    }

    pub fn approx(&self) -> Complex64 {
        match self {
            Scalar::Rational(r) => Gaussian::real(r.clone()).to_complex64(),
            Scalar::Gaussian(g) => g.to_complex64(),
            Scalar::Quad(q) => q.to_complex64(),
            Scalar::Complex(c) => c.to_complex64(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => Ring::is_zero(r),
            Scalar::Gaussian(g) => Ring::is_zero(g),
            Scalar::Quad(q) => q.is_zero(),
            Scalar::Complex(c) => c.is_zero(),
        }
    }

    /// Complex conjugate, when it stays representable at the same level.
    pub fn conj(&self) -> Option<Scalar> {
        use super::field::ComplexField;
        match self {
            Scalar::Rational(_) => Some(self.clone()),
            Scalar::Gaussian(g) => Some(Scalar::Gaussian(g.conj())),
            Scalar::Quad(q) => ComplexField::conj(q).map(Scalar::from_quad),
            Scalar::Complex(c) => Some(Scalar::Complex(c.conj())),
        }
    }

    /// Brings two scalars to a common level.
    fn unify(a: &Scalar, b: &Scalar) -> Result<(Scalar, Scalar)> {
        let lvl = a.level().max(b.level());
        let lift = |s: &Scalar, other: &Scalar| -> Result<Scalar> {
            Ok(match lvl {
                Level::Rational => s.clone(),
                Level::Gaussian => Scalar::Gaussian(s.to_gaussian().unwrap()),
                Level::Quad => {
                    let q = s.to_quad().unwrap();
                    match (q.radicand(), other) {
                        (Some(d), Scalar::Quad(o)) => match o.radicand() {
                            Some(d2) if d != d2 => Scalar::Quad(q.rebase(d2)?),
                            _ => Scalar::Quad(q),
                        },
                        _ => Scalar::Quad(q),
                    }
                }
                Level::Complex => {
                    let prec = match (a, b) {
                        (Scalar::Complex(x), Scalar::Complex(y)) => x.precision().max(y.precision()),
                        (Scalar::Complex(x), _) | (_, Scalar::Complex(x)) => x.precision(),
                        _ => DEFAULT_PRECISION,
                    };
                    Scalar::Complex(s.to_big_complex(prec))
                }
            })
        };
        // Rebase the side with the radicand that is not kept.
        let a2 = lift(a, b)?;
        let b2 = match (&a2, b) {
            (Scalar::Quad(_), Scalar::Quad(_)) => b.clone(),
            _ => lift(b, &a2)?,
        };
        Ok((a2, b2))
    }

    fn binop(
        &self,
        o: &Scalar,
        fr: fn(Rational, Rational) -> Rational,
        fg: fn(Gaussian, Gaussian) -> Gaussian,
        fq: fn(&QuadExt, &QuadExt) -> Result<QuadExt>,
        fc: fn(BigComplex, BigComplex) -> BigComplex,
    ) -> Result<Scalar> {
        let (a, b) = Self::unify(self, o)?;
        Ok(match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(fr(x, y)),
            (Scalar::Gaussian(x), Scalar::Gaussian(y)) => Scalar::from_gaussian(fg(x, y)),
            (Scalar::Quad(x), Scalar::Quad(y)) => Scalar::from_quad(fq(&x, &y)?),
            (Scalar::Complex(x), Scalar::Complex(y)) => Scalar::Complex(fc(x, y)),
            _ => unreachable!("unify returns equal levels"),
        })
    }

    pub fn checked_add(&self, o: &Scalar) -> Result<Scalar> {
        self.binop(o, |a, b| a + b, |a, b| a + b, |a, b| a.checked_add(b), |a, b| a + b)
    }

    pub fn checked_sub(&self, o: &Scalar) -> Result<Scalar> {
        self.checked_add(&-o.clone())
    }

    pub fn checked_mul(&self, o: &Scalar) -> Result<Scalar> {
        self.binop(o, |a, b| a * b, |a, b| a * b, |a, b| a.checked_mul(b), |a, b| a * b)
    }

    pub fn checked_inv(&self) -> Result<Scalar> {
        let z = || Error::Input("division by zero".into());
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.try_inv().ok_or_else(z)?),
            Scalar::Gaussian(g) => Scalar::from_gaussian(g.try_inv().ok_or_else(z)?),
            Scalar::Quad(q) => Scalar::from_quad(q.try_inv().ok_or_else(z)?),
            Scalar::Complex(c) => Scalar::Complex(c.try_inv().ok_or_else(z)?),
        })
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar> {
        self.checked_mul(&o.checked_inv()?)
    }

    pub fn pow(&self, e: u32) -> Result<Scalar> {
        let mut acc = Scalar::int(1);
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Principal square root, climbing the tower as far as needed.
    pub fn sqrt(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(_) | Scalar::Gaussian(_) => {
                let g = self.to_gaussian().unwrap();
                match g.sqrt() {
                    Some(r) => Ok(Scalar::from_gaussian(r)),
                    None => Ok(Scalar::Quad(QuadExt::sqrt_of(g)?)),
                }
            }
            Scalar::Quad(q) => match q.sqrt() {
                Some(r) => {
                    // Keep the principal branch.
                    let z = r.to_complex64();
                    let r = if z.re < 0.0 || (z.re == 0.0 && z.im < 0.0) { -r } else { r };
                    Ok(Scalar::from_quad(r))
                }
                None => Ok(Scalar::Complex(self.to_big_complex(DEFAULT_PRECISION).sqrt())),
            },
            Scalar::Complex(c) => Ok(Scalar::Complex(c.sqrt())),
        }
    }

    /// Exact equality across levels; BigComplex compares within its tolerance.
    pub fn same_value(&self, o: &Scalar) -> bool {
        match Self::unify(self, o) {
            Ok((a, b)) => match (a, b) {
                (Scalar::Rational(x), Scalar::Rational(y)) => x == y,
                (Scalar::Gaussian(x), Scalar::Gaussian(y)) => x == y,
                (Scalar::Quad(x), Scalar::Quad(y)) => x == y,
                (Scalar::Complex(x), Scalar::Complex(y)) => x == y,
                _ => false,
            },
            Err(_) => false,
        }
    }

    /// Deterministic total order: exact values by (re, im); other values by
    /// their complex approximation, then by emitted text.
    pub fn canonical_cmp(&self, o: &Scalar) -> Ordering {
        if let (Some(a), Some(b)) = (self.to_gaussian(), o.to_gaussian()) {
            return a.lex_cmp(&b);
        }
        let (a, b) = (self.approx(), o.approx());
        a.re.total_cmp(&b.re)
            .then_with(|| a.im.total_cmp(&b.im))
            .then_with(|| self.level().cmp(&o.level()))
            .then_with(|| self.to_string().cmp(&o.to_string()))
    }

    /// Parses the literal grammar, e.g. `3/7`, `3/7+2/5i`, `1/2+1/3*sqrt(2+i)`.
    pub fn parse(src: &str) -> Result<Scalar> {
        let e = expr::parse(src)?;
        Self::from_expr(&e).map_err(|err| match err {
            Error::Parse { .. } => err,
            Error::UnsupportedExtension(m) => Error::parse(1, 1, m),
            other => Error::parse(1, 1, other.to_string()),
        })
    }

    /// Evaluates a constant expression tree.
    pub(crate) fn from_expr(e: &Expr) -> Result<Scalar> {
        Ok(match e {
            Expr::Int(n) => Scalar::Rational(Rational::from_integer(n.clone())),
            Expr::I => Scalar::i(),
            Expr::T | Expr::W => {
                return Err(Error::parse(1, 1, "a scalar literal cannot contain t or w"));
            }
            Expr::Neg(a) => -Self::from_expr(a)?,
            Expr::Add(a, b) => Self::from_expr(a)?.checked_add(&Self::from_expr(b)?)?,
            Expr::Sub(a, b) => Self::from_expr(a)?.checked_sub(&Self::from_expr(b)?)?,
            Expr::Mul(a, b) => Self::from_expr(a)?.checked_mul(&Self::from_expr(b)?)?,
            Expr::Div(a, b) => Self::from_expr(a)?.checked_div(&Self::from_expr(b)?)?,
            Expr::Pow(a, k) => Self::from_expr(a)?.pow(*k)?,
            Expr::Sqrt(a) => Self::from_expr(a)?.sqrt()?,
        })
    }
}

impl PartialEq for Scalar {
    fn eq(&self, o: &Scalar) -> bool {
        self.same_value(o)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => f.write_str(&super::rational::format_rational(r)),
            Scalar::Gaussian(g) => g.fmt(f),
            Scalar::Quad(q) => q.fmt(f),
            Scalar::Complex(c) => c.fmt(f),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Gaussian(g) => Scalar::Gaussian(-g),
            Scalar::Quad(q) => Scalar::Quad(-q),
            Scalar::Complex(c) => Scalar::Complex(-c),
        }
    }
}

// The infallible operators panic on incompatible radicands; use the
// `checked_*` forms when mixing values from different extensions.
impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        self.checked_add(&o).expect("incompatible scalar levels")
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        self.checked_sub(&o).expect("incompatible scalar levels")
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        self.checked_mul(&o).expect("incompatible scalar levels")
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::int(0)
    }
    fn one() -> Self {
        Scalar::int(1)
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl Field for Scalar {
    fn try_inv(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
    fn from_rational(r: &Rational) -> Self {
        Scalar::Rational(r.clone())
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn literal_forms() {
        assert_eq!(Scalar::parse("3/7").unwrap(), Scalar::Rational(rat(3, 7)));
        assert_eq!(
            Scalar::parse("3/7+2/5i").unwrap(),
            Scalar::Gaussian(Gaussian::new(rat(3, 7), rat(2, 5)))
        );
        // √(−48+64i) = 4+8i, so the literal collapses to a Gaussian rational.
        assert_eq!(
            Scalar::parse("1/2+1/3*sqrt(-48+64i)").unwrap(),
            Scalar::Gaussian(Gaussian::new(rat(11, 6), rat(8, 3)))
        );
    }

    #[test]
    fn emission_round_trips() {
        for s in ["3/7", "3/7+2/5i", "-i", "0", "1/2+1/3*sqrt(2+i)", "-sqrt(5)", "1+(1+2i)*sqrt(5)", "sqrt(-3)"] {
            let v = Scalar::parse(s).unwrap();
            assert_eq!(v.to_string(), s, "round trip of {s}");
        }
    }

    #[test]
    fn promotion_and_demotion() {
        let r = Scalar::parse("sqrt(2)").unwrap();
        let sq = r.checked_mul(&r).unwrap();
        assert_eq!(sq.level(), Level::Rational);
        assert_eq!(sq, Scalar::int(2));
        let g = Scalar::parse("1+i").unwrap().checked_add(&Scalar::parse("-i").unwrap()).unwrap();
        assert_eq!(g.level(), Level::Rational);
    }

    #[test]
    fn incompatible_extensions_error() {
        let a = Scalar::parse("sqrt(2)").unwrap();
        let b = Scalar::parse("sqrt(3)").unwrap();
        assert!(matches!(a.checked_mul(&b), Err(Error::UnsupportedExtension(_))));
        assert!(Scalar::parse("sqrt(2)*sqrt(3)").is_err());
        // ... but square ratios rebase.
        let c = Scalar::parse("sqrt(8)").unwrap();
        assert_eq!(a.checked_mul(&c).unwrap(), Scalar::int(4));
    }

    #[test]
    fn nested_radicals_fall_back_to_big_complex() {
        let v = Scalar::parse("sqrt(1+sqrt(2))").unwrap();
        assert_eq!(v.level(), Level::Complex);
        let z = v.approx();
        assert!((z.re - (1.0 + 2f64.sqrt()).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn parse_errors_have_positions() {
        assert!(matches!(Scalar::parse("3/"), Err(Error::Parse { line: 1, column: 3, .. })));
        assert!(matches!(Scalar::parse("1/0"), Err(Error::Parse { .. })));
    }
}

//! Configuration curves: rational parametrizations and double covers
//! `w² = q(t)`, with branch-tagged points and local series expansion.

mod function;
pub(crate) mod io;

use std::sync::Arc;

use num_complex::Complex64;

use crate::algebra::{BigComplex, ComplexField, Gaussian, Level, QuadExt, Scalar};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::roots::{find_roots, Root};
use crate::series::Series;

pub use function::{CurveFn, GPoly};
pub use io::CurveFile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Chart {
    /// Local parameter `u = t − t0`.
    Standard,
    /// Local parameter around `u0` in `u = 1/t`; `u0 = 0` is `t = ∞`.
    Reciprocal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    Rational,
    DoubleCover,
}

/// A point of the curve, with the branch `w0` (`w0² = q(t0)`) on double covers.
#[derive(Clone, Debug)]
pub struct CurvePoint {
    pub chart: Chart,
    pub param: Scalar,
    pub branch: Option<Scalar>,
    /// Isolation radius for approximate parameters.
    pub radius: Option<f64>,
}

/// Value of a coordinate on `ℙ¹`.
#[derive(Clone, Debug, PartialEq)]
pub enum CoordValue {
    Finite(Scalar),
    Infinite,
}

impl std::fmt::Display for CoordValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoordValue::Finite(s) => s.fmt(f),
            CoordValue::Infinite => f.write_str("inf"),
        }
    }
}

impl CurvePoint {
    pub fn standard(param: Scalar, branch: Option<Scalar>) -> Self {
        Self { chart: Chart::Standard, param, branch, radius: None }
    }

    pub fn at_infinity(branch: Option<Scalar>) -> Self {
        Self { chart: Chart::Reciprocal, param: Scalar::int(0), branch, radius: None }
    }

    pub fn is_exact(&self) -> bool {
        self.param.is_exact() && self.branch.as_ref().is_none_or(|b| b.is_exact())
    }

    fn tolerance(&self) -> f64 {
        self.radius.unwrap_or(0.0)
    }

    /// Identity of points: exact comparison for exact data, overlapping
    /// isolation disks otherwise.
    pub fn same_point(&self, o: &Self) -> Result<bool> {
        if self.chart != o.chart {
            return Ok(false);
        }
        if self.is_exact() && o.is_exact() {
            let b = match (&self.branch, &o.branch) {
                (None, None) => true,
                (Some(x), Some(y)) => x == y,
                _ => false,
            };
            return Ok(b && self.param == o.param);
        }
        let gap_t = (self.param.approx() - o.param.approx()).norm();
        let gap_w = match (&self.branch, &o.branch) {
            (Some(x), Some(y)) => (x.approx() - y.approx()).norm(),
            _ => 0.0,
        };
        let reach = self.tolerance() + o.tolerance();
        let separated = gap_t > reach.max(1e-30) * 4.0 + 1e-40;
        if separated || gap_w > 1e-12 * (1.0 + self.branch.as_ref().map_or(0.0, |b| b.approx().norm())) {
            return Ok(false);
        }
        if reach > 1e-20 {
            return Err(Error::UnsupportedConfiguration(
                "isolation disks of two approximate points overlap; raise --precision".into(),
            ));
        }
        Ok(true)
    }

    /// Complex-conjugate point (meaningful on curves with real data).
    pub fn approx_conj(&self) -> (Complex64, Option<Complex64>) {
        (self.param.approx().conj(), self.branch.as_ref().map(|b| b.approx().conj()))
    }

    pub fn approx(&self) -> (Complex64, Option<Complex64>) {
        (self.param.approx(), self.branch.as_ref().map(|b| b.approx()))
    }
}

impl std::fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.chart {
            Chart::Standard => write!(f, "t = {}", self.param)?,
            Chart::Reciprocal => write!(f, "1/t = {}", self.param)?,
        }
        if let Some(b) = &self.branch {
            write!(f, ", w = {b}")?;
        }
        Ok(())
    }
}

/// Coordinates and radicand in one chart.
#[derive(Clone, Debug)]
pub struct ChartData {
    pub radicand: Option<Arc<GPoly>>,
    pub coords: Vec<CurveFn>,
}

#[derive(Clone, Debug)]
pub struct ConfigCurve {
    pub name: Option<String>,
    sources: Vec<String>,
    standard: ChartData,
    /// `None` when `∞` is a branch point (odd-degree radicand).
    reciprocal: Option<ChartData>,
}

/// Series expansions around one point, over the field `F` of that point.
///
/// At a ramification point `(t0, 0)` of a double cover the local parameter
/// is `s` with `t = t0 + r0·s²`, where `q = (t − t0)·r` and `r0 = r(t0)`.
pub struct Local<'a, F> {
    pub t0: F,
    pub w: Option<Series<F>>,
    pub cap: usize,
    ramified: Option<F>,
    chart: &'a ChartData,
}

impl<'a, F: ComplexField> Local<'a, F> {
    fn new(chart: &'a ChartData, t0: F, w0: Option<F>, cap: usize) -> Result<Self> {
        let mut local = Self { t0, w: None, cap, ramified: None, chart };
        match (&chart.radicand, w0) {
            (None, None) => {}
            (Some(q), Some(w0)) => {
                let shifted = q.embed_in(&local.t0).taylor_shift(&local.t0);
                if !shifted.coeff(0).is_zero() {
                    local.w = Some(Self::poly_at(q, &local.t0).sqrt_with(&w0, cap)?);
                } else {
                    if !w0.is_zero() {
                        return Err(Error::Inconsistency("nonzero branch value at a branch point".into()));
                    }
                    let r = Poly::new(shifted.coeffs()[1..].to_vec());
                    let r0 = r.coeff(0);
                    let r0_inv = r0.try_inv().ok_or_else(|| {
                        Error::UnsupportedConfiguration("multiple root of the radicand".into())
                    })?;
                    local.ramified = Some(r0.clone());
                    let unit = local.substitute(&r).map(|c| c.clone() * r0_inv.clone());
                    let root = unit.sqrt_with(&F::one(), cap)?;
                    local.w = Some(root.map(|c| c.clone() * r0.clone()).shift(1));
                }
            }
            (Some(_), None) => return Err(Error::Precondition("double-cover point needs a branch".into())),
            (None, Some(_)) => return Err(Error::Precondition("branch given on a rational curve".into())),
        }
        Ok(local)
    }

    fn poly_at(p: &GPoly, t0: &F) -> Series<F> {
        Series::exact(&p.embed_in(t0).taylor_shift(t0))
    }

    /// A polynomial in `u = t − t0` as a series in the local parameter.
    fn substitute(&self, p: &Poly<F>) -> Series<F> {
        match &self.ramified {
            None => Series::exact(p),
            Some(r0) => {
                let mut c = vec![F::zero(); 2 * p.coeffs().len()];
                let mut scale = F::one();
                for (k, a) in p.coeffs().iter().enumerate() {
                    c[2 * k] = a.clone() * scale.clone();
                    scale = scale * r0.clone();
                }
                Series::exact(&Poly::new(c))
            }
        }
    }

    fn local_poly(&self, p: &GPoly) -> Series<F> {
        self.substitute(&p.embed_in(&self.t0).taylor_shift(&self.t0))
    }

    /// Whether the local parameter is a square root of `t − t0`.
    pub fn is_ramified(&self) -> bool {
        self.ramified.is_some()
    }

    pub fn embed(&self, g: &Gaussian) -> F {
        self.t0.embed(g)
    }

    pub fn expand(&self, f: &CurveFn) -> Result<Series<F>> {
        let (a, b, c) = f.parts();
        let mut num = self.local_poly(a);
        if !b.is_zero() {
            let w = self.w.as_ref().expect("double-cover function has a branch");
            num = num + self.local_poly(b) * w.clone();
        }
        let den = self.local_poly(c);
        num.div(&den, self.cap)
    }

    pub fn coord(&self, k: usize) -> Result<Series<F>> {
        self.expand(&self.chart.coords[k])
    }

    pub fn n(&self) -> usize {
        self.chart.coords.len()
    }
}

/// A computation run at a curve point in whichever field holds the point.
pub trait AtPoint {
    type Out;
    fn run<F: ComplexField>(self, local: Local<'_, F>) -> Result<Self::Out>;
}

fn poly_scalar_eval(p: &GPoly, x: &Scalar) -> Result<Scalar> {
    p.coeffs().iter().rev().try_fold(Scalar::int(0), |acc, a| {
        acc.checked_mul(x)?.checked_add(&Scalar::from_gaussian(a.clone()))
    })
}

struct ValueOf(usize);

impl AtPoint for ValueOf {
    type Out = CoordValue;
    fn run<F: ComplexField>(self, local: Local<'_, F>) -> Result<CoordValue> {
        let s = local.coord(self.0)?;
        Ok(match s.value_at_zero() {
            Some(v) => CoordValue::Finite(v.to_scalar()),
            None => CoordValue::Infinite,
        })
    }
}

struct Hits(usize, Gaussian);

impl AtPoint for Hits {
    type Out = bool;
    fn run<F: ComplexField>(self, local: Local<'_, F>) -> Result<bool> {
        let target = Series::constant(local.embed(&self.1));
        let s = local.coord(self.0)? - target;
        Ok(s.valuation().is_none_or(|v| v > 0))
    }
}

impl ConfigCurve {
    /// Builds a curve from parsed coordinate functions.
    pub fn new(name: Option<String>, radicand: Option<GPoly>, coords: Vec<CurveFn>, sources: Vec<String>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Input("curve has no coordinates".into()));
        }
        if let Some(q) = &radicand {
            if q.is_constant() {
                return Err(Error::Input("radicand must be a nonconstant polynomial".into()));
            }
            if !q.is_squarefree() {
                return Err(Error::Input(format!("radicand {q} is not squarefree")));
            }
        }
        let q = radicand.map(Arc::new);
        let standard = ChartData { radicand: q.clone(), coords };
        let reciprocal = match &q {
            None => Some(ChartData { radicand: None, coords: standard.coords.iter().map(|f| f.reciprocal(None, 0)).collect() }),
            Some(q) => {
                let d = q.degree().unwrap();
                if d % 2 == 1 {
                    None
                } else {
                    let qr = Arc::new(q.reversed(d));
                    let coords = standard.coords.iter().map(|f| f.reciprocal(Some(qr.clone()), d / 2)).collect();
                    Some(ChartData { radicand: Some(qr), coords })
                }
            }
        };
        Ok(Self { name, sources, standard, reciprocal })
    }

    pub fn kind(&self) -> CurveKind {
        if self.standard.radicand.is_some() {
            CurveKind::DoubleCover
        } else {
            CurveKind::Rational
        }
    }

    pub fn n(&self) -> usize {
        self.standard.coords.len()
    }

    pub fn radicand(&self) -> Option<&GPoly> {
        self.standard.radicand.as_deref()
    }

    pub fn coords(&self) -> &[CurveFn] {
        &self.standard.coords
    }

    pub fn sources(&self) -> &[String] {
        &self.sources
    }

    pub fn chart(&self, c: Chart) -> Result<&ChartData> {
        match c {
            Chart::Standard => Ok(&self.standard),
            Chart::Reciprocal => self.reciprocal.as_ref().ok_or_else(|| {
                Error::UnsupportedConfiguration("t = ∞ is a branch point (odd-degree radicand)".into())
            }),
        }
    }

    /// True when all coefficients are real, so conjugate points are points.
    pub fn is_real(&self) -> bool {
        let real = |f: &CurveFn| {
            let (a, b, c) = f.parts();
            a.is_real() && b.is_real() && c.is_real()
        };
        self.standard.coords.iter().all(real) && self.radicand().is_none_or(|q| q.is_real())
    }

    /// Runs `v` at `p` in the smallest field holding the point.
    pub fn at_point<V: AtPoint>(&self, p: &CurvePoint, cap: usize, prec: u32, v: V) -> Result<V::Out> {
        let chart = self.chart(p.chart)?;
        let lvl = p.branch.as_ref().map_or(p.param.level(), |b| b.level().max(p.param.level()));
        match lvl {
            Level::Rational | Level::Gaussian => {
                let t0 = p.param.to_gaussian().unwrap();
                let w0 = p.branch.as_ref().map(|b| b.to_gaussian().unwrap());
                v.run(Local::new(chart, t0, w0, cap)?)
            }
            Level::Quad => {
                if let Some((t0, w0)) = common_quad(&p.param, p.branch.as_ref()) {
                    return v.run(Local::new(chart, t0, w0, cap)?);
                }
                self.at_point_complex(chart, p, cap, prec, v)
            }
            Level::Complex => self.at_point_complex(chart, p, cap, prec, v),
        }
    }

    fn at_point_complex<V: AtPoint>(&self, chart: &ChartData, p: &CurvePoint, cap: usize, prec: u32, v: V) -> Result<V::Out> {
        let prec = match (&p.param, &p.branch) {
            (Scalar::Complex(c), _) | (_, Some(Scalar::Complex(c))) => c.precision().max(prec),
            _ => prec,
        };
        let t0: BigComplex = p.param.to_big_complex(prec);
        let w0 = p.branch.as_ref().map(|b| b.to_big_complex(prec));
        v.run(Local::new(chart, t0, w0, cap)?)
    }

    pub fn eval_coord(&self, k: usize, p: &CurvePoint, cap: usize, prec: u32) -> Result<CoordValue> {
        self.check_index(k)?;
        self.at_point(p, cap, prec, ValueOf(k))
    }

    pub fn eval_all(&self, p: &CurvePoint, cap: usize, prec: u32) -> Result<Vec<CoordValue>> {
        (0..self.n()).map(|k| self.eval_coord(k, p, cap, prec)).collect()
    }

    /// Points of the standard chart over the parameter value `t0`.
    pub fn points_over(&self, t0: &Scalar) -> Result<Vec<CurvePoint>> {
        let bs = self.branches(&self.standard, t0)?;
        Ok(bs.into_iter().map(|b| CurvePoint::standard(t0.clone(), b)).collect())
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k >= self.n() {
            return Err(Error::Precondition(format!("coordinate index {} out of range 1..={}", k + 1, self.n())));
        }
        Ok(())
    }

    /// Both branches over a parameter value, or none on a rational curve.
    fn branches(&self, chart: &ChartData, t0: &Scalar) -> Result<Vec<Option<Scalar>>> {
        match &chart.radicand {
            None => Ok(vec![None]),
            Some(q) => {
                let qv = poly_scalar_eval(q, t0)?;
                if qv.is_zero() {
                    return Ok(vec![Some(Scalar::int(0))]);
                }
                let w0 = qv.sqrt()?;
                Ok(vec![Some(w0.clone()), Some(-w0)])
            }
        }
    }

    /// All points (both charts, all branches) where coordinate `k` equals `target`.
    pub fn find_points_where(&self, k: usize, target: &Gaussian, cap: usize, prec: u32) -> Result<Vec<CurvePoint>> {
        self.check_index(k)?;
        let f = &self.standard.coords[k];
        if f.is_constant() {
            return Err(Error::Precondition(format!("coordinate t{} is constant", k + 1)));
        }
        let level = f.level_polynomial(target);
        let mut out = Vec::new();
        if !level.is_zero() {
            for root in find_roots(&level, prec)? {
                let radius = match &root {
                    Root::Approx { radius, .. } => Some(*radius),
                    _ => None,
                };
                let t0 = root.to_scalar();
                for branch in self.branches(&self.standard, &t0)? {
                    let p = CurvePoint { chart: Chart::Standard, param: t0.clone(), branch, radius };
                    if self.at_point(&p, cap, prec, Hits(k, target.clone()))? {
                        out.push(p);
                    }
                }
            }
        }
        if let Some(rc) = &self.reciprocal {
            for branch in self.branches(rc, &Scalar::int(0))? {
                let p = CurvePoint::at_infinity(branch);
                if self.at_point(&p, cap, prec, Hits(k, target.clone()))? {
                    out.push(p);
                }
            }
        }
        Ok(out)
    }

    /// Expansion of an arbitrary function of the curve at a point.
    pub fn series_expand<V: AtPoint>(&self, p: &CurvePoint, cap: usize, prec: u32, v: V) -> Result<V::Out> {
        self.at_point(p, cap, prec, v)
    }

    /// The same point expressed in the other chart (finite, nonzero `t0` only).
    pub fn to_other_chart(&self, p: &CurvePoint) -> Result<CurvePoint> {
        if p.param.is_zero() {
            return Err(Error::Precondition("t0 = 0 has no reciprocal-chart image".into()));
        }
        let param = p.param.checked_inv()?;
        let g = self.radicand().map(|q| q.degree().unwrap() / 2).unwrap_or(0);
        // w̃ = u^g·w, and conversely w = t^g·w̃.
        let branch = match &p.branch {
            None => None,
            Some(w) => Some(w.checked_mul(&param.pow(g as u32)?)?),
        };
        let chart = match p.chart {
            Chart::Standard => Chart::Reciprocal,
            Chart::Reciprocal => Chart::Standard,
        };
        Ok(CurvePoint { chart, param, branch, radius: p.radius })
    }
}

/// Puts a parameter and branch into one quadratic extension, if possible.
fn common_quad(t: &Scalar, w: Option<&Scalar>) -> Option<(QuadExt, Option<QuadExt>)> {
    let as_quad = |s: &Scalar| -> Option<QuadExt> {
        match s {
            Scalar::Quad(q) => Some(q.clone()),
            s => s.to_gaussian().map(QuadExt::from_gaussian),
        }
    };
    let tq = as_quad(t)?;
    let wq = match w {
        None => None,
        Some(w) => Some(as_quad(w)?),
    };
    let d = tq.radicand().or(wq.as_ref().and_then(|x| x.radicand()))?.clone();
    let tq = tq.rebase(&d).ok()?;
    let wq = match wq {
        None => None,
        Some(x) => Some(x.rebase(&d).ok()?),
    };
    Some((tq, wq))
}

/// Evaluates a polynomial over ℚ(i) at a scalar.
pub fn eval_gpoly(p: &GPoly, x: &Scalar) -> Result<Scalar> {
    poly_scalar_eval(p, x)
}

impl Poly<Gaussian> {
    pub fn parse_curve_poly(src: &str) -> Result<GPoly> {
        let e = crate::expr::parse(src)?;
        if e.uses_w() {
            return Err(Error::parse(1, 1, "a radicand cannot contain w"));
        }
        let f = CurveFn::from_expr(&e, None)?;
        let (a, b, c) = f.parts();
        if !b.is_zero() || !c.is_constant() {
            return Err(Error::parse(1, 1, "expected a polynomial in t"));
        }
        Ok(a.clone())
    }
}

#[cfg(test)]
mod tests;

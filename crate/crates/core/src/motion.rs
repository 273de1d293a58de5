//! Products of rotation factors `t_k − h_k` along a linkage.

use crate::algebra::{DualQuaternion, Gaussian, JointQuaternion, Rational, Ring, Scalar};
use crate::curve::{ConfigCurve, CoordValue, CurveFn, CurvePoint};
use crate::error::{Error, Result};
use crate::linkage::Linkage;
use crate::poly::{MotionPolynomial, Poly};

pub fn poly_mul<F: Ring>(p: &MotionPolynomial<F>, q: &MotionPolynomial<F>) -> MotionPolynomial<F> {
    p.clone() * q.clone()
}

/// The monic linear motion polynomial `t − h`.
pub fn linear_factor(h: &DualQuaternion<Rational>) -> MotionPolynomial<Rational> {
    Poly::new(vec![-h.clone(), DualQuaternion::one()])
}

/// `t − h` with `t` in a ring `F` that contains ℚ through `embed`.
pub fn rotation<F: Ring>(t: F, h: &JointQuaternion, embed: impl Fn(&Rational) -> F) -> DualQuaternion<F> {
    DualQuaternion::scalar(t) - h.value().map(embed)
}

/// Ordered product `∏_{k=1}^{m} x_k = (∏_{k=1}^{m−1} x_k)·x_m`.
pub fn ordered_product<F: Ring>(factors: impl IntoIterator<Item = DualQuaternion<F>>) -> DualQuaternion<F> {
    factors.into_iter().fold(DualQuaternion::one(), |acc, x| acc * x)
}

fn check_run(l: &Linkage, i: i64, j: i64) {
    assert!(i <= j && j - i <= l.n() as i64, "invalid chain {i}..{j}");
}

/// `F_{i,j} = (t_{i+1} − h_{i+1})···(t_j − h_j)` with factors supplied by
/// `factor(k) = t_k − h_k`.
pub fn chain_f<F: Ring>(l: &Linkage, i: i64, j: i64, factor: impl Fn(i64) -> DualQuaternion<F>) -> DualQuaternion<F> {
    check_run(l, i, j);
    ordered_product((i + 1..=j).map(factor))
}

/// `G_{i,j} = (t_i + h_i)(t_{i−1} + h_{i−1})···(t_{j+1} + h_{j+1})`, the
/// conjugate route around the cycle.
pub fn chain_g<F: Ring>(l: &Linkage, i: i64, j: i64, factor: impl Fn(i64) -> DualQuaternion<F>) -> DualQuaternion<F> {
    check_run(l, i, j);
    let n = l.n() as i64;
    ordered_product((0..n + i - j).map(|k| factor(i - k).conj()))
}

/// Whether two dual quaternions agree up to a scalar factor.
pub fn proportional<F: Ring>(a: &DualQuaternion<F>, b: &DualQuaternion<F>) -> bool {
    (0..8).all(|x| (x + 1..8).all(|y| (a.c[x].clone() * b.c[y].clone() - a.c[y].clone() * b.c[x].clone()).is_zero()))
}

/// Rotation factors along a configuration curve.
pub struct CurveFactors<'a> {
    linkage: &'a Linkage,
    coords: Vec<CurveFn>,
}

impl<'a> CurveFactors<'a> {
    pub fn new(linkage: &'a Linkage, curve: &ConfigCurve) -> Result<Self> {
        if curve.n() != linkage.n() {
            return Err(Error::Input(format!("curve has {} coordinates, linkage has {} joints", curve.n(), linkage.n())));
        }
        Ok(Self { linkage, coords: curve.coords().to_vec() })
    }

    pub fn factor(&self, k: i64) -> DualQuaternion<CurveFn> {
        let t = self.coords[self.linkage.slot(k)].clone();
        let q = t.radicand().map(|q| std::sync::Arc::new(q.clone()));
        rotation(t, self.linkage.joint(k), |r| CurveFn::constant(Gaussian::real(r.clone()), q.clone()))
    }

    pub fn f(&self, i: i64, j: i64) -> DualQuaternion<CurveFn> {
        chain_f(self.linkage, i, j, |k| self.factor(k))
    }

    pub fn g(&self, i: i64, j: i64) -> DualQuaternion<CurveFn> {
        chain_g(self.linkage, i, j, |k| self.factor(k))
    }

    /// The full cycle product `(t_1 − h_1)···(t_n − h_n)`.
    pub fn cycle(&self) -> DualQuaternion<CurveFn> {
        self.f(0, self.linkage.n() as i64)
    }
}

/// `F_{i,j}` along the curve together with the flag `F_{i,j} ∝ G_{i,j}`.
pub fn chain_product(l: &Linkage, curve: &ConfigCurve, i: i64, j: i64) -> Result<(DualQuaternion<CurveFn>, bool)> {
    let fx = CurveFactors::new(l, curve)?;
    let f = fx.f(i, j);
    let g = fx.g(i, j);
    let agree = proportional(&f, &g);
    Ok((f, agree))
}

/// Polynomial form of a curve function vector whose coordinates are
/// polynomials in `t`.
pub fn as_motion_polynomial(x: &DualQuaternion<CurveFn>) -> Option<MotionPolynomial<Gaussian>> {
    let mut parts = Vec::with_capacity(8);
    for f in &x.c {
        let (a, b, c) = f.parts();
        if !b.is_zero() || *c != Poly::one() {
            return None;
        }
        parts.push(a.clone());
    }
    let deg = parts.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    let coeffs = (0..=deg).map(|d| DualQuaternion::new(std::array::from_fn(|k| parts[k].coeff(d)))).collect();
    Some(Poly::new(coeffs))
}

/// Values of `t_1, …, t_n` at a curve point; `None` stands for `t_k = ∞`.
pub fn point_coords(curve: &ConfigCurve, p: &CurvePoint, cap: usize, prec: u32) -> Result<Vec<Option<Scalar>>> {
    Ok(curve
        .eval_all(p, cap, prec)?
        .into_iter()
        .map(|v| match v {
            CoordValue::Finite(s) => Some(s),
            CoordValue::Infinite => None,
        })
        .collect())
}

/// `t_k − h_k` at a point, with the factor `1` for `t_k = ∞`.
pub fn point_factor(l: &Linkage, t: &[Option<Scalar>], k: i64) -> DualQuaternion<Scalar> {
    match &t[l.slot(k)] {
        None => DualQuaternion::one(),
        Some(v) => rotation(v.clone(), l.joint(k), |r| Scalar::Rational(r.clone())),
    }
}

#[derive(Clone, Debug)]
pub struct Violation {
    /// Basis index (0 = scalar part) of the offending coordinate.
    pub coordinate: usize,
    pub value: String,
}

#[derive(Clone, Debug)]
pub struct SampleCheck {
    pub point: CurvePoint,
    pub product: DualQuaternion<Scalar>,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug)]
pub struct ClosureReport {
    /// Product along the whole curve is a scalar function.
    pub exact: bool,
    /// Basis coordinates of the cycle product that do not vanish identically.
    pub offending: Vec<usize>,
    /// Scalar part of the cycle product along the curve.
    pub scalar_part: CurveFn,
    pub samples: Vec<SampleCheck>,
}

impl ClosureReport {
    pub fn ok(&self) -> bool {
        self.exact && self.samples.iter().all(|s| s.violations.is_empty())
    }

    pub fn require(&self) -> Result<()> {
        if self.ok() {
            return Ok(());
        }
        let mut msg = String::from("not a configuration curve of the linkage:");
        if !self.offending.is_empty() {
            msg += &format!(" cycle product has nonzero coordinates {:?}", self.offending);
        }
        for s in &self.samples {
            for v in &s.violations {
                msg += &format!("; at {} coordinate {} = {}", s.point, v.coordinate, v.value);
            }
        }
        Err(Error::ClosureViolation(msg))
    }

    pub fn to_json_value(&self, linkage: Option<&str>) -> serde_json::Value {
        let samples: Vec<serde_json::Value> = self
            .samples
            .iter()
            .map(|s| {
                let violations: Vec<serde_json::Value> = s
                    .violations
                    .iter()
                    .map(|v| serde_json::json!({ "coordinate": v.coordinate, "value": v.value }))
                    .collect();
                serde_json::json!({
                    "point": s.point.to_string(),
                    "product": s.product.c.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "ok": s.violations.is_empty(),
                    "violations": violations,
                })
            })
            .collect();
        let mut out = serde_json::Map::new();
        if let Some(name) = linkage {
            out.insert("linkage".into(), name.into());
        }
        out.insert("closed".into(), self.ok().into());
        out.insert("exact".into(), self.exact.into());
        out.insert("offending".into(), self.offending.clone().into());
        out.insert("scalar_part".into(), self.scalar_part.to_string().into());
        out.insert("samples".into(), samples.into());
        out.into()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("closure: {}\n", if self.ok() { "holds" } else { "violated" });
        s += &format!("cycle product: {}\n", self.scalar_part);
        if !self.offending.is_empty() {
            s += &format!("nonzero coordinates: {:?}\n", self.offending);
        }
        for c in &self.samples {
            let status = if c.violations.is_empty() { "ok" } else { "violated" };
            s += &format!("  {}: {status}\n", c.point);
            for v in &c.violations {
                s += &format!("    coordinate {} = {}\n", v.coordinate, v.value);
            }
        }
        s
    }
}

fn is_real(x: &Scalar) -> bool {
    x.conj().is_some_and(|c| c == *x)
}

/// Verifies `(t_1 − h_1)···(t_n − h_n) ∈ ℝ∖{0}` exactly along the curve and
/// at the given real parameter samples (both branches on double covers).
pub fn closure_check(l: &Linkage, curve: &ConfigCurve, samples: &[Rational], cap: usize, prec: u32) -> Result<ClosureReport> {
    let fx = CurveFactors::new(l, curve)?;
    let cyc = fx.cycle();
    let offending: Vec<usize> = (1..8).filter(|&k| !cyc.c[k].is_zero()).collect();
    let mut exact = offending.is_empty();
    if cyc.c[0].is_zero() {
        exact = false;
    }
    let mut out = Vec::new();
    for s in samples {
        for p in curve.points_over(&Scalar::Rational(s.clone()))? {
            let t = point_coords(curve, &p, cap, prec)?;
            let prod = ordered_product((1..=l.n() as i64).map(|k| point_factor(l, &t, k)));
            let mut violations: Vec<Violation> = (1..8)
                .filter(|&k| !prod.c[k].is_zero())
                .map(|k| Violation { coordinate: k, value: prod.c[k].to_string() })
                .collect();
            let s0 = &prod.c[0];
            let real_point = is_real(&p.param) && p.branch.as_ref().is_none_or(is_real);
            if s0.is_zero() || (real_point && !is_real(s0)) {
                violations.push(Violation { coordinate: 0, value: s0.to_string() });
            }
            out.push(SampleCheck { point: p, product: prod, violations });
        }
    }
    Ok(ClosureReport { exact, offending, scalar_part: cyc.c[0].clone(), samples: out })
}

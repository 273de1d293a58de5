use crate::algebra::{ComplexField, DualQuaternion, Gaussian};
use crate::curve::{AtPoint, ConfigCurve, CurvePoint, Local};
use crate::error::{Error, Result};
use crate::linkage::Linkage;
use crate::series::Series;

use super::Settings;

/// Vanishing orders at one bond, 0-based with row `i` standing for joint `i + 1`.
#[derive(Clone, Debug)]
pub struct LocalOrders {
    /// `ord Q(t_i − h_i)` after clearing poles, i.e. `2·b_β(i)`.
    pub twice_b: Vec<i64>,
    /// `v_β(i,j)`: minimal coordinate order of `F_{i,j}` on the forward run.
    pub v: Vec<Vec<i64>>,
    /// `ord Q(F_{i,j})`, computed from the product itself.
    pub twice_q_check: Vec<Vec<i64>>,
}

struct Orders<'a> {
    linkage: &'a Linkage,
}

fn min_order<F: ComplexField>(x: &DualQuaternion<Series<F>>, cap: usize) -> Result<i64> {
    let known = x.c.iter().filter_map(|s| s.valuation()).min();
    let hidden = x.c.iter().filter(|s| s.valuation().is_none()).map(|s| s.precision()).min();
    match (known, hidden) {
        (Some(v), Some(h)) if h < v => Err(Error::TruncationExceeded(cap)),
        (Some(v), _) => Ok(v),
        (None, _) => Err(Error::TruncationExceeded(cap)),
    }
}

impl AtPoint for Orders<'_> {
    type Out = LocalOrders;

    fn run<F: ComplexField>(self, local: Local<'_, F>) -> Result<LocalOrders> {
        let l = self.linkage;
        let n = l.n();
        let cap = local.cap;
        let mut factors: Vec<DualQuaternion<Series<F>>> = Vec::with_capacity(n);
        let mut twice_b = Vec::with_capacity(n);
        for k in 1..=n as i64 {
            let t = local.coord(l.slot(k))?;
            // Clearing a pole of order p replaces t − h by u^p·(t − h).
            let p = match t.valuation() {
                Some(v) if v < 0 => -v,
                _ => 0,
            };
            let h = l.joint(k).value().map(|r| Series::constant(local.embed(&Gaussian::real(r.clone()))).shift(p));
            let f = DualQuaternion::scalar(t.shift(p)) - h;
            twice_b.push(f.primal_norm().order(cap)?);
            factors.push(f);
        }
        let mut v = vec![vec![0; n]; n];
        let mut q = vec![vec![0; n]; n];
        for i in 0..n {
            let mut prod = DualQuaternion::<Series<F>>::scalar(Series::constant(local.embed(&Gaussian::from_ints(1, 0))));
            for len in 1..n {
                let j = (i + len) % n;
                prod = prod * factors[j].clone();
                v[i][j] = min_order(&prod, cap)?;
                q[i][j] = prod.primal_norm().order(cap)?;
            }
        }
        Ok(LocalOrders { twice_b, v, twice_q_check: q })
    }
}

/// Vanishing orders of the rotation factors and their chain products at `p`.
pub fn local_structure(l: &Linkage, curve: &ConfigCurve, p: &CurvePoint, s: Settings) -> Result<LocalOrders> {
    curve.at_point(p, s.order, s.precision, Orders { linkage: l })
}

//! Bonds of a closed-loop linkage: points of the configuration curve where
//! the rotation factors degenerate, with their local joint lengths,
//! distances and connection numbers.

mod halfint;
mod local;
mod report;

use std::cmp::Ordering;

use serde::Serialize;

use crate::algebra::{DualQuaternion, Gaussian, Scalar};
use crate::curve::{ConfigCurve, CurvePoint};
use crate::error::{Error, Result};
use crate::linkage::Linkage;
use crate::motion::{chain_f, point_coords, point_factor};

pub use halfint::HalfInt;
pub use local::{local_structure, LocalOrders};
pub use report::{BondReport, BondEntry, Aggregate};

/// Default truncation order of local series.
pub const DEFAULT_ORDER: usize = 8;
/// Default working precision in bits for approximate points.
pub const DEFAULT_PRECISION: u32 = 256;

/// Series truncation and numeric precision used by the bond engine.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub order: usize,
    pub precision: u32,
}

impl Default for Settings {
    fn default() -> Self {
        Self { order: DEFAULT_ORDER, precision: DEFAULT_PRECISION }
    }
}

#[derive(Clone, Debug)]
pub struct Bond {
    pub point: CurvePoint,
    /// `t_1, …, t_n` at the point; `None` is `∞`.
    pub coords: Vec<Option<Scalar>>,
    /// 1-based indices `k` with `t_k² + 1 = 0`.
    pub special: Vec<usize>,
    /// Index of the conjugate bond in the bond list.
    pub conjugate: Option<usize>,
}

impl Bond {
    pub fn is_typical(&self) -> bool {
        self.special.len() == 2
    }

    /// `F_{i,j}` evaluated at the bond.
    pub fn chain_value(&self, l: &Linkage, i: i64, j: i64) -> DualQuaternion<Scalar> {
        chain_f(l, i, j, |k| point_factor(l, &self.coords, k))
    }

    pub fn coord_strings(&self) -> Vec<String> {
        self.coords.iter().map(|c| c.as_ref().map_or_else(|| "inf".to_string(), |s| s.to_string())).collect()
    }
}

fn is_special(v: &Option<Scalar>) -> Result<bool> {
    Ok(match v {
        None => false,
        Some(s) => s.checked_mul(s)?.checked_add(&Scalar::int(1))?.is_zero(),
    })
}

fn coord_cmp(a: &[Option<Scalar>], b: &[Option<Scalar>]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let o = match (x, y) {
            (Some(x), Some(y)) => x.canonical_cmp(y),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => Ordering::Equal,
        };
        if o != Ordering::Equal {
            return o;
        }
    }
    Ordering::Equal
}

fn conj_matches(a: &Option<Scalar>, b: &Option<Scalar>) -> bool {
    match (a, b) {
        (None, None) => true,
        (Some(x), Some(y)) => match x.conj() {
            Some(c) if x.is_exact() && y.is_exact() => c.same_value(y),
            _ => {
                let (p, q) = (x.approx().conj(), y.approx());
                (p - q).norm() <= 1e-12 * (1.0 + q.norm())
            }
        },
        _ => false,
    }
}

/// All bonds of the linkage along the curve, in canonical order with
/// conjugate partners linked.
pub fn find_bonds(l: &Linkage, curve: &ConfigCurve, s: Settings) -> Result<Vec<Bond>> {
    if curve.n() != l.n() {
        return Err(Error::Input(format!("curve has {} coordinates, linkage has {} joints", curve.n(), l.n())));
    }
    let mut points: Vec<CurvePoint> = Vec::new();
    for k in 0..curve.n() {
        if curve.coords()[k].is_constant() {
            continue;
        }
        for target in [Gaussian::i(), -Gaussian::i()] {
            for p in curve.find_points_where(k, &target, s.order, s.precision)? {
                let mut seen = false;
                for q in &points {
                    if q.same_point(&p)? {
                        seen = true;
                        break;
                    }
                }
                if !seen {
                    points.push(p);
                }
            }
        }
    }
    let mut bonds = Vec::with_capacity(points.len());
    for point in points {
        let coords = point_coords(curve, &point, s.order, s.precision)?;
        let mut special = Vec::new();
        for (k, c) in coords.iter().enumerate() {
            if is_special(c)? {
                special.push(k + 1);
            }
        }
        if special.len() < 2 {
            return Err(Error::Inconsistency(format!("bond at {point} has fewer than two special coordinates")));
        }
        bonds.push(Bond { point, coords, special, conjugate: None });
    }
    bonds.sort_by(|a, b| coord_cmp(&a.coords, &b.coords));
    for i in 0..bonds.len() {
        if bonds[i].conjugate.is_some() {
            continue;
        }
        let partner = (0..bonds.len()).find(|&j| {
            j != i
                && bonds[j].conjugate.is_none()
                && bonds[i].coords.iter().zip(&bonds[j].coords).all(|(a, b)| conj_matches(a, b))
        });
        if let Some(j) = partner {
            bonds[i].conjugate = Some(j);
            bonds[j].conjugate = Some(i);
        }
    }
    if curve.is_real() {
        if let Some(b) = bonds.iter().find(|b| b.conjugate.is_none()) {
            return Err(Error::Inconsistency(format!("bond ({}) has no conjugate partner", b.coord_strings().join(", "))));
        }
    }
    Ok(bonds)
}

/// Local structure of one bond.
#[derive(Clone, Debug, Serialize)]
pub struct BondStructure {
    /// `b_β(i)`, index `i − 1`.
    pub b: Vec<HalfInt>,
    /// `v_β(i,j)` on the cyclic run `i → j`; diagonal entries are `0`.
    pub v: Vec<Vec<i64>>,
    /// Local distance matrix.
    pub d: Vec<Vec<HalfInt>>,
    /// Connection numbers.
    pub k: Vec<Vec<i64>>,
    pub typical: bool,
    pub elementary: bool,
}

impl BondStructure {
    fn from_orders(n: usize, o: &LocalOrders, typical: bool) -> Result<Self> {
        let b: Vec<HalfInt> = o.twice_b.iter().map(|&x| HalfInt::from_twice(x)).collect();
        // d(i, j) on the run i → j (0-based rows, the run goes forward).
        let run_b = |i: usize, j: usize| -> i64 {
            let len = (j + n - i) % n;
            (1..=len).map(|s| o.twice_b[(i + s) % n]).sum()
        };
        let mut d = vec![vec![HalfInt::ZERO; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let twice = run_b(i, j) - 2 * o.v[i][j];
                if twice < 0 {
                    return Err(Error::Inconsistency(format!("negative local distance d({}, {})", i + 1, j + 1)));
                }
                if o.twice_q_check[i][j] != run_b(i, j) {
                    return Err(Error::Inconsistency(format!(
                        "ord Q(F_{{{},{}}}) disagrees with the local joint lengths",
                        i + 1,
                        j + 1
                    )));
                }
                d[i][j] = HalfInt::from_twice(twice);
            }
        }
        for i in 0..n {
            for j in 0..n {
                if d[i][j] != d[j][i] {
                    return Err(Error::Inconsistency(format!(
                        "local distance is not symmetric at ({}, {}): {} vs {}",
                        i + 1,
                        j + 1,
                        d[i][j],
                        d[j][i]
                    )));
                }
            }
        }
        let k = connection_numbers(&d)?;
        let elementary = b.iter().copied().sum::<HalfInt>() == HalfInt::int(1);
        if elementary && !typical {
            return Err(Error::Inconsistency("elementary bond is not typical".into()));
        }
        Ok(Self { b, v: o.v.clone(), d, k, typical, elementary })
    }
}

/// `k(i,j) = d(i,j) + d(i−1,j−1) − d(i,j−1) − d(i−1,j)` off the diagonal.
pub fn connection_numbers(d: &[Vec<HalfInt>]) -> Result<Vec<Vec<i64>>> {
    let n = d.len();
    let p = |i: usize| (i + n - 1) % n;
    let mut k = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let x = d[i][j] + d[p(i)][p(j)] - d[i][p(j)] - d[p(i)][j];
            k[i][j] = x.to_integer().ok_or_else(|| {
                Error::Inconsistency(format!("connection number k({}, {}) = {x} is not an integer", i + 1, j + 1))
            })?;
        }
    }
    Ok(k)
}

/// Bonds with their local structures and the aggregate matrices.
#[derive(Clone, Debug)]
pub struct BondAnalysis {
    pub n: usize,
    pub bonds: Vec<Bond>,
    pub structures: Vec<BondStructure>,
    /// `D = Σ_β D_β`.
    pub distances: Vec<Vec<i64>>,
    /// `b(i) = Σ_β b_β(i)`.
    pub joint_lengths: Vec<i64>,
    /// `K = Σ_β K_β`.
    pub connections: Vec<Vec<i64>>,
}

impl BondAnalysis {
    pub fn run(l: &Linkage, curve: &ConfigCurve, s: Settings) -> Result<Self> {
        let bonds = find_bonds(l, curve, s)?;
        let mut structures = Vec::with_capacity(bonds.len());
        for b in &bonds {
            let orders = local_structure(l, curve, &b.point, s)?;
            structures.push(BondStructure::from_orders(l.n(), &orders, b.is_typical())?);
        }
        Self::aggregate(l.n(), bonds, structures)
    }

    pub fn aggregate(n: usize, bonds: Vec<Bond>, structures: Vec<BondStructure>) -> Result<Self> {
        let mut twice_d = vec![vec![0i64; n]; n];
        let mut twice_b = vec![0i64; n];
        let mut connections = vec![vec![0i64; n]; n];
        for st in &structures {
            for i in 0..n {
                twice_b[i] += st.b[i].twice;
                for j in 0..n {
                    twice_d[i][j] += st.d[i][j].twice;
                    connections[i][j] += st.k[i][j];
                }
            }
        }
        let half = |x: i64, what: &str| -> Result<i64> {
            if x % 2 != 0 {
                return Err(Error::Inconsistency(format!("{what} {}/2 is not an integer; the bond list is incomplete", x)));
            }
            Ok(x / 2)
        };
        let distances = twice_d
            .iter()
            .map(|row| row.iter().map(|&x| half(x, "distance")).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let joint_lengths = twice_b.iter().map(|&x| half(x, "joint length")).collect::<Result<Vec<_>>>()?;
        Ok(Self { n, bonds, structures, distances, joint_lengths, connections })
    }

    /// Structure pairs `(bond, conjugate)` with each pair listed once.
    pub fn conjugate_pairs(&self) -> Vec<(usize, Option<usize>)> {
        let mut out = Vec::new();
        for (i, b) in self.bonds.iter().enumerate() {
            match b.conjugate {
                Some(j) if j < i => {}
                c => out.push((i, c)),
            }
        }
        out
    }
}

//! Closed revolute chains: data model, axis geometry and coupling spaces.

mod geometry;
mod io;

use serde::Serialize;

pub use geometry::{bennett_condition, concurrent, cross, dot, BennettCheck, Line, Vec3};
pub use io::{JointFile, LinkageFile};

use crate::algebra::{DualQuaternion, JointQuaternion, Rational, Ring};
use crate::error::{Error, Result};
use crate::linalg;

/// A closed chain `(h_1, …, h_n)`; link `o_i` carries the axes `h_i`, `h_{i+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Linkage {
    pub name: Option<String>,
    joints: Vec<JointQuaternion>,
}

/// Dimension class of three consecutive axes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TripleKind {
    Concurrent,
    Bennett,
    Generic,
}

/// Span of all ordered subproducts of a run of consecutive joints.
#[derive(Clone, Debug)]
pub struct CouplingSpace {
    /// 1-based joint indices in product order.
    pub run: Vec<usize>,
    pub basis: Vec<DualQuaternion<Rational>>,
    pub dim: usize,
}

impl CouplingSpace {
    /// Whether the whole space lies on the Study quadric.
    pub fn in_study_quadric(&self) -> bool {
        self.basis.iter().enumerate().all(|(a, x)| self.basis[a..].iter().all(|y| x.study_bilinear(y).is_zero()))
    }
}

/// Metric data of one pair of consecutive axes `h_i`, `h_{i+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairGeometry {
    /// Squared distance `a_i²`.
    pub distance_sq: Rational,
    /// `cos α_i` for unit directions.
    pub cos_angle: Rational,
    pub sin_angle_sq: Rational,
}

/// Denavit–Hartenberg style data of the whole chain.
#[derive(Clone, Debug, PartialEq)]
pub struct AxisGeometry {
    pub lines: Vec<Line>,
    /// Entry `i` describes axes `h_{i+1}`, `h_{i+2}` (0-based storage).
    pub pairs: Vec<PairGeometry>,
    /// Signed offset along axis `h_{i+1}` between the normal feet of its
    /// neighbours; `None` next to parallel axes.
    pub offsets: Vec<Option<Rational>>,
}

impl Linkage {
    pub fn new(name: Option<String>, joints: Vec<JointQuaternion>) -> Result<Self> {
        let n = joints.len();
        if n < 3 {
            return Err(Error::Input(format!("a closed chain needs at least 3 joints, got {n}")));
        }
        for i in 0..n {
            let (a, b) = (&joints[i], &joints[(i + 1) % n]);
            if a.same_axis(b) || Line::of_joint(a).same_line(&Line::of_joint(b)) {
                return Err(Error::Input(format!("consecutive joints h{} and h{} share an axis", i + 1, (i + 1) % n + 1)));
            }
        }
        Ok(Self { name, joints })
    }

    pub fn n(&self) -> usize {
        self.joints.len()
    }

    pub fn joints(&self) -> &[JointQuaternion] {
        &self.joints
    }

    /// 0-based storage index of the cyclic 1-based index `i`.
    pub fn slot(&self, i: i64) -> usize {
        (i - 1).rem_euclid(self.n() as i64) as usize
    }

    /// `h_i` with `h_{kn+i} = h_i`.
    pub fn joint(&self, i: i64) -> &JointQuaternion {
        &self.joints[self.slot(i)]
    }

    pub fn axis(&self, i: i64) -> Line {
        Line::of_joint(self.joint(i))
    }

    pub fn lines(&self) -> Vec<Line> {
        self.joints.iter().map(Line::of_joint).collect()
    }

    /// Replaces `h_i`, keeping the chain invariants.
    pub fn with_joint(&self, i: i64, h: JointQuaternion) -> Result<Self> {
        let mut joints = self.joints.clone();
        joints[self.slot(i)] = h;
        Self::new(self.name.clone(), joints)
    }

    /// 1-based indices of joints whose first nonzero direction coordinate is
    /// negative.
    pub fn non_canonical_joints(&self) -> Vec<usize> {
        (0..self.n()).filter(|&k| !self.joints[k].is_canonically_signed()).map(|k| k + 1).collect()
    }

    pub fn all_concurrent(&self) -> bool {
        concurrent(&self.lines()).expect("at least three valid lines")
    }

    pub fn all_parallel(&self) -> bool {
        let ls = self.lines();
        ls.iter().all(|l| l.is_parallel(&ls[0]))
    }

    pub fn axis_geometry(&self) -> AxisGeometry {
        let lines = self.lines();
        let n = self.n();
        let pairs = (0..n)
            .map(|k| {
                let (a, b) = (&lines[k], &lines[(k + 1) % n]);
                let (_, sin2) = a.angle_sq(b);
                PairGeometry { distance_sq: a.distance_sq(b), cos_angle: dot(&a.dir, &b.dir), sin_angle_sq: sin2 }
            })
            .collect();
        let offsets = (0..n)
            .map(|k| {
                let l = &lines[k];
                let prev = l.foot_towards(&lines[(k + n - 1) % n])?;
                let next = l.foot_towards(&lines[(k + 1) % n])?;
                Some(dot(&geometry::sub(&next, &prev), &l.dir))
            })
            .collect();
        AxisGeometry { lines, pairs, offsets }
    }

    /// `L_{i,…,j}` for the increasing cyclic run `i ≤ j < i + n`.
    pub fn coupling_space(&self, i: i64, j: i64) -> CouplingSpace {
        assert!(i <= j && j - i < self.n() as i64, "invalid run {i}..{j}");
        let run: Vec<i64> = (i..=j).collect();
        self.coupling_space_of(&run)
    }

    /// Coupling space of the joints in `run`, multiplied in the given order.
    pub fn coupling_space_of(&self, run: &[i64]) -> CouplingSpace {
        let m = run.len();
        assert!(m < 20, "run too long for subset enumeration");
        let mut rows = Vec::with_capacity(1 << m);
        for mask in 0u32..(1u32 << m) {
            let mut p = DualQuaternion::<Rational>::one();
            for (bit, &k) in run.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    p = p * self.joint(k).value().clone();
                }
            }
            rows.push(p.c.to_vec());
        }
        let basis: Vec<DualQuaternion<Rational>> = linalg::row_basis(&rows)
            .into_iter()
            .map(|r| DualQuaternion::new(r.try_into().expect("8 coordinates")))
            .collect();
        CouplingSpace { run: run.iter().map(|&k| self.slot(k) + 1).collect(), dim: basis.len(), basis }
    }

    /// Classifies `h_i, h_{i+1}, h_{i+2}` by `dim L_{i,i+1,i+2}`.
    pub fn diagnose_triple(&self, i: i64) -> Result<TripleKind> {
        let s = self.coupling_space(i, i + 2);
        match s.dim {
            4 => Ok(TripleKind::Concurrent),
            6 => Ok(TripleKind::Bennett),
            8 => Ok(TripleKind::Generic),
            d => Err(Error::Inconsistency(format!("coupling dimension {d} of h{i}, h{}, h{} is not 4, 6 or 8", i + 1, i + 2))),
        }
    }

    /// Concurrency of the three consecutive axes starting at `h_i`.
    pub fn triple_concurrent(&self, i: i64) -> bool {
        concurrent(&[self.axis(i), self.axis(i + 1), self.axis(i + 2)]).expect("valid lines")
    }

    pub fn triple_bennett(&self, i: i64) -> Result<BennettCheck> {
        bennett_condition(self.joint(i), self.joint(i + 1), self.joint(i + 2))
    }
}

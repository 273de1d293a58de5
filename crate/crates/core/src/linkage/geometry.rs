//! Line geometry of revolute axes in normalized Plücker coordinates.

use crate::algebra::{JointQuaternion, Rational, Ring};
use crate::error::{Error, Result};

pub type Vec3 = [Rational; 3];

pub fn dot(a: &Vec3, b: &Vec3) -> Rational {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

pub fn add(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0].clone() + b[0].clone(), a[1].clone() + b[1].clone(), a[2].clone() + b[2].clone()]
}

pub fn sub(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0].clone() - b[0].clone(), a[1].clone() - b[1].clone(), a[2].clone() - b[2].clone()]
}

pub fn scale(s: &Rational, a: &Vec3) -> Vec3 {
    [s.clone() * a[0].clone(), s.clone() * a[1].clone(), s.clone() * a[2].clone()]
}

fn is_null(a: &Vec3) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// A line with direction `dir` and moment `moment = p × dir` for points `p`
/// on the line.
#[derive(Clone, Debug, PartialEq)]
pub struct Line {
    pub dir: Vec3,
    pub moment: Vec3,
}

impl Line {
    pub fn new(dir: Vec3, moment: Vec3) -> Result<Self> {
        if is_null(&dir) {
            return Err(Error::Input("line with zero direction".into()));
        }
        if !dot(&dir, &moment).is_zero() {
            return Err(Error::Input("Plücker condition dir·moment = 0 violated".into()));
        }
        Ok(Self { dir, moment })
    }

    pub fn through(point: &Vec3, dir: Vec3) -> Result<Self> {
        let m = cross(point, &dir);
        Self::new(dir, m)
    }

    pub fn of_joint(h: &JointQuaternion) -> Self {
        Self { dir: h.direction(), moment: h.moment() }
    }

    pub fn dir_sq(&self) -> Rational {
        dot(&self.dir, &self.dir)
    }

    /// Point of the line closest to the origin.
    pub fn base_point(&self) -> Vec3 {
        let s = <Rational as Ring>::one() / self.dir_sq();
        scale(&s, &cross(&self.dir, &self.moment))
    }

    pub fn contains(&self, p: &Vec3) -> bool {
        cross(p, &self.dir) == self.moment
    }

    pub fn is_parallel(&self, o: &Line) -> bool {
        is_null(&cross(&self.dir, &o.dir))
    }

    pub fn same_line(&self, o: &Line) -> bool {
        self.is_parallel(o) && o.contains(&self.base_point())
    }

    /// Reciprocal product; zero iff the lines are coplanar.
    pub fn reciprocal(&self, o: &Line) -> Rational {
        dot(&self.dir, &o.moment) + dot(&o.dir, &self.moment)
    }

    pub fn intersects(&self, o: &Line) -> bool {
        self.reciprocal(o).is_zero()
    }

    /// Squared cosine and squared sine of the angle between the lines.
    pub fn angle_sq(&self, o: &Line) -> (Rational, Rational) {
        let n = self.dir_sq() * o.dir_sq();
        let c = dot(&self.dir, &o.dir);
        let cos2 = c.clone() * c / n.clone();
        (cos2.clone(), <Rational as Ring>::one() - cos2)
    }

    /// Point on `self` closest to `o` (foot of the common normal); `None` for
    /// parallel lines.
    pub fn foot_towards(&self, o: &Line) -> Option<Vec3> {
        if self.is_parallel(o) {
            return None;
        }
        let p = self.base_point();
        let q = o.base_point();
        // Solve (p + s·d1 − q − r·d2) ⟂ d1, d2.
        let d1 = &self.dir;
        let d2 = &o.dir;
        let w = sub(&p, &q);
        let a = dot(d1, d1);
        let b = dot(d1, d2);
        let c = dot(d2, d2);
        let d = dot(d1, &w);
        let e = dot(d2, &w);
        let den = a * c.clone() - b.clone() * b.clone();
        let s = (b * e - c * d) / den;
        Some(add(&p, &scale(&s, d1)))
    }

    /// Squared distance between the lines.
    pub fn distance_sq(&self, o: &Line) -> Rational {
        match (self.foot_towards(o), o.foot_towards(self)) {
            (Some(a), Some(b)) => {
                let v = sub(&a, &b);
                dot(&v, &v)
            }
            _ => {
                let p = o.base_point();
                let q = self.base_point();
                let v = sub(&p, &q);
                let along = dot(&v, &self.dir);
                let perp = sub(&v, &scale(&(along / self.dir_sq()), &self.dir));
                dot(&perp, &perp)
            }
        }
    }

    /// Common point of two intersecting, non-parallel lines.
    pub fn intersection(&self, o: &Line) -> Option<Vec3> {
        if !self.intersects(o) {
            return None;
        }
        self.foot_towards(o)
    }
}

/// All lines parallel, or all through one common point.
pub fn concurrent(lines: &[Line]) -> Result<bool> {
    if lines.len() < 2 {
        return Err(Error::Precondition("concurrency needs at least two lines".into()));
    }
    let first = &lines[0];
    let Some(other) = lines.iter().find(|l| !l.is_parallel(first)) else {
        return Ok(true);
    };
    let Some(p) = first.intersection(other) else {
        return Ok(false);
    };
    Ok(lines.iter().all(|l| l.contains(&p)))
}

/// Outcome of the metric Bennett test on three consecutive axes.
#[derive(Clone, Debug, PartialEq)]
pub struct BennettCheck {
    pub holds: bool,
    pub feet_coincide: bool,
    /// `(d/sin α)²` for the pairs (a, b) and (b, c).
    pub ratios_sq: Option<(Rational, Rational)>,
    pub diagnostic: Option<String>,
}

/// The normal feet of `a` and `c` on `b` coincide and `d_ab / sin α_ab =
/// d_bc / sin α_bc`.
pub fn bennett_condition(a: &JointQuaternion, b: &JointQuaternion, c: &JointQuaternion) -> Result<BennettCheck> {
    let (la, lb, lc) = (Line::of_joint(a), Line::of_joint(b), Line::of_joint(c));
    for (x, y) in [(&la, &lb), (&lb, &lc)] {
        if x.same_line(y) {
            return Err(Error::Precondition("consecutive axes coincide".into()));
        }
    }
    if concurrent(&[la.clone(), lb.clone(), lc.clone()])? {
        return Err(Error::Precondition("axes are concurrent".into()));
    }
    if la.is_parallel(&lb) || lb.is_parallel(&lc) {
        return Ok(BennettCheck {
            holds: false,
            feet_coincide: false,
            ratios_sq: None,
            diagnostic: Some("parallel consecutive axes: sin α = 0 with nonzero distance".into()),
        });
    }
    let fa = lb.foot_towards(&la).expect("not parallel");
    let fc = lb.foot_towards(&lc).expect("not parallel");
    let feet_coincide = fa == fc;
    let ratio = |x: &Line, y: &Line| {
        let (_, sin2) = x.angle_sq(y);
        x.distance_sq(y) / sin2
    };
    let r1 = ratio(&la, &lb);
    let r2 = ratio(&lb, &lc);
    let holds = feet_coincide && r1 == r2;
    let diagnostic = match (feet_coincide, r1 == r2) {
        (true, true) => None,
        (false, _) => Some("normal feet on the middle axis differ".into()),
        (true, false) => Some("distance/sine ratios differ".into()),
    };
    Ok(BennettCheck { holds, feet_coincide, ratios_sq: Some((r1, r2)), diagnostic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn v(a: i64, b: i64, c: i64) -> Vec3 {
        [int(a), int(b), int(c)]
    }

    #[test]
    fn point_line_incidence() {
        let l = Line::through(&v(1, 2, 3), v(0, 0, 1)).unwrap();
        assert!(l.contains(&v(1, 2, -7)));
        assert!(!l.contains(&v(1, 3, 0)));
        assert_eq!(l.base_point(), v(1, 2, 0));
    }

    #[test]
    fn skew_distance_and_feet() {
        let a = Line::through(&v(0, 0, 0), v(1, 0, 0)).unwrap();
        let b = Line::through(&v(0, 0, 2), v(0, 1, 0)).unwrap();
        assert!(!a.intersects(&b));
        assert_eq!(a.distance_sq(&b), int(4));
        assert_eq!(a.foot_towards(&b).unwrap(), v(0, 0, 0));
        assert_eq!(b.foot_towards(&a).unwrap(), v(0, 0, 2));
        let (c2, s2) = a.angle_sq(&b);
        assert_eq!((c2, s2), (int(0), int(1)));
    }

    #[test]
    fn parallel_distance() {
        let a = Line::through(&v(0, 0, 0), v(0, 0, 1)).unwrap();
        let b = Line::through(&v(3, 4, 5), v(0, 0, 2)).unwrap();
        assert_eq!(a.distance_sq(&b), int(25));
        assert!(concurrent(&[a, b]).unwrap());
    }

    #[test]
    fn concurrency() {
        let p = [rat(1, 2), int(1), int(-1)];
        let ls: Vec<Line> = [v(1, 0, 0), v(0, 1, 0), v(1, 1, 1)].iter().map(|d| Line::through(&p, d.clone()).unwrap()).collect();
        assert!(concurrent(&ls).unwrap());
        let q = Line::through(&v(0, 0, 0), v(0, 0, 1)).unwrap();
        let mut more = ls.clone();
        more.push(q);
        assert!(!concurrent(&more).unwrap());
    }

    #[test]
    fn rejects_degenerate_plucker_data() {
        assert!(Line::new(v(0, 0, 0), v(0, 0, 0)).is_err());
        assert!(Line::new(v(1, 0, 0), v(1, 0, 0)).is_err());
    }
}

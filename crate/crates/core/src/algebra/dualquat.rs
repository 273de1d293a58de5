//! Dual quaternions in the basis (1, 𝐢, 𝐣, 𝐤, ε, ε𝐢, ε𝐣, ε𝐤).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::dual::DualNumber;
use super::field::{Field, Ring};
use crate::error::{Error, Result};

/// Quaternion units multiply as `UNIT[a][b] = (sign, index)`.
const UNIT: [[(i8, usize); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
];

const fn structure_constants() -> [[(i8, usize); 8]; 8] {
    let mut t = [[(0i8, 0usize); 8]; 8];
    let mut a = 0;
    while a < 8 {
        let mut b = 0;
        while b < 8 {
            let ea = a / 4;
            let eb = b / 4;
            if ea + eb < 2 {
                let (s, k) = UNIT[a % 4][b % 4];
                t[a][b] = (s, k + 4 * (ea + eb));
            }
            b += 1;
        }
        a += 1;
    }
    t
}

/// Product of basis elements: `e_a · e_b = sign · e_index`, sign 0 for zero.
pub const STRUCTURE: [[(i8, usize); 8]; 8] = structure_constants();

#[derive(Clone, Debug, PartialEq)]
pub struct DualQuaternion<F> {
    pub c: [F; 8],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Displacement {
    Identity,
    Rotation,
    Translation,
    NotADisplacement,
}

impl<F: Ring> DualQuaternion<F> {
    pub fn new(c: [F; 8]) -> Self {
        Self { c }
    }

    pub fn from_parts(primal: [F; 4], dual: [F; 4]) -> Self {
        let [a, b, c, d] = primal;
        let [e, f, g, h] = dual;
        Self { c: [a, b, c, d, e, f, g, h] }
    }

    pub fn scalar(s: F) -> Self {
        let mut c: [F; 8] = std::array::from_fn(|_| F::zero());
        c[0] = s;
        Self { c }
    }

    pub fn basis(k: usize) -> Self {
        let mut c: [F; 8] = std::array::from_fn(|_| F::zero());
        c[k] = F::one();
        Self { c }
    }

    pub fn primal(&self) -> [F; 4] {
        std::array::from_fn(|k| self.c[k].clone())
    }

    pub fn dual(&self) -> [F; 4] {
        std::array::from_fn(|k| self.c[k + 4].clone())
    }

    pub fn map<G>(&self, f: impl Fn(&F) -> G) -> DualQuaternion<G> {
        DualQuaternion { c: std::array::from_fn(|k| f(&self.c[k])) }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, s: &F) -> Self {
        Self { c: std::array::from_fn(|k| s.clone() * self.c[k].clone()) }
    }

    /// Negates the vectorial parts.
    pub fn conj(&self) -> Self {
        Self {
            c: std::array::from_fn(|k| if k % 4 == 0 { self.c[k].clone() } else { -self.c[k].clone() }),
        }
    }

    /// `h·conj(h)`, a dual number.
    pub fn norm(&self) -> DualNumber<F> {
        let p = &self.c;
        let primal = (0..4).fold(F::zero(), |acc, k| acc + p[k].clone() * p[k].clone());
        let mixed = (0..4).fold(F::zero(), |acc, k| acc + p[k].clone() * p[k + 4].clone());
        DualNumber::new(primal, mixed.clone() + mixed)
    }

    /// `h + conj(h)`.
    pub fn trace(&self) -> DualNumber<F> {
        DualNumber::new(self.c[0].clone() + self.c[0].clone(), self.c[4].clone() + self.c[4].clone())
    }

    /// Sum of squares of the primal coordinates (primal part of the norm).
    pub fn primal_norm(&self) -> F {
        self.norm().primal
    }

    /// Dual part of the norm; zero exactly on the Study quadric.
    pub fn study_form(&self) -> F {
        self.norm().dual
    }

    /// Polar form of the Study quadric.
    pub fn study_bilinear(&self, o: &Self) -> F {
        (0..4).fold(F::zero(), |acc, k| {
            acc + self.c[k].clone() * o.c[k + 4].clone() + self.c[k + 4].clone() * o.c[k].clone()
        })
    }

    pub fn on_study_quadric(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::Precondition("zero dual quaternion".into()));
        }
        Ok(self.study_form().is_zero())
    }

    pub fn primal_vector_is_zero(&self) -> bool {
        (1..4).all(|k| self.c[k].is_zero())
    }

    pub fn classify_displacement(&self) -> Result<Displacement> {
        if self.is_zero() {
            return Err(Error::Precondition("zero dual quaternion".into()));
        }
        if (0..4).all(|k| self.c[k].is_zero()) {
            return Ok(Displacement::NotADisplacement);
        }
        if (1..8).all(|k| self.c[k].is_zero()) {
            return Ok(Displacement::Identity);
        }
        if !self.norm().is_strictly_real() || !self.trace().is_strictly_real() {
            return Ok(Displacement::NotADisplacement);
        }
        if self.primal_vector_is_zero() {
            Ok(Displacement::Translation)
        } else {
            Ok(Displacement::Rotation)
        }
    }
}

impl<F: Field> DualQuaternion<F> {
    /// Image of the point `v` under the displacement `h = p + εq`:
    /// `(p v p̄ + p q̄ − q p̄) / (p p̄)`.
    pub fn act_on_point(&self, v: &[F; 3]) -> Result<[F; 3]> {
        let p = Self::from_parts(self.primal(), std::array::from_fn(|_| F::zero()));
        let q = Self::from_parts(self.dual(), std::array::from_fn(|_| F::zero()));
        let n = p.primal_norm();
        let ninv = n.try_inv().ok_or_else(|| Error::Precondition("primal part is zero".into()))?;
        let vq = Self::from_parts([F::zero(), v[0].clone(), v[1].clone(), v[2].clone()], std::array::from_fn(|_| F::zero()));
        let img = p.clone() * vq * p.conj() + p.clone() * q.conj() - q * p.conj();
        Ok([img.c[1].clone() * ninv.clone(), img.c[2].clone() * ninv.clone(), img.c[3].clone() * ninv])
    }

    pub fn try_inv(&self) -> Option<Self> {
        let n = self.norm();
        let pinv = n.primal.try_inv()?;
        // (a + εb)⁻¹ = a⁻¹ − ε b a⁻²
        let ninv = DualNumber::new(pinv.clone(), -(n.dual * pinv.clone() * pinv));
        let c = self.conj();
        Some(c.dual_scale(&ninv))
    }

    fn dual_scale(&self, d: &DualNumber<F>) -> Self {
        let p = d.primal.clone();
        let e = d.dual.clone();
        Self {
            c: std::array::from_fn(|k| {
                if k < 4 {
                    p.clone() * self.c[k].clone()
                } else {
                    p.clone() * self.c[k].clone() + e.clone() * self.c[k - 4].clone()
                }
            }),
        }
    }
}

impl<F: Ring> Add for DualQuaternion<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut a = self.c;
        for (x, y) in a.iter_mut().zip(o.c) {
            *x = x.clone() + y;
        }
        Self { c: a }
    }
}

impl<F: Ring> Sub for DualQuaternion<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let mut a = self.c;
        for (x, y) in a.iter_mut().zip(o.c) {
            *x = x.clone() - y;
        }
        Self { c: a }
    }
}

impl<F: Ring> Neg for DualQuaternion<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { c: self.c.map(|x| -x) }
    }
}

impl<F: Ring> Mul for DualQuaternion<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out: [F; 8] = std::array::from_fn(|_| F::zero());
        for a in 0..8 {
            if self.c[a].is_zero() {
                continue;
            }
            for b in 0..8 {
                let (s, k) = STRUCTURE[a][b];
                if s == 0 || o.c[b].is_zero() {
                    continue;
                }
                let term = self.c[a].clone() * o.c[b].clone();
                out[k] = if s > 0 { out[k].clone() + term } else { out[k].clone() - term };
            }
        }
        Self { c: out }
    }
}

impl<F: Ring> Ring for DualQuaternion<F> {
    fn zero() -> Self {
        Self::scalar(F::zero())
    }
    fn one() -> Self {
        Self::scalar(F::one())
    }
    fn is_zero(&self) -> bool {
        DualQuaternion::is_zero(self)
    }
}

impl<F: fmt::Display + Ring> fmt::Display for DualQuaternion<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 8] = ["", "i", "j", "k", "ε", "εi", "εj", "εk"];
        let mut first = true;
        for (k, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{x}")?;
            } else {
                write!(f, "({x}){}", NAMES[k])?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat, Rational};

    type Dq = DualQuaternion<Rational>;

    fn b(k: usize) -> Dq {
        Dq::basis(k)
    }

    /// Hamilton product followed by the dual-number rule, written out
    /// independently of the structure table.
    fn hamilton(a: &Dq, b: &Dq) -> Dq {
        let q = |x: [Rational; 4], y: [Rational; 4]| -> [Rational; 4] {
            let [a0, a1, a2, a3] = x;
            let [b0, b1, b2, b3] = y;
            [
                &a0 * &b0 - &a1 * &b1 - &a2 * &b2 - &a3 * &b3,
                &a0 * &b1 + &a1 * &b0 + &a2 * &b3 - &a3 * &b2,
                &a0 * &b2 - &a1 * &b3 + &a2 * &b0 + &a3 * &b1,
                &a0 * &b3 + &a1 * &b2 - &a2 * &b1 + &a3 * &b0,
            ]
        };
        let p = q(a.primal(), b.primal());
        let d1 = q(a.primal(), b.dual());
        let d2 = q(a.dual(), b.primal());
        Dq::from_parts(p, std::array::from_fn(|k| d1[k].clone() + d2[k].clone()))
    }

    #[test]
    fn basis_products() {
        assert_eq!(b(1) * b(2), b(3));
        assert_eq!(b(2) * b(1), -b(3));
        assert_eq!(b(5) * b(6), Dq::zero());
        assert_eq!(b(1) * b(1), -Dq::one());
        assert_eq!(b(4) * b(3), b(7));
    }

    #[test]
    fn table_matches_hamilton_on_basis() {
        for x in 0..8 {
            for y in 0..8 {
                assert_eq!(b(x) * b(y), hamilton(&b(x), &b(y)), "e{x}*e{y}");
            }
        }
    }

    #[test]
    fn example_one_product() {
        let h2 = Dq::from_parts([int(0), int(0), int(1), int(0)], [int(0), int(9), int(0), int(-9)]);
        let h3 = Dq::from_parts(
            [int(0), rat(-1, 3), rat(-2, 3), rat(2, 3)],
            [int(0), int(-4), int(4), int(2)],
        );
        assert_eq!(h2.clone() * h3.clone(), hamilton(&h2, &h3));
    }

    #[test]
    fn conj_norm_trace() {
        let x = b(0) + b(1);
        assert_eq!(x.conj(), b(0) - b(1));
        assert!(b(1).trace().is_zero());
        let n = x.norm();
        let full = x.clone() * x.conj();
        assert_eq!(full, Dq::from_parts([n.primal.clone(), int(0), int(0), int(0)], [n.dual.clone(), int(0), int(0), int(0)]));
    }

    #[test]
    fn study_quadric() {
        assert!((b(0) + b(4)).on_study_quadric().is_ok_and(|s| !s));
        assert!(b(1).on_study_quadric().unwrap());
        assert!(Dq::zero().on_study_quadric().is_err());
    }

    #[test]
    fn displacement_kinds() {
        assert_eq!(b(1).classify_displacement().unwrap(), Displacement::Rotation);
        assert_eq!((b(0) + b(5)).classify_displacement().unwrap(), Displacement::Translation);
        assert_eq!((b(0) + b(1) + b(4)).classify_displacement().unwrap(), Displacement::NotADisplacement);
        assert_eq!(Dq::scalar(int(3)).classify_displacement().unwrap(), Displacement::Identity);
        assert_eq!(b(5).classify_displacement().unwrap(), Displacement::NotADisplacement);
    }

    #[test]
    fn point_action() {
        let v = [int(1), int(0), int(0)];
        assert_eq!(Dq::one().act_on_point(&v).unwrap(), v);
        assert_eq!(b(3).act_on_point(&v).unwrap(), [int(-1), int(0), int(0)]);
        let t = b(0) + b(5);
        let img = t.act_on_point(&[int(0), int(0), int(0)]).unwrap();
        assert_eq!(img, [int(-2), int(0), int(0)]);
        assert!(b(4).act_on_point(&v).is_err());
    }

    #[test]
    fn inverse() {
        let x = Dq::from_parts([int(1), int(2), int(0), int(-1)], [int(3), int(0), int(1), int(1)]);
        assert_eq!(x.clone() * x.try_inv().unwrap(), Dq::one());
    }
}

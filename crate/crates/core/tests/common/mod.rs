#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use bondkit::bonds::{BondAnalysis, Settings};
use bondkit::curve::{ConfigCurve, CoordValue};
use bondkit::fixtures::{fixture_corpus, Fixture};
use bondkit::linkage::Linkage;
use bondkit::{rat, DualQuaternion, JointQuaternion, Rational, Scalar};
use rand::Rng;

pub type Analysed = (Linkage, ConfigCurve, BondAnalysis);

/// Bond analysis of a fixture, computed once per test binary.
pub fn analyse(f: &'static Fixture) -> &'static Analysed {
    static CACHE: OnceLock<Mutex<HashMap<&'static str, &'static Analysed>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(a) = cache.lock().unwrap().get(f.name) {
        return a;
    }
    let l = f.linkage().unwrap();
    let c = f.curve().expect("fixture has a curve").unwrap();
    let a = BondAnalysis::run(&l, &c, Settings::default()).unwrap();
    let leaked: &'static Analysed = Box::leak(Box::new((l, c, a)));
    cache.lock().unwrap().insert(f.name, leaked);
    leaked
}

pub fn with_curve() -> impl Iterator<Item = &'static Fixture> {
    fixture_corpus().iter().filter(|f| f.curve_json.is_some())
}

pub fn small_rat(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

pub fn random_dq(rng: &mut impl Rng) -> DualQuaternion<Rational> {
    DualQuaternion::new(std::array::from_fn(|_| small_rat(rng)))
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Rational unit direction from a stereographic parameter pair.
pub fn random_direction(rng: &mut impl Rng) -> [Rational; 3] {
    let (a, b) = (small_rat(rng), small_rat(rng));
    let one = rat(1, 1);
    let den = &one + &a * &a + &b * &b;
    let two = rat(2, 1);
    [&two * &a / &den, &two * &b / &den, (&one - &a * &a - &b * &b) / &den]
}

/// Half-turn about a random rational line.
pub fn random_joint(rng: &mut impl Rng) -> JointQuaternion {
    let p = random_direction(rng);
    let x: [Rational; 3] = std::array::from_fn(|_| small_rat(rng));
    JointQuaternion::from_parts(p.clone(), cross(&x, &p)).unwrap()
}

/// A displacement: the product of two rotations `(t − h)`.
pub fn random_displacement(rng: &mut impl Rng) -> DualQuaternion<Rational> {
    let mut out = DualQuaternion::scalar(rat(1, 1));
    for _ in 0..2 {
        let h = random_joint(rng).value().clone();
        out = out * (DualQuaternion::scalar(small_rat(rng)) - h);
    }
    out
}

/// Curve points over the rational parameters `ts`, with all their branches.
pub fn sample_coords(c: &ConfigCurve, ts: &[Rational]) -> Vec<Vec<CoordValue>> {
    let mut out = Vec::new();
    for t in ts {
        for p in c.points_over(&Scalar::Rational(t.clone())).unwrap() {
            out.push(c.eval_all(&p, 8, 128).unwrap());
        }
    }
    out
}

pub fn coord_eq(a: &CoordValue, b: &CoordValue) -> bool {
    match (a, b) {
        (CoordValue::Finite(x), CoordValue::Finite(y)) => x.same_value(y),
        (CoordValue::Infinite, CoordValue::Infinite) => true,
        _ => false,
    }
}

pub fn coord_neg(a: &CoordValue) -> CoordValue {
    match a {
        CoordValue::Finite(x) => CoordValue::Finite(Scalar::int(0).checked_sub(x).unwrap()),
        CoordValue::Infinite => CoordValue::Infinite,
    }
}

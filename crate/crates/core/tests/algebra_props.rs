use bondkit::{rat, DualQuaternion, Gaussian, JointQuaternion, Displacement, QuadExt, Rational, Scalar};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod common;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=7).prop_map(|(p, q)| rat(p, q))
}

fn dq() -> impl Strategy<Value = DualQuaternion<Rational>> {
    proptest::array::uniform8(rational()).prop_map(DualQuaternion::new)
}

fn gaussian() -> impl Strategy<Value = Gaussian> {
    (rational(), rational()).prop_map(|(a, b)| Gaussian::new(a, b))
}

fn point() -> impl Strategy<Value = [Rational; 3]> {
    proptest::array::uniform3(rational())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn norm_is_multiplicative(a in dq(), b in dq()) {
        let ab = a.clone() * b.clone();
        prop_assert_eq!(ab.norm(), a.norm() * b.norm());
    }

    #[test]
    fn conjugation_reverses_products(a in dq(), b in dq()) {
        prop_assert_eq!((a.clone() * b.clone()).conj(), b.conj() * a.conj());
    }

    #[test]
    fn multiplication_is_associative(a in dq(), b in dq(), c in dq()) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a * (b * c));
    }

    #[test]
    fn norm_and_trace_are_dual_numbers(a in dq()) {
        let n = a.clone() * a.conj();
        let t = a.clone() + a.conj();
        for k in [1, 2, 3, 5, 6, 7] {
            prop_assert!(n.c[k] == rat(0, 1) && t.c[k] == rat(0, 1));
        }
        prop_assert_eq!(n.c[0].clone(), a.norm().primal);
        prop_assert_eq!(n.c[4].clone(), a.norm().dual);
    }

    #[test]
    fn point_action_is_a_group_action(seed in any::<u64>(), v in point()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_displacement(&mut rng);
        let h = common::random_displacement(&mut rng);
        let gh = g.clone() * h.clone();
        prop_assert_eq!(gh.act_on_point(&v).unwrap(), g.act_on_point(&h.act_on_point(&v).unwrap()).unwrap());
    }

    #[test]
    fn point_action_preserves_distances(seed in any::<u64>(), v in point(), w in point()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_displacement(&mut rng);
        let dist = |a: &[Rational; 3], b: &[Rational; 3]| -> Rational {
            (0..3).map(|k| (&a[k] - &b[k]) * (&a[k] - &b[k])).sum()
        };
        prop_assert_eq!(dist(&g.act_on_point(&v).unwrap(), &g.act_on_point(&w).unwrap()), dist(&v, &w));
    }

    #[test]
    fn random_joints_are_rotations(seed in any::<u64>(), t in rational()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h: JointQuaternion = common::random_joint(&mut rng);
        let v = h.value().clone();
        prop_assert_eq!(v.clone() * v.clone(), DualQuaternion::scalar(rat(-1, 1)));
        prop_assert_eq!(v.classify_displacement().unwrap(), Displacement::Rotation);
        let r = DualQuaternion::scalar(t.clone()) - v;
        let n = r.norm();
        prop_assert_eq!(n.primal, &t * &t + rat(1, 1));
        prop_assert_eq!(n.dual, rat(0, 1));
    }

    #[test]
    fn gaussian_field_laws(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a * c);
    }

    #[test]
    fn scalar_tower_laws(a in gaussian(), b in gaussian(), c in gaussian(), d in 2i64..40) {
        let ext = QuadExt::sqrt_of(Gaussian::from_ints(d, 1)).unwrap();
        let lift = |g: &Gaussian| Scalar::from_gaussian(g.clone());
        let x = Scalar::from_quad(ext).checked_mul(&lift(&a)).unwrap().checked_add(&lift(&b)).unwrap();
        let y = lift(&c);
        let z = Scalar::Rational(rat(d, 3));
        let lhs = x.checked_add(&y).unwrap().checked_add(&z).unwrap();
        let rhs = x.checked_add(&y.checked_add(&z).unwrap()).unwrap();
        prop_assert!(lhs.same_value(&rhs));
        let lhs = x.checked_mul(&y.checked_add(&z).unwrap()).unwrap();
        let rhs = x.checked_mul(&y).unwrap().checked_add(&x.checked_mul(&z).unwrap()).unwrap();
        prop_assert!(lhs.same_value(&rhs));
        let back = Scalar::from_quad(QuadExt::from_gaussian(c.clone()));
        prop_assert_eq!(back.to_gaussian(), Some(c));
    }
}

use bondkit::curve::CoordValue;
use bondkit::diagram::{build_diagram, BondDiagram};
use bondkit::linkage::TripleKind;
use bondkit::{rat, Rational};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod common;
use common::{analyse, coord_eq, coord_neg, sample_coords, with_curve};

/// Arcs at joint `i` (1-based) as `(other joint, multiplicity)`.
fn incident(d: &BondDiagram, i: usize) -> Vec<(usize, i64)> {
    d.arcs
        .iter()
        .filter_map(|a| match (a.i == i, a.j == i) {
            (true, _) => Some((a.j, a.multiplicity)),
            (_, true) => Some((a.i, a.multiplicity)),
            _ => None,
        })
        .collect()
}

/// Joint `i` is connected with multiplicity one to exactly one other joint.
fn singly_connected(d: &BondDiagram, i: usize) -> Option<usize> {
    match incident(d, i).as_slice() {
        [(j, 1)] => Some(*j),
        _ => None,
    }
}

fn random_parameters(seed: u64, count: usize) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<Rational> = (-40..=40).flat_map(|p| (1..=7).map(move |q| rat(p, q))).collect();
    pool.sort();
    pool.dedup();
    pool.shuffle(&mut rng);
    pool.truncate(count);
    pool
}

#[test]
fn short_runs_with_distance_defect_have_small_coupling_space() {
    let mut hits = 0;
    for f in with_curve() {
        let (l, _, a) = analyse(f);
        let n = l.n();
        let d = |i: usize, j: usize| a.distances[i % n][j % n];
        for i in 0..n {
            if d(i, i + 3) < d(i, i + 1) + d(i + 1, i + 2) + d(i + 2, i + 3) {
                hits += 1;
                let s = l.coupling_space(i as i64 + 2, i as i64 + 4);
                assert!(s.dim <= 6, "{}: l{:?} = {}", f.name, s.run, s.dim);
            }
        }
    }
    assert!(hits > 0);
}

#[test]
fn bonds_across_one_joint_force_special_triples() {
    let mut hits = 0;
    for f in with_curve() {
        let (l, _, a) = analyse(f);
        let n = l.n();
        for s in &a.structures {
            for i in 0..n {
                if s.k[i][(i + 2) % n] > 0 {
                    hits += 1;
                    let kind = l.diagnose_triple(i as i64 + 1).unwrap();
                    assert!(matches!(kind, TripleKind::Concurrent | TripleKind::Bennett), "{} triple {}", f.name, i + 1);
                }
            }
        }
    }
    assert!(hits > 0);
}

#[test]
fn unit_joint_length_means_single_connection() {
    for f in with_curve() {
        let (_, _, a) = analyse(f);
        let d = build_diagram(a);
        for i in 1..=a.n {
            assert_eq!(a.joint_lengths[i - 1] == 1, singly_connected(&d, i).is_some(), "{} joint {i}", f.name);
        }
    }
}

fn distinct(values: &[CoordValue]) -> bool {
    values.iter().enumerate().all(|(a, x)| values[..a].iter().all(|y| !coord_eq(x, y)))
}

#[test]
fn singly_connected_joints_parametrize_the_curve() {
    let ts = random_parameters(4, 20);
    let mut hits = 0;
    for f in with_curve() {
        let (_, c, a) = analyse(f);
        let d = build_diagram(a);
        let samples = sample_coords(c, &ts);
        for i in 1..=a.n {
            if a.joint_lengths[i - 1] != 1 || singly_connected(&d, i).is_none() {
                continue;
            }
            hits += 1;
            let vals: Vec<CoordValue> = samples.iter().map(|p| p[i - 1].clone()).collect();
            assert!(distinct(&vals), "{}: t{i} is not injective on the samples", f.name);
        }
    }
    assert!(hits > 0);
}

#[test]
fn mutually_connected_joints_agree_up_to_sign() {
    let ts = random_parameters(5, 20);
    let mut hits = 0;
    for f in with_curve() {
        let (_, c, a) = analyse(f);
        let d = build_diagram(a);
        let samples = sample_coords(c, &ts);
        for i in 1..=a.n {
            let Some(j) = singly_connected(&d, i) else { continue };
            if j < i || singly_connected(&d, j) != Some(i) {
                continue;
            }
            assert_eq!((a.joint_lengths[i - 1], a.joint_lengths[j - 1]), (1, 1));
            hits += 1;
            let same = samples.iter().all(|p| coord_eq(&p[i - 1], &p[j - 1]));
            let opposite = samples.iter().all(|p| coord_eq(&p[i - 1], &coord_neg(&p[j - 1])));
            assert!(same || opposite, "{}: t{i} = ±t{j} fails", f.name);
        }
    }
    assert!(hits > 0);
}

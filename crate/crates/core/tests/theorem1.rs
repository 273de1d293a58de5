use bondkit::fixtures::fixture_corpus;
use bondkit::linkage::{Linkage, TripleKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod common;

fn random_linkage(rng: &mut ChaCha8Rng, n: usize) -> Linkage {
    loop {
        let js = (0..n).map(|_| common::random_joint(rng)).collect();
        if let Ok(l) = Linkage::new(None, js) {
            return l;
        }
    }
}

/// Bennett condition; concurrent triples do not qualify.
fn is_bennett(l: &Linkage, i: i64) -> bool {
    l.triple_bennett(i).map(|c| c.holds).unwrap_or(false)
}

#[test]
fn pair_spaces_of_random_axes_have_dimension_four() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let l = random_linkage(&mut rng, 3);
        assert_eq!(l.coupling_space(1, 2).dim, 4);
    }
}

#[test]
fn random_triples_are_generic() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..50 {
        let l = random_linkage(&mut rng, 3);
        let kind = l.diagnose_triple(1).unwrap();
        assert_eq!(kind == TripleKind::Concurrent, l.triple_concurrent(1));
        assert_eq!(kind == TripleKind::Bennett, is_bennett(&l, 1));
    }
}

#[test]
fn reversed_runs_have_equal_dimension() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let l = random_linkage(&mut rng, 4);
        for len in 2..=4i64 {
            let fwd: Vec<i64> = (1..=len).collect();
            let rev: Vec<i64> = fwd.iter().rev().copied().collect();
            assert_eq!(l.coupling_space_of(&fwd).dim, l.coupling_space_of(&rev).dim);
        }
    }
}

#[test]
fn fixture_triples_match_geometric_predicates() {
    for f in fixture_corpus() {
        let l = f.linkage().unwrap();
        for i in 1..=l.n() as i64 {
            let kind = l.diagnose_triple(i).unwrap();
            assert_eq!(kind == TripleKind::Concurrent, l.triple_concurrent(i), "{} triple {i}", f.name);
            assert_eq!(kind == TripleKind::Bennett, is_bennett(&l, i), "{} triple {i}", f.name);
        }
    }
}

#[test]
fn coupling_dimensions_are_even() {
    for f in fixture_corpus() {
        let l = f.linkage().unwrap();
        let n = l.n() as i64;
        for i in 1..=n {
            for j in i..i + n {
                let dim = l.coupling_space(i, j).dim;
                assert_eq!(dim % 2, 0, "{}: l({i}..{j}) = {dim}", f.name);
            }
        }
    }
}

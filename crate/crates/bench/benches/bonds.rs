use bondkit::bonds::{BondAnalysis, Settings};
use bondkit::diagram::{build_diagram, verify_inversion};
use bondkit::motion::closure_check;
use bondkit::rat;
use bondkit_bench::load;
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn bond_analysis(c: &mut Criterion) {
    let mut g = c.benchmark_group("bond_analysis");
    g.sample_size(10);
    for name in ["bennett-ex1", "spherical-ex2", "planar-ex3", "goldberg-5r", "sixR-ex11"] {
        let (l, curve) = load(name);
        g.bench_function(name, |b| b.iter(|| BondAnalysis::run(black_box(&l), black_box(&curve), Settings::default()).unwrap()));
    }
    g.finish();
}

fn closure(c: &mut Criterion) {
    let (l, curve) = load("sixR-ex11");
    let samples = [rat(1, 3), rat(2, 1)];
    c.bench_function("closure_check/sixR-ex11", |b| {
        b.iter(|| closure_check(black_box(&l), black_box(&curve), &samples, 8, 256).unwrap())
    });
}

fn diagram(c: &mut Criterion) {
    let (l, curve) = load("goldberg-5r");
    let a = BondAnalysis::run(&l, &curve, Settings::default()).unwrap();
    c.bench_function("build_diagram/goldberg-5r", |b| b.iter(|| build_diagram(black_box(&a)).to_dot()));
    c.bench_function("verify_inversion/12", |b| b.iter(|| verify_inversion(black_box(12)).unwrap()));
}

criterion_group!(benches, bond_analysis, closure, diagram);
criterion_main!(benches);

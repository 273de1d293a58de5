//! Benchmark inputs drawn from the built-in fixture corpus.

use bondkit::curve::ConfigCurve;
use bondkit::fixtures::fixture;
use bondkit::linkage::Linkage;

/// Linkage and configuration curve of a built-in fixture.
pub fn load(name: &str) -> (Linkage, ConfigCurve) {
    let f = fixture(name).unwrap_or_else(|| panic!("unknown fixture {name}"));
    let l = f.linkage().expect("fixture linkage parses");
    let c = f.curve().expect("fixture has a curve").expect("fixture curve parses");
    (l, c)
}

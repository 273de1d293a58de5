//! Shared fixture analyses for unit tests.

use std::sync::OnceLock;

use crate::bonds::{BondAnalysis, Settings};
use crate::fixtures::{fixture_corpus, Fixture};
use crate::linkage::Linkage;

pub type Analysed = (Linkage, BondAnalysis);

pub fn analyse(f: &Fixture) -> &'static Analysed {
    static CACHE: OnceLock<Vec<(&'static str, Analysed)>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        fixture_corpus()
            .iter()
            .filter(|f| f.curve_json.is_some())
            .map(|f| {
                let l = f.linkage().unwrap();
                let c = f.curve().unwrap().unwrap();
                let a = BondAnalysis::run(&l, &c, Settings::default()).unwrap();
                (f.name, (l, a))
            })
            .collect()
    });
    &all.iter().find(|(n, _)| *n == f.name).expect("fixture with a curve").1
}


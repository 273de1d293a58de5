//! Built-in fixture corpus of named linkages with configuration curves.

use crate::curve::ConfigCurve;
use crate::error::Result;
use crate::linkage::Linkage;

/// A named linkage, its configuration curve if rational or hyperelliptic
/// of low genus, and the expected results as a JSON document.
#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub linkage_json: &'static str,
    pub curve_json: Option<&'static str>,
    pub expected_json: &'static str,
}

macro_rules! fixture {
    ($name:literal, $file:literal, curve) => {
        Fixture {
            name: $name,
            linkage_json: include_str!(concat!("../fixtures/", $file, ".json")),
            curve_json: Some(include_str!(concat!("../fixtures/", $file, "-curve.json"))),
            expected_json: include_str!(concat!("../fixtures/", $file, "-expected.json")),
        }
    };
    ($name:literal, $file:literal) => {
        Fixture {
            name: $name,
            linkage_json: include_str!(concat!("../fixtures/", $file, ".json")),
            curve_json: None,
            expected_json: include_str!(concat!("../fixtures/", $file, "-expected.json")),
        }
    };
}

pub const FIXTURES: &[Fixture] = &[
    fixture!("bennett-ex1", "bennett", curve),
    fixture!("spherical-ex2", "spherical", curve),
    fixture!("planar-ex3", "planar", curve),
    fixture!("sixR-ex11", "sixr-ex11", curve),
    fixture!("sixR-ex12", "sixr-ex12", curve),
    fixture!("bricard-ex13", "bricard"),
    fixture!("goldberg-5r", "goldberg", curve),
];

pub fn fixture_corpus() -> &'static [Fixture] {
    FIXTURES
}

pub fn fixture(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

impl Fixture {
    pub fn linkage(&self) -> Result<Linkage> {
        Linkage::from_json(self.linkage_json)
    }

    pub fn curve(&self) -> Option<Result<ConfigCurve>> {
        self.curve_json.map(ConfigCurve::from_json)
    }

    pub fn expected(&self) -> serde_json::Value {
        serde_json::from_str(self.expected_json).expect("fixture expectations are valid JSON")
    }
}

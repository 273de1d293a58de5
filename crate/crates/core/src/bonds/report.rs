use serde::Serialize;

use super::{BondAnalysis, HalfInt};

/// JSON bond report with a fixed key order.
#[derive(Clone, Debug, Serialize)]
pub struct BondReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linkage: Option<String>,
    pub n: usize,
    pub bonds: Vec<BondEntry>,
    pub aggregate: Aggregate,
}

#[derive(Clone, Debug, Serialize)]
pub struct BondEntry {
    /// 1-based position in the canonical bond order.
    pub index: usize,
    pub point: String,
    pub coords: Vec<String>,
    pub special: Vec<usize>,
    pub conjugate: Option<usize>,
    pub b: Vec<HalfInt>,
    #[serde(rename = "D")]
    pub d: Vec<Vec<HalfInt>>,
    #[serde(rename = "K")]
    pub k: Vec<Vec<i64>>,
    pub typical: bool,
    pub elementary: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Aggregate {
    pub b: Vec<i64>,
    #[serde(rename = "D")]
    pub d: Vec<Vec<i64>>,
    #[serde(rename = "K")]
    pub k: Vec<Vec<i64>>,
}

impl BondAnalysis {
    pub fn report(&self, linkage: Option<&str>) -> BondReport {
        let bonds = self
            .bonds
            .iter()
            .zip(&self.structures)
            .enumerate()
            .map(|(i, (b, s))| BondEntry {
                index: i + 1,
                point: b.point.to_string(),
                coords: b.coord_strings(),
                special: b.special.clone(),
                conjugate: b.conjugate.map(|c| c + 1),
                b: s.b.clone(),
                d: s.d.clone(),
                k: s.k.clone(),
                typical: s.typical,
                elementary: s.elementary,
            })
            .collect();
        BondReport {
            linkage: linkage.map(str::to_string),
            n: self.n,
            bonds,
            aggregate: Aggregate {
                b: self.joint_lengths.clone(),
                d: self.distances.clone(),
                k: self.connections.clone(),
            },
        }
    }

    /// Human-readable summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} bonds\n", self.bonds.len()));
        for (i, (b, s)) in self.bonds.iter().zip(&self.structures).enumerate() {
            out.push_str(&format!("bond {}: ({})  at {}\n", i + 1, b.coord_strings().join(", "), b.point));
            let sp: Vec<String> = b.special.iter().map(|k| k.to_string()).collect();
            out.push_str(&format!(
                "  special {{{}}}  typical {}  elementary {}",
                sp.join(", "),
                s.typical,
                s.elementary
            ));
            if let Some(c) = b.conjugate {
                out.push_str(&format!("  conjugate {}", c + 1));
            }
            out.push('\n');
            let bs: Vec<String> = s.b.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("  b = ({})\n  D =\n", bs.join(", ")));
            mat(&mut out, s.d.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect());
            out.push_str("  K =\n");
            mat(&mut out, s.k.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect());
        }
        out.push_str("aggregate\n");
        out.push_str(&self.aggregate_text());
        out
    }

    /// Aggregate `b`, `D` and `K` as text.
    pub fn aggregate_text(&self) -> String {
        let mut out = String::new();
        let bs: Vec<String> = self.joint_lengths.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("  b = ({})\n  D =\n", bs.join(", ")));
        mat(&mut out, self.distances.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect());
        out.push_str("  K =\n");
        mat(&mut out, self.connections.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect());
        out
    }

    /// Aggregate `b`, `D` and `K` as a JSON object.
    pub fn aggregate_json(&self, linkage: Option<&str>) -> serde_json::Value {
        let mut out = serde_json::Map::new();
        if let Some(name) = linkage {
            out.insert("linkage".into(), name.into());
        }
        out.insert("n".into(), self.n.into());
        out.insert("b".into(), serde_json::json!(self.joint_lengths));
        out.insert("D".into(), serde_json::json!(self.distances));
        out.insert("K".into(), serde_json::json!(self.connections));
        out.into()
    }
}

fn mat(out: &mut String, rows: Vec<Vec<String>>) {
    let w = rows.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
    for r in rows {
        let cells: Vec<String> = r.iter().map(|c| format!("{c:>w$}")).collect();
        out.push_str(&format!("    [{}]\n", cells.join(" ")));
    }
}

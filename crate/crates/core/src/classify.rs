//! Classification of closed 5R chains: non-degeneracy, coupling dimensions,
//! the joint-length pattern and the Goldberg verdict.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bonds::{BondAnalysis, Settings};
use crate::curve::ConfigCurve;
use crate::error::{Error, Result};
use crate::linkage::{Linkage, TripleKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Goldberg,
    Degenerate,
    Inconsistent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CouplingTag {
    Line,
    Conic,
    TwistedCubic,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonDegeneracy {
    pub holds: bool,
    pub reasons: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleDim {
    pub joints: [usize; 3],
    pub dim: usize,
    pub kind: Option<TripleKind>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairDegree {
    pub links: [usize; 2],
    pub degree: i64,
    pub tag: CouplingTag,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiveRReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linkage: Option<String>,
    pub non_degenerate: bool,
    pub reasons: Vec<String>,
    pub coupling_dims: Vec<TripleDim>,
    pub lemma_gt4: bool,
    pub joint_lengths: Option<Vec<i64>>,
    pub distance_matrix: Option<Vec<Vec<i64>>>,
    pub joint_length_pattern: Option<bool>,
    pub coupling_degrees: Option<Vec<PairDegree>>,
    pub verdict: Verdict,
    pub diagnostics: Vec<String>,
}

/// Neither planar nor spherical, consecutive axes distinct, and every
/// joint coordinate nonconstant along the curve.
pub fn check_nondegenerate(l: &Linkage, curve: &ConfigCurve) -> Result<NonDegeneracy> {
    if curve.n() != l.n() {
        return Err(Error::Input(format!("curve has {} coordinates, linkage has {} joints", curve.n(), l.n())));
    }
    let mut reasons = Vec::new();
    if l.all_concurrent() {
        reasons.push("spherical".to_string());
    }
    if l.all_parallel() {
        reasons.push("planar".to_string());
    }
    let n = l.n() as i64;
    for i in 1..=n {
        if l.axis(i).same_line(&l.axis(i + 1)) {
            reasons.push(format!("axes h{} and h{} coincide", i, l.slot(i + 1) + 1));
        }
    }
    let frozen: Vec<String> =
        curve.coords().iter().enumerate().filter(|(_, f)| f.is_constant()).map(|(k, _)| format!("t{}", k + 1)).collect();
    if !frozen.is_empty() {
        reasons.push(format!("constant coupling map ({} constant)", frozen.join(", ")));
    }
    Ok(NonDegeneracy { holds: reasons.is_empty(), reasons })
}

/// Dimensions `l_{i,i+1,i+2}` for every cyclic start `i`.
pub fn triple_dims(l: &Linkage) -> Vec<TripleDim> {
    (1..=l.n() as i64)
        .map(|i| {
            let s = l.coupling_space(i, i + 2);
            TripleDim {
                joints: [s.run[0], s.run[1], s.run[2]],
                dim: s.dim,
                kind: l.diagnose_triple(i).ok(),
            }
        })
        .collect()
}

/// Whether every coupling dimension of a run of `3 ≤ m < n` consecutive joints exceeds four.
pub fn check_lemma_gt4(l: &Linkage) -> bool {
    let n = l.n() as i64;
    (1..=n).all(|i| (3..n).all(|m| l.coupling_space(i, i + m - 1).dim > 4))
}

/// One joint length equal to two and the remaining four equal to one.
pub fn joint_length_pattern(b: &[i64]) -> Result<bool> {
    if b.len() != 5 {
        return Err(Error::Precondition(format!("joint-length pattern applies to 5R linkages, got n = {}", b.len())));
    }
    let mut s = b.to_vec();
    s.sort();
    Ok(s == [1, 1, 1, 1, 2])
}

/// Tags every coupling curve `C_{i,j}`, `i < j`, by its degree.
pub fn coupling_degree_typing(d: &[Vec<i64>]) -> Vec<PairDegree> {
    let n = d.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let degree = d[i][j];
            let tag = match degree {
                1 => CouplingTag::Line,
                2 => CouplingTag::Conic,
                3 => CouplingTag::TwistedCubic,
                _ => CouplingTag::Other,
            };
            out.push(PairDegree { links: [i + 1, j + 1], degree, tag });
        }
    }
    out
}

/// All 5R checks with the resulting verdict.
pub fn goldberg_verdict(l: &Linkage, curve: &ConfigCurve, s: Settings) -> Result<FiveRReport> {
    if l.n() != 5 {
        return Err(Error::Precondition(format!("classification applies to 5R linkages, got n = {}", l.n())));
    }
    let nd = check_nondegenerate(l, curve)?;
    let coupling_dims = triple_dims(l);
    let lemma_gt4 = check_lemma_gt4(l);
    let mut diagnostics = Vec::new();
    let mut report = FiveRReport {
        linkage: l.name.clone(),
        non_degenerate: nd.holds,
        reasons: nd.reasons,
        coupling_dims,
        lemma_gt4,
        joint_lengths: None,
        distance_matrix: None,
        joint_length_pattern: None,
        coupling_degrees: None,
        verdict: Verdict::Degenerate,
        diagnostics: Vec::new(),
    };
    if !report.non_degenerate {
        report.diagnostics.push("degenerate linkage; bond analysis skipped".into());
        return Ok(report);
    }
    let bennett: Vec<String> = report
        .coupling_dims
        .iter()
        .filter(|t| t.kind == Some(TripleKind::Bennett))
        .map(|t| format!("h{}, h{}, h{}", t.joints[0], t.joints[1], t.joints[2]))
        .collect();
    if !bennett.is_empty() {
        diagnostics.push(format!("Bennett triples: {}", bennett.join("; ")));
    }
    if !lemma_gt4 {
        diagnostics.push("a coupling dimension of a non-degenerate 5R linkage is at most four".into());
    }
    let a = BondAnalysis::run(l, curve, s)?;
    let pattern = joint_length_pattern(&a.joint_lengths)?;
    if !pattern {
        diagnostics.push(format!("joint lengths {:?} differ from the pattern (2, 1, 1, 1, 1)", a.joint_lengths));
    }
    let degrees = coupling_degree_typing(&a.distances);
    let other: Vec<String> = degrees
        .iter()
        .filter(|p| p.tag == CouplingTag::Other)
        .map(|p| format!("C({}, {}) has degree {}", p.links[0], p.links[1], p.degree))
        .collect();
    if !other.is_empty() {
        diagnostics.push(format!("coupling curves outside line/conic/twisted cubic: {}", other.join("; ")));
    }
    report.verdict = if lemma_gt4 && pattern && other.is_empty() { Verdict::Goldberg } else { Verdict::Inconsistent };
    report.joint_lengths = Some(a.joint_lengths.clone());
    report.distance_matrix = Some(a.distances.clone());
    report.joint_length_pattern = Some(pattern);
    report.coupling_degrees = Some(degrees);
    report.diagnostics = diagnostics;
    Ok(report)
}

impl FiveRReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let verdict = match self.verdict {
            Verdict::Goldberg => "Goldberg linkage",
            Verdict::Degenerate => "degenerate",
            Verdict::Inconsistent => "inconsistent",
        };
        let _ = writeln!(s, "verdict: {verdict}");
        let _ = writeln!(s, "non-degenerate: {}", self.non_degenerate);
        for r in &self.reasons {
            let _ = writeln!(s, "  reason: {r}");
        }
        let dims: Vec<String> = self.coupling_dims.iter().map(|t| t.dim.to_string()).collect();
        let _ = writeln!(s, "l(i,i+1,i+2): {}", dims.join(" "));
        let _ = writeln!(s, "all coupling dimensions > 4: {}", self.lemma_gt4);
        if let Some(b) = &self.joint_lengths {
            let bs: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "joint lengths: ({})", bs.join(", "));
        }
        if let Some(p) = self.joint_length_pattern {
            let _ = writeln!(s, "joint-length pattern (2,1,1,1,1): {p}");
        }
        if let Some(ds) = &self.coupling_degrees {
            for p in ds {
                let tag = match p.tag {
                    CouplingTag::Line => "line",
                    CouplingTag::Conic => "conic",
                    CouplingTag::TwistedCubic => "twisted cubic",
                    CouplingTag::Other => "other",
                };
                let _ = writeln!(s, "  C({}, {}): degree {} ({tag})", p.links[0], p.links[1], p.degree);
            }
        }
        for d in &self.diagnostics {
            let _ = writeln!(s, "note: {d}");
        }
        s
    }
}

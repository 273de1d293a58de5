//! JSON curve descriptions.

use serde::{Deserialize, Serialize};

use super::{ConfigCurve, CurveFn, CurveKind, GPoly};
use crate::error::{Error, Result};
use crate::expr;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub kind: CurveKindName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radicand: Option<String>,
    pub coords: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKindName {
    Rational,
    DoubleCover,
}

/// 1-based line and column of the first occurrence of `needle` in `src`.
pub(crate) fn locate(src: &str, needle: &str) -> (usize, usize) {
    match src.find(needle) {
        None => (1, 1),
        Some(off) => {
            let before = &src[..off];
            let line = before.matches('\n').count() + 1;
            let col = before.rsplit('\n').next().map(|l| l.chars().count()).unwrap_or(0) + 1;
            (line, col)
        }
    }
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::parse(e.line().max(1), e.column().max(1), e.to_string())
}

/// Maps an error inside the JSON string literal `lit` to file coordinates.
pub(crate) fn in_literal(src: &str, lit: &str, e: Error) -> Error {
    let quoted = serde_json::to_string(lit).unwrap_or_default();
    let (line, col) = locate(src, &quoted);
    match e {
        Error::Parse { .. } => e.offset(line, col + 1),
        Error::Input(m) | Error::UnsupportedExtension(m) => Error::parse(line, col + 1, m),
        other => other,
    }
}

impl ConfigCurve {
    pub fn from_json(src: &str) -> Result<Self> {
        let file: CurveFile = serde_json::from_str(src).map_err(json_error)?;
        let radicand = match (file.kind, &file.radicand) {
            (CurveKindName::Rational, None) => None,
            (CurveKindName::Rational, Some(r)) => {
                return Err(in_literal(src, r, Error::Input("a rational curve has no radicand".into())))
            }
            (CurveKindName::DoubleCover, None) => {
                return Err(Error::parse(1, 1, "double_cover curve needs a radicand"))
            }
            (CurveKindName::DoubleCover, Some(r)) => {
                Some(GPoly::parse_curve_poly(r).map_err(|e| in_literal(src, r, e))?)
            }
        };
        let q = radicand.clone().map(std::sync::Arc::new);
        let mut coords = Vec::with_capacity(file.coords.len());
        for s in &file.coords {
            let e = expr::parse(s).map_err(|e| in_literal(src, s, e))?;
            coords.push(CurveFn::from_expr(&e, q.clone()).map_err(|e| in_literal(src, s, e))?);
        }
        Self::new(file.name, radicand, coords, file.coords).map_err(|e| e.context("curve"))
    }

    pub fn from_strings(name: Option<&str>, radicand: Option<&str>, coords: &[&str]) -> Result<Self> {
        let file = CurveFile {
            name: name.map(str::to_string),
            kind: if radicand.is_some() { CurveKindName::DoubleCover } else { CurveKindName::Rational },
            radicand: radicand.map(str::to_string),
            coords: coords.iter().map(|s| s.to_string()).collect(),
        };
        Self::from_json(&serde_json::to_string(&file).expect("serializable"))
    }

    /// Description with coordinates in canonical emitted form.
    pub fn to_file(&self) -> CurveFile {
        CurveFile {
            name: self.name.clone(),
            kind: match self.kind() {
                CurveKind::Rational => CurveKindName::Rational,
                CurveKind::DoubleCover => CurveKindName::DoubleCover,
            },
            radicand: self.radicand().map(|q| q.to_string()),
            coords: self.coords().iter().map(|f| f.to_string()).collect(),
        }
    }
}

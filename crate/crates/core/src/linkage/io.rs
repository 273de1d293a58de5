//! JSON linkage descriptions.

use serde::{Deserialize, Serialize};

use super::Linkage;
use crate::algebra::{format_rational, DualQuaternion, JointQuaternion, Rational, Scalar};
use crate::curve::io::json_error;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JointFile {
    pub primal: [String; 4],
    pub dual: [String; 4],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkageFile {
    pub n: usize,
    pub joints: Vec<JointFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

/// Finds successive string literals in the source to report positions.
struct Cursor<'a> {
    src: &'a str,
    at: usize,
}

impl Cursor<'_> {
    fn position(&mut self, lit: &str) -> (usize, usize) {
        let quoted = serde_json::to_string(lit).unwrap_or_default();
        let off = match self.src[self.at..].find(&quoted) {
            Some(o) => self.at + o,
            None => self.src.find(&quoted).unwrap_or(0),
        };
        self.at = off + quoted.len();
        let before = &self.src[..off];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map(|l| l.chars().count()).unwrap_or(0) + 2;
        (line, col)
    }
}

fn rational_literal(s: &str, pos: (usize, usize)) -> Result<Rational> {
    let v = Scalar::parse(s).map_err(|e| e.offset(pos.0, pos.1))?;
    v.as_rational().cloned().ok_or_else(|| Error::parse(pos.0, pos.1, format!("joint coordinate {s} is not real rational")))
}

impl Linkage {
    pub fn from_json(src: &str) -> Result<Self> {
        let file: LinkageFile = serde_json::from_str(src).map_err(json_error)?;
        if file.n != file.joints.len() {
            return Err(Error::Input(format!("n = {} but {} joints given", file.n, file.joints.len())));
        }
        let mut cur = Cursor { src, at: 0 };
        let mut joints = Vec::with_capacity(file.n);
        for (k, j) in file.joints.iter().enumerate() {
            let mut c: Vec<Rational> = Vec::with_capacity(8);
            let mut first = None;
            for s in j.primal.iter().chain(&j.dual) {
                let pos = cur.position(s);
                first.get_or_insert(pos);
                c.push(rational_literal(s, pos)?);
            }
            let dq = DualQuaternion::new(c.try_into().expect("8 coordinates"));
            let (line, col) = first.unwrap_or((1, 1));
            let h = JointQuaternion::new(dq).map_err(|e| Error::parse(line, col, format!("joint h{}: {e}", k + 1)))?;
            joints.push(h);
        }
        Self::new(file.name, joints)
    }

    pub fn to_file(&self) -> LinkageFile {
        let part = |c: &[Rational]| -> [String; 4] { std::array::from_fn(|k| format_rational(&c[k])) };
        LinkageFile {
            n: self.n(),
            joints: self
                .joints()
                .iter()
                .map(|h| JointFile { primal: part(&h.value().c[..4]), dual: part(&h.value().c[4..]) })
                .collect(),
            name: self.name.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }
}

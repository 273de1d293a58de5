//! Bond diagrams: the link/joint cycle with connection arcs between joints,
//! and the reconstruction of coupling degrees from cuts.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bonds::BondAnalysis;
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::algebra::Rational;

/// Connection arcs between joints `i < j` (1-based) for one bond or one
/// conjugate bond pair.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Arc {
    pub i: usize,
    pub j: usize,
    /// Signed connection number of each bond in the group.
    pub multiplicity: i64,
    /// Number of bonds in the group (2 for a conjugate pair).
    pub bonds: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BondDiagram {
    pub n: usize,
    pub name: Option<String>,
    pub arcs: Vec<Arc>,
}

impl BondDiagram {
    pub fn new(n: usize, arcs: Vec<Arc>) -> Self {
        let mut arcs = arcs;
        arcs.sort();
        Self { n, name: None, arcs }
    }

    pub fn with_name(mut self, name: Option<&str>) -> Self {
        self.name = name.map(str::to_string);
        self
    }

    /// `(i, j, multiplicity)` per arc, one entry per drawn bundle.
    pub fn connectivity(&self) -> Vec<(usize, usize, i64)> {
        self.arcs.iter().map(|a| (a.i, a.j, a.multiplicity)).collect()
    }
}

/// One arc bundle per conjugate pair and joint pair with nonzero connection number.
pub fn build_diagram(a: &BondAnalysis) -> BondDiagram {
    let mut arcs = Vec::new();
    for (b, partner) in a.conjugate_pairs() {
        let k = &a.structures[b].k;
        let bonds = if partner.is_some() { 2 } else { 1 };
        for i in 0..a.n {
            for j in i + 1..a.n {
                if k[i][j] != 0 {
                    arcs.push(Arc { i: i + 1, j: j + 1, multiplicity: k[i][j], bonds });
                }
            }
        }
    }
    BondDiagram::new(a.n, arcs)
}

/// Whether joint `k` lies on the chain of joints `i+1, …, j` between links `o_i` and `o_j`.
fn between(n: usize, i: usize, j: usize, k: usize) -> bool {
    let off = |x: usize| (x + n - i) % n;
    off(k) >= 1 && off(k) <= off(j)
}

/// Degree of the coupling curve between links `o_i` and `o_j`: half the
/// signed number of arcs, over all bonds, crossing the cut at `o_i`, `o_j`.
pub fn degree_from_diagram(d: &BondDiagram, i: usize, j: usize) -> Result<i64> {
    let n = d.n;
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::Precondition(format!("link indices must lie in 1..={n}")));
    }
    if i == j {
        return Err(Error::Precondition("cut needs two distinct links".into()));
    }
    let (i, j) = (i % n, j % n);
    let mut twice = 0i64;
    for a in &d.arcs {
        if between(n, i, j, a.i % n) != between(n, i, j, a.j % n) {
            twice += a.multiplicity * a.bonds as i64;
        }
    }
    if twice % 2 != 0 {
        return Err(Error::Inconsistency(format!("odd crossing count {twice} at the cut o{i}, o{j}")));
    }
    Ok(twice / 2)
}

/// Full degree matrix read off the diagram.
pub fn degrees_from_diagram(d: &BondDiagram) -> Result<Vec<Vec<i64>>> {
    let n = d.n;
    let mut m = vec![vec![0; n]; n];
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                m[i - 1][j - 1] = degree_from_diagram(d, i, j)?;
            }
        }
    }
    Ok(m)
}

/// Second difference `f(D)(i,j) = D(i,j) + D(i−1,j−1) − D(i,j−1) − D(i−1,j)` off the diagonal.
pub fn second_difference(d: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = d.len();
    let p = |i: usize| (i + n - 1) % n;
    let mut k = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                k[i][j] = d[i][j] + d[p(i)][p(j)] - d[i][p(j)] - d[p(i)][j];
            }
        }
    }
    k
}

/// Cut sums `g(K)(i,j) = Σ k(a,b)` over joints `a` between links `i`, `j` and `b` outside.
pub fn cut_sums(k: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = k.len();
    let mut d = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut s = 0;
            for a in 0..n {
                for b in 0..n {
                    if between(n, i, j, a) && !between(n, i, j, b) {
                        s += k[a][b];
                    }
                }
            }
            d[i][j] = s;
        }
    }
    d
}

fn symmetric_basis(n: usize) -> Vec<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let mut m = vec![vec![0; n]; n];
            m[a][b] = 1;
            m[b][a] = 1;
            out.push(m);
        }
    }
    out
}

/// Checks `f∘g = 2·id` and `g∘f = 2·id` on symmetric zero-diagonal
/// `n × n` matrices, basis element by basis element.
pub fn verify_inversion(n: usize) -> Result<bool> {
    if n < 3 {
        return Err(Error::Precondition("a closed linkage has at least three joints".into()));
    }
    let twice = |m: &Vec<Vec<i64>>| -> Vec<Vec<i64>> { m.iter().map(|r| r.iter().map(|x| 2 * x).collect()).collect() };
    let basis = symmetric_basis(n);
    let mut images = Vec::with_capacity(basis.len());
    for e in &basis {
        if second_difference(&cut_sums(e)) != twice(e) || cut_sums(&second_difference(e)) != twice(e) {
            return Ok(false);
        }
        let rows: Vec<Rational> = second_difference(e)
            .iter()
            .enumerate()
            .flat_map(|(a, r)| r.iter().enumerate().filter(move |(b, _)| *b > a).map(|(_, &x)| Rational::from_integer(x.into())))
            .collect();
        images.push(rows);
    }
    Ok(rank(&images) == basis.len())
}

#[derive(Serialize)]
struct AdjacencyArc {
    joints: [usize; 2],
    multiplicity: i64,
    bonds: usize,
    style: &'static str,
}

#[derive(Serialize)]
struct Adjacency {
    #[serde(skip_serializing_if = "Option::is_none")]
    linkage: Option<String>,
    n: usize,
    links: Vec<String>,
    joints: Vec<String>,
    cycle: Vec<[String; 2]>,
    arcs: Vec<AdjacencyArc>,
}

fn style(m: i64) -> &'static str {
    if m < 0 {
        "dashed"
    } else {
        "solid"
    }
}

/// Cycle of link and joint vertices: `o_{k−1} – h_k – o_k`, with `o_0 = o_n`.
fn cycle_edges(n: usize) -> Vec<[String; 2]> {
    let mut e = Vec::with_capacity(2 * n);
    for k in 1..=n {
        let prev = if k == 1 { n } else { k - 1 };
        e.push([format!("o{prev}"), format!("h{k}")]);
        e.push([format!("h{k}"), format!("o{k}")]);
    }
    e
}

impl BondDiagram {
    pub fn to_json_value(&self) -> serde_json::Value {
        let adj = Adjacency {
            linkage: self.name.clone(),
            n: self.n,
            links: (1..=self.n).map(|k| format!("o{k}")).collect(),
            joints: (1..=self.n).map(|k| format!("h{k}")).collect(),
            cycle: cycle_edges(self.n),
            arcs: self
                .arcs
                .iter()
                .map(|a| AdjacencyArc { joints: [a.i, a.j], multiplicity: a.multiplicity, bonds: a.bonds, style: style(a.multiplicity) })
                .collect(),
        };
        serde_json::to_value(adj).expect("serializable")
    }

    /// Graphviz text; arcs with multiplicity `m` are drawn `|m|` times,
    /// dashed when `m < 0`.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let title = self.name.as_deref().unwrap_or("bond_diagram");
        let _ = writeln!(s, "graph {} {{", serde_json::to_string(title).expect("string"));
        let _ = writeln!(s, "  layout=circo;");
        let _ = writeln!(s, "  node [shape=circle, fontsize=10];");
        for k in 1..=self.n {
            let _ = writeln!(s, "  o{k} [label=\"o{k}\"];");
        }
        let _ = writeln!(s, "  node [shape=point, width=0.08];");
        for k in 1..=self.n {
            let _ = writeln!(s, "  h{k} [xlabel=\"h{k}\"];");
        }
        for [a, b] in cycle_edges(self.n) {
            let _ = writeln!(s, "  {a} -- {b} [penwidth=2];");
        }
        for a in &self.arcs {
            for _ in 0..a.multiplicity.unsigned_abs() {
                let _ = writeln!(s, "  h{} -- h{} [style={}, constraint=false];", a.i, a.j, style(a.multiplicity));
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("bond diagram on {} joints\n", self.n);
        if self.arcs.is_empty() {
            s.push_str("  no connections\n");
        }
        for a in &self.arcs {
            let _ = writeln!(
                s,
                "  h{} - h{}  multiplicity {}  ({} bond{})",
                a.i,
                a.j,
                a.multiplicity,
                a.bonds,
                if a.bonds == 1 { "" } else { "s" }
            );
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(i: usize, j: usize, m: i64) -> Arc {
        Arc { i, j, multiplicity: m, bonds: 2 }
    }

    fn goldberg_reference() -> BondDiagram {
        BondDiagram::new(5, vec![arc(1, 3, 1), arc(1, 4, 1), arc(2, 5, 1)])
    }

    #[test]
    fn goldberg_cut_degree() {
        assert_eq!(degree_from_diagram(&goldberg_reference(), 3, 5).unwrap(), 2);
        let d = degrees_from_diagram(&goldberg_reference()).unwrap();
        assert_eq!(d[0], vec![0, 1, 2, 3, 2]);
    }

    #[test]
    fn bennett_degrees() {
        let d = degrees_from_diagram(&BondDiagram::new(4, vec![arc(1, 3, 1), arc(2, 4, 1)])).unwrap();
        assert_eq!(d, vec![vec![0, 1, 2, 1], vec![1, 0, 1, 2], vec![2, 1, 0, 1], vec![1, 2, 1, 0]]);
    }

    #[test]
    fn inversion_on_small_cycles() {
        for n in [4, 5, 7] {
            assert!(verify_inversion(n).unwrap(), "n = {n}");
        }
        assert!(verify_inversion(2).is_err());
    }

    #[test]
    fn second_difference_recovers_arcs_from_degrees() {
        let d = degrees_from_diagram(&goldberg_reference()).unwrap();
        let k = second_difference(&d);
        assert_eq!(k[0][2], 2);
        assert_eq!(k[0][3], 2);
        assert_eq!(k[1][4], 2);
        assert_eq!(k.iter().flatten().filter(|&&x| x != 0).count(), 6);
    }

    #[test]
    fn dot_counts_and_styles() {
        let d = BondDiagram::new(4, vec![arc(1, 3, 1), arc(2, 4, -2)]);
        let dot = d.to_dot();
        assert_eq!(dot.matches("shape=circle").count(), 1);
        assert_eq!(dot.lines().filter(|l| l.contains("[label=\"o")).count(), 4);
        assert_eq!(dot.lines().filter(|l| l.contains("[xlabel=\"h")).count(), 4);
        assert_eq!(dot.matches("penwidth=2").count(), 8);
        assert_eq!(dot.matches("style=solid").count(), 1);
        assert_eq!(dot.matches("style=dashed").count(), 2);
        assert_eq!(dot, d.to_dot());
    }

    #[test]
    fn empty_diagram_is_the_cycle() {
        let d = BondDiagram::new(3, vec![]);
        assert_eq!(d.to_dot().matches("constraint=false").count(), 0);
        assert_eq!(degrees_from_diagram(&d).unwrap(), vec![vec![0; 3]; 3]);
        assert_eq!(d.to_json_value()["cycle"].as_array().unwrap().len(), 6);
    }

    #[test]
    fn negative_arcs_count_negatively() {
        let d = BondDiagram::new(4, vec![arc(1, 3, 2), arc(2, 4, -1)]);
        assert_eq!(degree_from_diagram(&d, 1, 3).unwrap(), 1);
        assert!(degree_from_diagram(&d, 1, 1).is_err());
    }

    #[test]
    fn odd_crossings_are_inconsistent() {
        let d = BondDiagram::new(4, vec![Arc { i: 1, j: 3, multiplicity: 1, bonds: 1 }]);
        assert!(matches!(degree_from_diagram(&d, 1, 3), Err(Error::Inconsistency(_))));
    }
}

//! Vertex labelings with values in `{0,1,2,3}` and the validity checkers for
//! the double Roman domination function classes.
//!
//! A labeling is checked against three conditions:
//!
//! * (a) every 0-vertex has a 3-neighbor or two 2-neighbors, and every
//!   1-vertex has a neighbor labeled at least 2;
//! * (b) every positively labeled vertex has a positively labeled neighbor;
//! * (c) no edge joins two 0-vertices.
//!
//! DRDF requires (a); TDRDF (a)+(b); OIDRDF (a)+(c); OITDRDF all three.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelingError {
    #[error("labeling has {labels} entries but the graph has {vertices} vertices")]
    LengthMismatch { labels: usize, vertices: usize },
    #[error("label {value} at vertex {vertex} is outside 0..=3")]
    LabelOutOfRange { vertex: usize, value: u8 },
    #[error("invalid labeling JSON: {0}")]
    Json(String),
    #[error("field `n` = {n} does not match {labels} labels")]
    InconsistentJson { n: usize, labels: usize },
}

/// An assignment of `{0,1,2,3}` to every vertex of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling {
    labels: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
struct LabelingWire {
    n: usize,
    labels: Vec<u8>,
}

impl Labeling {
    pub fn new(labels: Vec<u8>) -> Result<Self, LabelingError> {
        if let Some(v) = labels.iter().position(|&x| x > 3) {
            return Err(LabelingError::LabelOutOfRange {
                vertex: v,
                value: labels[v],
            });
        }
        Ok(Labeling { labels })
    }

    /// The all-`value` labeling on `n` vertices.
    pub fn constant(n: usize, value: u8) -> Self {
        assert!(value <= 3);
        Labeling {
            labels: vec![value; n],
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, v: usize) -> u8 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// Sum of all labels.
    pub fn weight(&self) -> usize {
        self.labels.iter().map(|&x| x as usize).sum()
    }

    /// Vertices labeled `value`.
    pub fn class(&self, value: u8) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.labels[v] == value).collect()
    }

    /// Serializes as `{"n": .., "labels": [..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&LabelingWire {
            n: self.len(),
            labels: self.labels.clone(),
        })
        .expect("labeling serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, LabelingError> {
        let wire: LabelingWire =
            serde_json::from_str(text).map_err(|e| LabelingError::Json(e.to_string()))?;
        if wire.n != wire.labels.len() {
            return Err(LabelingError::InconsistentJson {
                n: wire.n,
                labels: wire.labels.len(),
            });
        }
        Labeling::new(wire.labels)
    }
}

/// Which of the three defining conditions failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// Condition (a): an uncovered 0-vertex or an unsupported 1-vertex.
    Drdf,
    /// Condition (b): a positive vertex with no positive neighbor.
    Total,
    /// Condition (c): two adjacent 0-vertices.
    OuterIndependence,
}

/// Outcome of a full OITDRDF check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Violation { kind: ViolationKind, vertex: usize },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

fn ensure_len(g: &Graph, f: &Labeling) -> Result<(), LabelingError> {
    if f.len() != g.n() {
        return Err(LabelingError::LengthMismatch {
            labels: f.len(),
            vertices: g.n(),
        });
    }
    Ok(())
}

/// Smallest-index vertex violating condition (a), if any.
fn drdf_witness(g: &Graph, f: &Labeling) -> Option<usize> {
    (0..g.n()).find(|&v| match f.get(v) {
        0 => {
            let mut twos = 0;
            let mut has_three = false;
            for &u in g.neighbors(v) {
                match f.get(u) {
                    2 => twos += 1,
                    3 => has_three = true,
                    _ => {}
                }
            }
            !(has_three || twos >= 2)
        }
        1 => !g.neighbors(v).iter().any(|&u| f.get(u) >= 2),
        _ => false,
    })
}

/// Smallest-index positive vertex with no positive neighbor, if any.
fn total_witness(g: &Graph, f: &Labeling) -> Option<usize> {
    (0..g.n()).find(|&v| f.get(v) >= 1 && !g.neighbors(v).iter().any(|&u| f.get(u) >= 1))
}

/// Smallest-index 0-vertex adjacent to another 0-vertex, if any.
fn outer_independence_witness(g: &Graph, f: &Labeling) -> Option<usize> {
    (0..g.n()).find(|&v| f.get(v) == 0 && g.neighbors(v).iter().any(|&u| f.get(u) == 0))
}

/// Checks all three OITDRDF conditions, reporting the first violated
/// condition in the order (a), (b), (c) with its smallest witness vertex.
pub fn check_oitdrdf(g: &Graph, f: &Labeling) -> Result<Verdict, LabelingError> {
    check_conditions(g, f, true, true)
}

/// Verdict for condition (a) plus any subset of (b) total and (c) outer
/// independence; violated conditions are reported in that order, each with
/// its smallest witness vertex.
pub fn check_conditions(
    g: &Graph,
    f: &Labeling,
    total: bool,
    outer_independent: bool,
) -> Result<Verdict, LabelingError> {
    ensure_len(g, f)?;
    if let Some(v) = drdf_witness(g, f) {
        return Ok(Verdict::Violation {
            kind: ViolationKind::Drdf,
            vertex: v,
        });
    }
    if total {
        if let Some(v) = total_witness(g, f) {
            return Ok(Verdict::Violation {
                kind: ViolationKind::Total,
                vertex: v,
            });
        }
    }
    if outer_independent {
        if let Some(v) = outer_independence_witness(g, f) {
            return Ok(Verdict::Violation {
                kind: ViolationKind::OuterIndependence,
                vertex: v,
            });
        }
    }
    Ok(Verdict::Valid)
}

/// Condition (a) only.
pub fn check_drdf(g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
    ensure_len(g, f)?;
    Ok(drdf_witness(g, f).is_none())
}

/// Conditions (a) and (b).
pub fn check_tdrdf(g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
    ensure_len(g, f)?;
    Ok(drdf_witness(g, f).is_none() && total_witness(g, f).is_none())
}

/// Conditions (a) and (c).
pub fn check_oidrdf(g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
    ensure_len(g, f)?;
    Ok(drdf_witness(g, f).is_none() && outer_independence_witness(g, f).is_none())
}

/// Set-theoretic properties of a vertex subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetProperties {
    /// No edge inside the set.
    pub independent: bool,
    /// Every vertex outside the set has a neighbor inside.
    pub dominating: bool,
    /// Every vertex of the graph has a neighbor inside.
    pub total_dominating: bool,
    /// Total dominating, complement nonempty and independent.
    pub total_coindependent: bool,
}

/// Evaluates independence / domination / total domination /
/// total co-independence for the set `s`.
pub fn check_set_properties(g: &Graph, s: &[usize]) -> SetProperties {
    let mut in_set = vec![false; g.n()];
    for &v in s {
        in_set[v] = true;
    }
    let independent = s
        .iter()
        .all(|&v| !g.neighbors(v).iter().any(|&u| in_set[u]));
    let dominating = (0..g.n())
        .filter(|&v| !in_set[v])
        .all(|v| g.neighbors(v).iter().any(|&u| in_set[u]));
    let total_dominating = (0..g.n()).all(|v| g.neighbors(v).iter().any(|&u| in_set[u]));
    let complement: Vec<usize> = (0..g.n()).filter(|&v| !in_set[v]).collect();
    let complement_independent = complement
        .iter()
        .all(|&v| !g.neighbors(v).iter().any(|&u| !in_set[u]));
    let total_coindependent =
        total_dominating && !complement.is_empty() && complement_independent;
    SetProperties {
        independent,
        dominating,
        total_dominating,
        total_coindependent,
    }
}

/// Iterator over all `4^n` labelings of an `n`-vertex graph in
/// lexicographic order. Intended for small `n`.
pub fn all_labelings(n: usize) -> impl Iterator<Item = Labeling> {
    assert!(n <= 16, "4^n enumeration is desk-scale only");
    let total = 1u64 << (2 * n);
    (0..total).map(move |code| {
        let labels = (0..n).map(|i| ((code >> (2 * (n - 1 - i))) & 3) as u8).collect();
        Labeling { labels }
    })
}

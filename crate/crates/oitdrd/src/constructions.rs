//! Constructive upper-bound labelings: each function returns a labeling
//! that is valid by construction together with the bound it certifies.

use serde::Serialize;
use thiserror::Error;

use crate::families;
use crate::graph::Graph;
use crate::labeling::{check_oitdrdf, Labeling};
use crate::solver::{matching_number, SolveError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{construction}: parameter out of range ({reason})")]
    ParamOutOfRange {
        construction: &'static str,
        reason: &'static str,
    },
    #[error("graph must be connected")]
    NotConnected,
    #[error("matching is not a set of disjoint edges of the graph")]
    NotAMatching,
    #[error("matching has size {got}, maximum is {maximum}")]
    NotMaximumMatching { got: usize, maximum: usize },
    #[error("graph contains a triangle")]
    TriangleFound,
    #[error("minimum degree {0} is below 2")]
    MinDegreeTooSmall(usize),
    #[error("graph is not regular")]
    NotRegular,
    #[error("girth {got:?} is below 8")]
    GirthTooSmall { got: Option<usize> },
    #[error("{0} {1} is not an edge of the graph")]
    EdgeMissing(usize, usize),
    #[error("matched edge {0} {1} is forced in both orientations; the matching cannot be maximum")]
    OrientationConflict(usize, usize),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

fn param_err(construction: &'static str, reason: &'static str) -> ConstructionError {
    ConstructionError::ParamOutOfRange {
        construction,
        reason,
    }
}

/// A labeling certifying `weight <= claimed_bound` for a named construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionOutcome {
    pub labeling: Labeling,
    pub claimed_bound: usize,
    pub construction_name: &'static str,
}

#[derive(Serialize)]
struct OutcomeWire<'a> {
    n: usize,
    labels: &'a [u8],
    construction: &'static str,
    claimed_bound: usize,
}

impl ConstructionOutcome {
    fn new(labels: Vec<u8>, claimed_bound: usize, name: &'static str) -> Self {
        let labeling = Labeling::new(labels).expect("construction labels are in range");
        debug_assert_eq!(labeling.weight(), claimed_bound, "{name}");
        ConstructionOutcome {
            labeling,
            claimed_bound,
            construction_name: name,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&OutcomeWire {
            n: self.labeling.len(),
            labels: self.labeling.labels(),
            construction: self.construction_name,
            claimed_bound: self.claimed_bound,
        })
        .expect("outcome serialization cannot fail")
    }
}

/// Exact OITDRD-number of the path on `p >= 3` vertices: 6 when `p = 4`,
/// otherwise `ceil(6p/5)`.
pub fn path_value(p: usize) -> Result<usize, ConstructionError> {
    if p < 3 {
        return Err(param_err("path_value", "p >= 3"));
    }
    Ok(if p == 4 { 6 } else { (6 * p).div_ceil(5) })
}

/// Exact OITDRD-number of the cycle on `p >= 3` vertices: `ceil(6p/5)`.
pub fn cycle_value(p: usize) -> Result<usize, ConstructionError> {
    if p < 3 {
        return Err(param_err("cycle_value", "p >= 3"));
    }
    Ok((6 * p).div_ceil(5))
}

/// Minimum-weight witnesses for short paths, checked once by brute force.
const SHORT_PATHS: [&[u8]; 5] = [
    &[1, 3, 0],
    &[1, 2, 2, 1],
    &[1, 2, 0, 2, 1],
    &[1, 2, 0, 2, 1, 2],
    &[1, 2, 0, 2, 1, 1, 2],
];

/// The period-five labeling `1 2 0 2 1 | 1 2 0 2 1 | ...` with the
/// residue-dependent tail that keeps it valid and of minimal weight.
fn periodic_labels(p: usize) -> Vec<u8> {
    let mut labels = Vec::with_capacity(p);
    let blocks = p / 5;
    for _ in 0..blocks {
        labels.extend_from_slice(&[1, 2, 0, 2, 1]);
    }
    let tail: &[u8] = match p % 5 {
        0 => &[],
        1 => &[2],
        2 => &[1, 2],
        3 => &[1, 2, 1],
        _ => &[2, 0, 2, 1],
    };
    labels.truncate(p - tail.len());
    labels.extend_from_slice(tail);
    labels
}

/// A minimum-weight OITDRDF of the path on `p >= 3` vertices.
pub fn path_labeling(p: usize) -> Result<ConstructionOutcome, ConstructionError> {
    if p < 3 {
        return Err(param_err("path_labeling", "p >= 3"));
    }
    let labels = if p <= 7 {
        SHORT_PATHS[p - 3].to_vec()
    } else {
        periodic_labels(p)
    };
    Ok(ConstructionOutcome::new(labels, path_value(p)?, "path"))
}

/// Minimum-weight witnesses for short cycles, checked once by brute force.
const SHORT_CYCLES: [&[u8]; 5] = [
    &[2, 2, 0],
    &[2, 0, 2, 1],
    &[1, 2, 0, 2, 1],
    &[1, 2, 0, 2, 1, 2],
    &[1, 2, 0, 2, 1, 1, 2],
];

/// A minimum-weight OITDRDF of the cycle on `p >= 3` vertices. For
/// `p >= 8` the path labeling stays valid once the closing edge is added.
pub fn cycle_labeling(p: usize) -> Result<ConstructionOutcome, ConstructionError> {
    if p < 3 {
        return Err(param_err("cycle_labeling", "p >= 3"));
    }
    let labels = if p <= 7 {
        SHORT_CYCLES[p - 3].to_vec()
    } else {
        periodic_labels(p)
    };
    Ok(ConstructionOutcome::new(labels, cycle_value(p)?, "cycle"))
}

/// Validates that `matching` is a maximum matching of `g` and returns the
/// saturation map: `saturated[v] = Some(index of the matched edge)`.
fn validate_matching(
    g: &Graph,
    matching: &[(usize, usize)],
) -> Result<Vec<Option<usize>>, ConstructionError> {
    let mut saturated = vec![None; g.n()];
    for (i, &(u, v)) in matching.iter().enumerate() {
        if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
            return Err(ConstructionError::NotAMatching);
        }
        if saturated[u].is_some() || saturated[v].is_some() {
            return Err(ConstructionError::NotAMatching);
        }
        saturated[u] = Some(i);
        saturated[v] = Some(i);
    }
    let maximum = matching_number(g)?;
    if matching.len() != maximum {
        return Err(ConstructionError::NotMaximumMatching {
            got: matching.len(),
            maximum,
        });
    }
    Ok(saturated)
}

/// Orients every matched edge so that unsaturated vertices outside `A` see
/// only 2-ends. Returns `two_end[i]` for each matched edge.
///
/// An endpoint adjacent to an unsaturated vertex that is not adjacent to
/// the other endpoint is forced; maximality of the matching guarantees the
/// two endpoints are never both forced. Unforced edges put the 2 on the
/// smaller vertex id.
fn orient_matched_edges(
    g: &Graph,
    matching: &[(usize, usize)],
    saturated: &[Option<usize>],
) -> Result<Vec<usize>, ConstructionError> {
    let mut forced: Vec<Option<usize>> = vec![None; matching.len()];
    for y in 0..g.n() {
        if saturated[y].is_some() {
            continue;
        }
        for &x in g.neighbors(y) {
            let i = saturated[x].expect("unsaturated vertices form an independent set");
            let (u, v) = matching[i];
            let other = if x == u { v } else { u };
            if g.has_edge(y, other) {
                continue; // y sees the whole edge; either orientation serves it
            }
            match forced[i] {
                None => forced[i] = Some(x),
                Some(z) if z == x => {}
                Some(_) => return Err(ConstructionError::OrientationConflict(u, v)),
            }
        }
    }
    Ok(matching
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| forced[i].unwrap_or(u.min(v)))
        .collect())
}

/// The matching-based OITDRDF of weight exactly `n + |matching|`:
/// 2 on one endpoint of every matched edge, 1 everywhere else.
pub fn matching_labeling(
    g: &Graph,
    matching: &[(usize, usize)],
) -> Result<ConstructionOutcome, ConstructionError> {
    if g.n() < 2 || !g.is_connected() {
        return Err(ConstructionError::NotConnected);
    }
    let saturated = validate_matching(g, matching)?;
    let two_end = orient_matched_edges(g, matching, &saturated)?;
    let mut labels = vec![1u8; g.n()];
    for &x in &two_end {
        labels[x] = 2;
    }
    let outcome = ConstructionOutcome::new(labels, g.n() + matching.len(), "matching");
    debug_assert!(check_oitdrdf(g, &outcome.labeling).unwrap().is_valid());
    Ok(outcome)
}

/// The triangle-free variant of weight exactly `3 |matching|`: 2 / 1 on
/// the matched edges, 0 on the unsaturated vertices (minimum degree 2
/// guarantees each of them two 2-neighbors).
pub fn matching_labeling_triangle_free(
    g: &Graph,
    matching: &[(usize, usize)],
) -> Result<ConstructionOutcome, ConstructionError> {
    if g.n() < 2 || !g.is_connected() {
        return Err(ConstructionError::NotConnected);
    }
    if g.has_triangle() {
        return Err(ConstructionError::TriangleFound);
    }
    if g.min_degree() < 2 {
        return Err(ConstructionError::MinDegreeTooSmall(g.min_degree()));
    }
    let saturated = validate_matching(g, matching)?;
    let two_end = orient_matched_edges(g, matching, &saturated)?;
    let mut labels = vec![0u8; g.n()];
    for (i, &(u, v)) in matching.iter().enumerate() {
        let two = two_end[i];
        labels[two] = 2;
        labels[if two == u { v } else { u }] = 1;
    }
    let outcome = ConstructionOutcome::new(labels, 3 * matching.len(), "matching_triangle_free");
    debug_assert!(check_oitdrdf(g, &outcome.labeling).unwrap().is_valid());
    Ok(outcome)
}

/// Builds the corona of `base` and its tight labeling: 2 on every original
/// vertex, 1 on every pendant; weight `3 n(base)`.
pub fn corona_labeling(base: &Graph) -> Result<(Graph, ConstructionOutcome), ConstructionError> {
    if base.n() < 1 || !base.is_connected() {
        return Err(ConstructionError::NotConnected);
    }
    let host = families::corona(base);
    let mut labels = vec![2u8; base.n()];
    labels.extend(std::iter::repeat_n(1, base.n()));
    let outcome = ConstructionOutcome::new(labels, 3 * base.n(), "corona");
    debug_assert!(check_oitdrdf(&host, &outcome.labeling).unwrap().is_valid());
    Ok((host, outcome))
}

/// Weight-6 labeling of the double star `DS_{r,t}` (`t >= r >= 1`): 3 on
/// both centers, 0 on every leaf. Vertex numbering follows
/// [`families::double_star`].
pub fn double_star_labeling(
    r: usize,
    t: usize,
) -> Result<ConstructionOutcome, ConstructionError> {
    if r < 1 || t < r {
        return Err(param_err("double_star_labeling", "t >= r >= 1"));
    }
    let mut labels = vec![0u8; 2 + r + t];
    labels[0] = 3;
    labels[1] = 3;
    let outcome = ConstructionOutcome::new(labels, 6, "double_star");
    debug_assert!({
        let g = families::double_star(r, t).expect("parameters checked");
        check_oitdrdf(&g, &outcome.labeling).unwrap().is_valid()
    });
    Ok(outcome)
}

/// Weight-4 labeling of the star on `p >= 3` vertices: 3 on the center,
/// 1 on one leaf, 0 on the rest. Vertex numbering follows
/// [`families::star`].
pub fn star_labeling(p: usize) -> Result<ConstructionOutcome, ConstructionError> {
    if p < 3 {
        return Err(param_err("star_labeling", "p >= 3"));
    }
    let mut labels = vec![0u8; p];
    labels[0] = 3;
    labels[1] = 1;
    let outcome = ConstructionOutcome::new(labels, 4, "star");
    debug_assert!({
        let g = families::star(p).expect("parameters checked");
        check_oitdrdf(&g, &outcome.labeling).unwrap().is_valid()
    });
    Ok(outcome)
}

/// Distance-layer labeling of a connected `m`-regular graph of girth at
/// least 8, built from the edge `(r, r2)`; weight exactly
/// `2 (p - 2 m^2 + 3 m - 1)`.
///
/// Layers from the root edge: the roots get 2, their other neighbors 0;
/// in every branch below a 0-vertex the smallest child keeps 2 and the
/// others get 1; the grandchildren through that smallest child get 1; all
/// remaining vertices keep 2.
pub fn regular_girth8_labeling(
    g: &Graph,
    r: usize,
    r2: usize,
) -> Result<ConstructionOutcome, ConstructionError> {
    let m = g.regular_degree().ok_or(ConstructionError::NotRegular)?;
    if !g.is_connected() {
        return Err(ConstructionError::NotConnected);
    }
    let girth = g.girth();
    if girth.is_none() || girth.unwrap() < 8 {
        return Err(ConstructionError::GirthTooSmall { got: girth });
    }
    if r >= g.n() || r2 >= g.n() || !g.has_edge(r, r2) {
        return Err(ConstructionError::EdgeMissing(r, r2));
    }
    let mut labels = vec![2u8; g.n()];
    for root in [r, r2] {
        let other = if root == r { r2 } else { r };
        for &branch in g.neighbors(root) {
            if branch == other {
                continue;
            }
            labels[branch] = 0;
            let children: Vec<usize> = g
                .neighbors(branch)
                .iter()
                .copied()
                .filter(|&w| w != root)
                .collect();
            // adjacency is sorted: children[0] is the smallest id
            for &w in children.iter().skip(1) {
                labels[w] = 1;
            }
            if let Some(&first) = children.first() {
                for &far in g.neighbors(first) {
                    if far != branch {
                        labels[far] = 1;
                    }
                }
            }
        }
    }
    let claimed = 2 * (g.n() + 3 * m - 2 * m * m - 1);
    let outcome = ConstructionOutcome::new(labels, claimed, "regular_girth8");
    debug_assert!(check_oitdrdf(g, &outcome.labeling).unwrap().is_valid());
    Ok(outcome)
}

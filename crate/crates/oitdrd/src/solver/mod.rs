//! Exact solvers: branch-and-bound over labelings, subset search for the
//! classical domination parameters, and exact maximum matching.

mod branch;
mod domsets;
mod matching;

use std::time::Duration;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::Labeling;

pub use domsets::{domination_number, total_coindependent_number, total_domination_number};
pub use matching::{matching_number, maximum_matching};

/// Which labeling class is being minimized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// Outer-independent total double Roman domination.
    Oitdrd,
    /// Outer-independent double Roman domination.
    Oidrd,
    /// Total double Roman domination.
    Tdrd,
}

impl Variant {
    /// (total condition, outer independence)
    pub(crate) fn conditions(self) -> (bool, bool) {
        match self {
            Variant::Oitdrd => (true, true),
            Variant::Oidrd => (false, true),
            Variant::Tdrd => (true, false),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("exact matching search supports up to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("optimal-labeling enumeration is limited to {limit} vertices, got {n}")]
    EnumerationLimit { n: usize, limit: usize },
}

/// Options controlling a solve.
#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Abort after this long; the result then carries the best upper bound
    /// found so far and `optimal = false`.
    pub time_budget: Option<Duration>,
    /// Replace the witness with the lexicographically smallest optimal
    /// labeling (costs one extra search pass).
    pub canonical_witness: bool,
    /// Allow splitting the top of the search tree across threads.
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            time_budget: None,
            canonical_witness: false,
            parallel: true,
        }
    }
}

impl SolveOptions {
    pub fn sequential() -> Self {
        SolveOptions {
            parallel: false,
            ..Self::default()
        }
    }
}

/// Outcome of an exact minimization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Whether any valid labeling exists.
    pub feasible: bool,
    /// Minimum weight (or the best upper bound when `optimal` is false).
    pub weight: Option<usize>,
    pub witness: Option<Labeling>,
    /// Search-tree nodes explored (equals `n` for the tree solver).
    pub nodes: u64,
    pub elapsed: Duration,
    /// True when the reported weight is proven minimal (or the instance is
    /// proven infeasible); false only after a time-budget abort.
    pub optimal: bool,
}

#[derive(Serialize)]
struct SolveResultWire<'a> {
    feasible: bool,
    weight: Option<usize>,
    witness: Option<&'a [u8]>,
    nodes: u64,
    millis: u128,
    optimal: bool,
}

impl SolveResult {
    pub(crate) fn infeasible(nodes: u64, elapsed: Duration) -> Self {
        SolveResult {
            feasible: false,
            weight: None,
            witness: None,
            nodes,
            elapsed,
            optimal: true,
        }
    }

    /// Serializes as
    /// `{"feasible":..,"weight":..,"witness":..,"nodes":..,"millis":..,"optimal":..}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&SolveResultWire {
            feasible: self.feasible,
            weight: self.weight,
            witness: self.witness.as_ref().map(|w| w.labels()),
            nodes: self.nodes,
            millis: self.elapsed.as_millis(),
            optimal: self.optimal,
        })
        .expect("solve result serialization cannot fail")
    }
}

/// Exact minimum weight of an OITDRDF; infeasible iff `n = 0` or the
/// minimum degree is 0.
pub fn solve_oitdrd(g: &Graph, opts: &SolveOptions) -> SolveResult {
    branch::solve(g, Variant::Oitdrd, opts)
}

/// Exact minimum weight of an OIDRDF; feasible for every nonempty graph.
pub fn solve_oidrd(g: &Graph, opts: &SolveOptions) -> SolveResult {
    branch::solve(g, Variant::Oidrd, opts)
}

/// Exact minimum weight of a TDRDF; infeasible iff `n = 0` or the minimum
/// degree is 0.
pub fn solve_tdrd(g: &Graph, opts: &SolveOptions) -> SolveResult {
    branch::solve(g, Variant::Tdrd, opts)
}

/// Exact minimum weight for an arbitrary variant.
pub fn solve(g: &Graph, variant: Variant, opts: &SolveOptions) -> SolveResult {
    branch::solve(g, variant, opts)
}

pub(crate) const ENUMERATION_LIMIT: usize = 12;

/// All minimum-weight OITDRDFs of `g`, in lexicographic label order, each
/// exactly once. Empty when no valid labeling exists.
pub fn enumerate_optimal_oitdrdf(g: &Graph) -> Result<Vec<Labeling>, SolveError> {
    enumerate_optimal_oitdrdf_with_limit(g, ENUMERATION_LIMIT)
}

/// As [`enumerate_optimal_oitdrdf`] with an explicit vertex-count limit.
pub fn enumerate_optimal_oitdrdf_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<Vec<Labeling>, SolveError> {
    if g.n() > limit {
        return Err(SolveError::EnumerationLimit { n: g.n(), limit });
    }
    let base = branch::solve(g, Variant::Oitdrd, &SolveOptions::sequential());
    let Some(target) = base.weight else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    branch::for_each_labeling_of_weight(g, Variant::Oitdrd, target, &mut |labels| {
        out.push(Labeling::new(labels.to_vec()).expect("search labels are in range"));
        true
    });
    Ok(out)
}

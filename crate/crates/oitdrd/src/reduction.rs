//! The star-gadget construction tying OIDRD on a graph to OITDRD on a
//! host graph, plus a desk-scale verifier for the equivalence
//! `oidr(G) <= k  iff  oitdr(H) <= k + 4 n(G)`.
//!
//! The host H attaches to every vertex `x_i` a five-vertex star: center
//! `u_i` with leaves `a_i, b_i, c_i, d_i`, joined to the original graph by
//! the single edge `a_i x_i`. So `n(H) = 6 n(G)` and
//! `m(H) = m(G) + 5 n(G)`, and H stays bipartite (or chordal) whenever G
//! is.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::{check_oidrdf, Labeling, LabelingError};
use crate::solver::{solve_oidrd, solve_oitdrd, SolveOptions, SolveResult};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("gadget construction needs at least one vertex")]
    EmptyGraph,
    #[error("labeling is not a valid OIDRDF of the base graph")]
    NotAnOidrdf,
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

/// Ids of one attached star: `x` is the original vertex, `center` its star
/// center, `attach` the leaf joined to `x`, `outer` the three remaining
/// leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StarIds {
    pub x: usize,
    pub center: usize,
    pub attach: usize,
    pub outer: [usize; 3],
}

/// The host graph together with the id map of every attached star.
/// Original vertices keep their ids; the star of `x_i` occupies the block
/// `n + 5i .. n + 5i + 5` in the order center, attach, outer leaves.
#[derive(Debug, Clone)]
pub struct GadgetMap {
    pub host: Graph,
    pub stars: Vec<StarIds>,
}

#[derive(Serialize)]
struct GadgetWire<'a> {
    base_n: usize,
    base_m: usize,
    host_n: usize,
    host_m: usize,
    stars: &'a [StarIds],
}

impl GadgetMap {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GadgetWire {
            base_n: self.stars.len(),
            base_m: self.host.m() - 5 * self.stars.len(),
            host_n: self.host.n(),
            host_m: self.host.m(),
            stars: &self.stars,
        })
        .expect("gadget serialization cannot fail")
    }

    /// Removes all gadget vertices, recovering the base graph.
    pub fn restrict_to_base(&self) -> Graph {
        let n = self.stars.len();
        let edges: Vec<(usize, usize)> = self
            .host
            .edges()
            .into_iter()
            .filter(|&(u, v)| u < n && v < n)
            .collect();
        Graph::from_edges(n, &edges).expect("base edges are simple")
    }
}

/// Attaches a `K_{1,4}` star to every vertex of `g`.
pub fn build_gadget(g: &Graph) -> Result<GadgetMap, ReductionError> {
    let n = g.n();
    if n == 0 {
        return Err(ReductionError::EmptyGraph);
    }
    let mut edges = g.edges();
    let mut stars = Vec::with_capacity(n);
    for x in 0..n {
        let base = n + 5 * x;
        let (center, attach) = (base, base + 1);
        let outer = [base + 2, base + 3, base + 4];
        edges.push((x, attach));
        edges.push((center, attach));
        for o in outer {
            edges.push((center, o));
        }
        stars.push(StarIds {
            x,
            center,
            attach,
            outer,
        });
    }
    let host = Graph::from_edges(6 * n, &edges).expect("gadget edges are simple");
    debug_assert_eq!(host.m(), g.m() + 5 * n);
    Ok(GadgetMap { host, stars })
}

/// Lifts a valid OIDRDF of the base graph to an OITDRDF of the host:
/// the original labels are kept, every star center gets 3, every attach
/// leaf 1, and the outer leaves 0. The weight grows by exactly `4 n(G)`.
pub fn lift_oidrdf(
    g: &Graph,
    f: &Labeling,
    gm: &GadgetMap,
) -> Result<Labeling, ReductionError> {
    if !check_oidrdf(g, f)? {
        return Err(ReductionError::NotAnOidrdf);
    }
    let mut labels = vec![0u8; gm.host.n()];
    labels[..g.n()].copy_from_slice(f.labels());
    for star in &gm.stars {
        labels[star.center] = 3;
        labels[star.attach] = 1;
        // outer leaves stay 0: they are covered by the 3-center
    }
    Ok(Labeling::new(labels).expect("lifted labels are in range"))
}

/// Three-valued status of one solver-backed comparison.
fn le_status(result: &SolveResult, bound: usize) -> Option<bool> {
    let w = result.weight?;
    if w <= bound {
        Some(true) // an upper bound at or below `bound` is already a proof
    } else if result.optimal {
        Some(false)
    } else {
        None
    }
}

/// Outcome of checking both directions of the reduction equivalence at a
/// given threshold `k`. `None` entries mean the time budget expired before
/// that direction was decided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionVerdict {
    pub k: usize,
    pub oidr_weight: Option<usize>,
    pub host_weight: Option<usize>,
    /// `oidr(G) <= k` implies `oitdr(H) <= k + 4 n`.
    pub forward_ok: Option<bool>,
    /// `oitdr(H) <= k + 4 n` implies `oidr(G) <= k`.
    pub backward_ok: Option<bool>,
}

/// Solves both sides exactly and evaluates the two implications of the
/// reduction at threshold `k`.
pub fn verify_reduction(
    g: &Graph,
    k: usize,
    opts: &SolveOptions,
) -> Result<ReductionVerdict, ReductionError> {
    let gm = build_gadget(g)?;
    let base = solve_oidrd(g, opts);
    let host = solve_oitdrd(&gm.host, opts);
    let offset = k + 4 * g.n();

    let premise_fwd = le_status(&base, k);
    let conclusion_fwd = le_status(&host, offset);
    let implication = |premise: Option<bool>, conclusion: Option<bool>| match (premise, conclusion)
    {
        (Some(false), _) => Some(true),
        (_, Some(true)) => Some(true),
        (Some(true), Some(false)) => Some(false),
        _ => None,
    };

    Ok(ReductionVerdict {
        k,
        oidr_weight: base.optimal.then_some(base.weight).flatten(),
        host_weight: host.optimal.then_some(host.weight).flatten(),
        forward_ok: implication(premise_fwd, conclusion_fwd),
        backward_ok: implication(conclusion_fwd, premise_fwd),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::labeling::check_oitdrdf;

    fn seq() -> SolveOptions {
        SolveOptions::sequential()
    }

    #[test]
    fn gadget_size_identities() {
        for (g, n, m) in [
            (families::path(2).unwrap(), 12, 11),
            (families::path(1).unwrap(), 6, 5),
            (families::cycle(3).unwrap(), 18, 18),
        ] {
            let gm = build_gadget(&g).unwrap();
            assert_eq!(gm.host.n(), n);
            assert_eq!(gm.host.m(), m);
            assert_eq!(gm.restrict_to_base(), g);
        }
        let empty = Graph::from_edges(0, &[]).unwrap();
        assert!(matches!(build_gadget(&empty), Err(ReductionError::EmptyGraph)));
    }

    #[test]
    fn gadget_preserves_bipartiteness() {
        for g in [
            families::path(4).unwrap(),
            families::cycle(4).unwrap(),
            families::cycle(5).unwrap(), // odd cycle: not bipartite
            families::cycle(3).unwrap(),
        ] {
            let gm = build_gadget(&g).unwrap();
            assert_eq!(g.is_bipartite(), gm.host.is_bipartite());
        }
    }

    #[test]
    fn lift_validates_and_offsets_weight() {
        let p2 = families::path(2).unwrap();
        let gm = build_gadget(&p2).unwrap();
        let f = Labeling::new(vec![3, 0]).unwrap(); // weight 3 OIDRDF
        let lifted = lift_oidrdf(&p2, &f, &gm).unwrap();
        assert_eq!(lifted.weight(), 3 + 4 * 2);
        assert!(check_oitdrdf(&gm.host, &lifted).unwrap().is_valid());

        let f = Labeling::new(vec![2, 1]).unwrap(); // another valid OIDRDF
        let lifted = lift_oidrdf(&p2, &f, &gm).unwrap();
        assert_eq!(lifted.weight(), 11);
        assert!(check_oitdrdf(&gm.host, &lifted).unwrap().is_valid());

        let p3 = families::path(3).unwrap();
        let gm = build_gadget(&p3).unwrap();
        let f = Labeling::new(vec![0, 3, 0]).unwrap();
        let lifted = lift_oidrdf(&p3, &f, &gm).unwrap();
        assert_eq!(lifted.weight(), 3 + 12);
        assert!(check_oitdrdf(&gm.host, &lifted).unwrap().is_valid());
    }

    #[test]
    fn lift_rejects_invalid_oidrdf() {
        let p2 = families::path(2).unwrap();
        let gm = build_gadget(&p2).unwrap();
        let bad = Labeling::new(vec![0, 1]).unwrap();
        assert_eq!(lift_oidrdf(&p2, &bad, &gm), Err(ReductionError::NotAnOidrdf));
    }

    #[test]
    fn verify_reduction_on_tiny_graphs() {
        let p2 = families::path(2).unwrap();
        let v = verify_reduction(&p2, 3, &seq()).unwrap();
        assert_eq!(v.oidr_weight, Some(3));
        assert_eq!(v.host_weight, Some(11));
        assert_eq!((v.forward_ok, v.backward_ok), (Some(true), Some(true)));

        let v = verify_reduction(&p2, 2, &seq()).unwrap();
        assert_eq!((v.forward_ok, v.backward_ok), (Some(true), Some(true)));

        let k1 = families::path(1).unwrap();
        let v = verify_reduction(&k1, 2, &seq()).unwrap();
        assert_eq!(v.oidr_weight, Some(2));
        assert_eq!(v.host_weight, Some(6));
        assert_eq!((v.forward_ok, v.backward_ok), (Some(true), Some(true)));
    }

    #[test]
    fn exact_equality_on_one_and_two_vertex_bases() {
        for g in [families::path(1).unwrap(), families::path(2).unwrap()] {
            let gm = build_gadget(&g).unwrap();
            let base = solve_oidrd(&g, &seq()).weight.unwrap();
            let host = solve_oitdrd(&gm.host, &seq()).weight.unwrap();
            assert_eq!(host, base + 4 * g.n());
        }
    }

    #[test]
    fn gadget_json_lists_every_star() {
        let gm = build_gadget(&families::path(2).unwrap()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&gm.to_json()).unwrap();
        assert_eq!(v["host_n"], 12);
        assert_eq!(v["host_m"], 11);
        assert_eq!(v["stars"].as_array().unwrap().len(), 2);
        assert_eq!(v["stars"][1]["center"], 7);
    }
}

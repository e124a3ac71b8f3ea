//! Exact maximum matching by memoized edge branching on a vertex bitmask.
//!
//! No augmenting-path machinery: the first active vertex is either left
//! unmatched or matched to one of its active neighbors. Memoization on the
//! active set keeps this comfortably fast at desk scale (n <= 64 sparse).

use std::collections::HashMap;

use crate::graph::Graph;
use crate::solver::SolveError;

const MAX_N: usize = 64;

struct MatchingSearch<'a> {
    nbr: &'a [u64],
    memo: HashMap<u64, u32>,
}

impl MatchingSearch<'_> {
    fn size(&mut self, active: u64) -> u32 {
        let mut rest = active;
        let v = loop {
            if rest == 0 {
                return 0;
            }
            let v = rest.trailing_zeros() as usize;
            if self.nbr[v] & active != 0 {
                break v;
            }
            rest &= rest - 1; // isolated in the active subgraph
        };
        let key = rest; // isolated prefix vertices stripped
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        // v unmatched
        let mut best = self.size(rest & !(1 << v));
        // or matched to an active neighbor
        let mut candidates = self.nbr[v] & active;
        while candidates != 0 {
            let u = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            best = best.max(1 + self.size(rest & !(1 << v) & !(1 << u)));
        }
        self.memo.insert(key, best);
        best
    }
}

fn masks(g: &Graph) -> Result<Vec<u64>, SolveError> {
    if g.n() > MAX_N {
        return Err(SolveError::TooLarge { n: g.n(), max: MAX_N });
    }
    Ok((0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect())
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// The matching number: size of a largest set of pairwise disjoint edges.
pub fn matching_number(g: &Graph) -> Result<usize, SolveError> {
    let nbr = masks(g)?;
    let mut search = MatchingSearch {
        nbr: &nbr,
        memo: HashMap::new(),
    };
    Ok(search.size(full_mask(g.n())) as usize)
}

/// A maximum matching, as edge pairs `(u, v)` with `u < v`, chosen
/// deterministically: edges are taken in lexicographic order whenever
/// doing so preserves optimality.
pub fn maximum_matching(g: &Graph) -> Result<Vec<(usize, usize)>, SolveError> {
    let nbr = masks(g)?;
    let mut search = MatchingSearch {
        nbr: &nbr,
        memo: HashMap::new(),
    };
    let mut active = full_mask(g.n());
    let mut remaining = search.size(active);
    let mut matching = Vec::with_capacity(remaining as usize);
    for (u, v) in g.edges() {
        if remaining == 0 {
            break;
        }
        if active & 1 << u == 0 || active & 1 << v == 0 {
            continue;
        }
        let without = active & !(1 << u) & !(1 << v);
        if 1 + search.size(without) == search.size(active) {
            matching.push((u, v));
            active = without;
            remaining -= 1;
        }
    }
    Ok(matching)
}

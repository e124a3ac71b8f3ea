//! Exact minimum dominating / total dominating / total co-independent
//! dominating set sizes via bitmask branch-and-bound. Desk scale (n <= 64).

use crate::graph::Graph;
use crate::solver::SolveError;

const MAX_N: usize = 64;

fn check_size(g: &Graph) -> Result<(), SolveError> {
    if g.n() > MAX_N {
        return Err(SolveError::TooLarge { n: g.n(), max: MAX_N });
    }
    Ok(())
}

fn neighbor_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Minimum size of a dominating set. 0 for the empty graph.
pub fn domination_number(g: &Graph) -> Result<usize, SolveError> {
    check_size(g)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let nbr = neighbor_masks(g);
    let all = full_mask(n);
    let max_closed = (0..n).map(|v| g.degree(v) + 1).max().unwrap();
    let mut best = n;
    // some vertex of N[v] must dominate the first undominated v
    fn dfs(
        dominated: u64,
        chosen: usize,
        best: &mut usize,
        all: u64,
        nbr: &[u64],
        max_closed: usize,
    ) {
        if dominated == all {
            *best = (*best).min(chosen);
            return;
        }
        let undominated = (all & !dominated).count_ones() as usize;
        if chosen + undominated.div_ceil(max_closed) >= *best {
            return;
        }
        let v = (all & !dominated).trailing_zeros() as usize;
        let mut candidates = nbr[v] | 1 << v;
        while candidates != 0 {
            let u = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            dfs(dominated | nbr[u] | 1 << u, chosen + 1, best, all, nbr, max_closed);
        }
    }
    dfs(0, 0, &mut best, all, &nbr, max_closed);
    Ok(best)
}

/// Minimum size of a total dominating set, or `None` when the graph has an
/// isolated vertex (no such set exists).
pub fn total_domination_number(g: &Graph) -> Result<Option<usize>, SolveError> {
    check_size(g)?;
    let n = g.n();
    if n == 0 || g.min_degree() == 0 {
        return Ok(None);
    }
    let nbr = neighbor_masks(g);
    let all = full_mask(n);
    let max_deg = g.max_degree();
    let mut best = n; // S = V is total dominating once min degree >= 1
    fn dfs(
        in_set: u64,
        covered: u64,
        chosen: usize,
        best: &mut usize,
        all: u64,
        nbr: &[u64],
        max_deg: usize,
    ) {
        if covered == all {
            *best = (*best).min(chosen);
            return;
        }
        let uncovered = (all & !covered).count_ones() as usize;
        if chosen + uncovered.div_ceil(max_deg) >= *best {
            return;
        }
        let v = (all & !covered).trailing_zeros() as usize;
        let mut candidates = nbr[v] & !in_set;
        while candidates != 0 {
            let u = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            dfs(
                in_set | 1 << u,
                covered | nbr[u],
                chosen + 1,
                best,
                all,
                nbr,
                max_deg,
            );
        }
    }
    dfs(0, 0, 0, &mut best, all, &nbr, max_deg);
    Ok(Some(best))
}

struct TcoiCtx<'a> {
    all: u64,
    nbr: &'a [u64],
    max_deg: usize,
    n: usize,
}

/// Minimum size of a total co-independent dominating set (total dominating
/// set whose complement is nonempty and independent), or `None` when no
/// such set exists, as on complete graphs or the single edge.
pub fn total_coindependent_number(g: &Graph) -> Result<Option<usize>, SolveError> {
    check_size(g)?;
    let n = g.n();
    if n == 0 || g.min_degree() == 0 {
        return Ok(None);
    }
    let nbr = neighbor_masks(g);
    let ctx = TcoiCtx {
        all: full_mask(n),
        nbr: &nbr,
        max_deg: g.max_degree(),
        n,
    };
    // seed: V minus one vertex is feasible whenever that vertex has no
    // pendant neighbor
    let mut best: Option<usize> = (0..n)
        .find(|&v| g.neighbors(v).iter().all(|&u| g.degree(u) >= 2))
        .map(|_| n - 1);
    tcoi_dfs(0, 0, 0, &mut best, &ctx);
    Ok(best)
}

/// Admissible lower bound on the vertices still to add: uncovered
/// vertices each consume at most `max_deg` of a new vertex's coverage, and
/// pairwise disjoint uncovered edges need one distinct endpoint each.
fn tcoi_lower_bound(in_set: u64, covered: u64, ctx: &TcoiCtx) -> usize {
    let uncovered = (ctx.all & !covered).count_ones() as usize;
    let degree_bound = uncovered.div_ceil(ctx.max_deg);
    let mut blocked = in_set; // endpoints already usable or consumed
    let mut disjoint = 0;
    let mut rest = ctx.all & !in_set;
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let free = ctx.nbr[x] & !blocked & !(1 << x);
        if free != 0 && blocked & 1 << x == 0 {
            let y = free.trailing_zeros();
            blocked |= 1 << x | 1 << y;
            disjoint += 1;
        }
    }
    degree_bound.max(disjoint)
}

/// Grows S until every vertex has a neighbor in S (total domination) and
/// every edge has an endpoint in S (complement independence); S must stay
/// a proper subset of V.
fn tcoi_dfs(in_set: u64, covered: u64, chosen: usize, best: &mut Option<usize>, ctx: &TcoiCtx) {
    if chosen + tcoi_lower_bound(in_set, covered, ctx) >= best.unwrap_or(ctx.n) {
        return;
    }
    if covered != ctx.all {
        // branch on the uncovered vertex with the fewest candidate
        // dominators
        let mut pick = usize::MAX;
        let mut pick_candidates = u64::MAX;
        let mut rest = ctx.all & !covered;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let candidates = ctx.nbr[v] & !in_set;
            if (candidates.count_ones(), v) < (pick_candidates.count_ones(), pick) {
                pick = v;
                pick_candidates = candidates;
            }
        }
        let mut candidates = pick_candidates;
        while candidates != 0 {
            let u = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            tcoi_dfs(in_set | 1 << u, covered | ctx.nbr[u], chosen + 1, best, ctx);
        }
        return;
    }
    // total domination done; repair the independence of the complement
    let mut uncovered_edge = None;
    let mut rest = ctx.all & !in_set;
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let other = ctx.nbr[x] & !in_set & !((1 << x) - 1) & !(1 << x);
        if other != 0 {
            uncovered_edge = Some((x, other.trailing_zeros() as usize));
            break;
        }
    }
    match uncovered_edge {
        Some((x, y)) => {
            for u in [x, y] {
                tcoi_dfs(in_set | 1 << u, covered, chosen + 1, best, ctx);
            }
        }
        None => {
            if in_set != ctx.all {
                *best = Some(chosen);
            }
        }
    }
}

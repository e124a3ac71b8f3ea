//! Branch-and-bound search over `{0,1,2,3}` labelings.
//!
//! Vertices are branched in descending degree order, labels are tried in
//! the order 0, 2, 3, 1. Partial assignments maintain per-vertex counters
//! so that every definitional constraint is rejected as soon as it becomes
//! unsatisfiable, and a complete assignment is valid by construction.
//!
//! The admissible lower bound used for pruning is the assigned weight plus
//! the number of unassigned vertices already forced positive, either by an
//! assigned 0-neighbor (outer independence) or by being the last possible
//! provider of a 1-neighbor's required `>= 2` label.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use crate::graph::Graph;
use crate::labeling::Labeling;
use crate::solver::{SolveOptions, SolveResult, Variant};

const UNASSIGNED: u8 = 4;
const LABEL_ORDER: [u8; 4] = [0, 2, 3, 1];

/// Per-thread outcome: best (weight, witness) found, and a timeout flag.
type BranchOutcome = (Option<(usize, Vec<u8>)>, bool);
/// Below this size, the parallel option is ignored; thread setup would
/// dominate the search.
const PARALLEL_THRESHOLD: usize = 14;
const BUDGET_CHECK_MASK: u64 = 0xFFF;

pub(crate) fn solve(g: &Graph, variant: Variant, opts: &SolveOptions) -> SolveResult {
    let start = Instant::now();
    let n = g.n();
    let (total, _oi) = variant.conditions();
    if n == 0 || (total && g.min_degree() == 0) {
        return SolveResult::infeasible(0, start.elapsed());
    }
    // the all-2 labeling is valid for every variant handled here
    let seed_witness = vec![2u8; n];
    let seed_weight = 2 * n;

    let incumbent = AtomicUsize::new(seed_weight);
    let nodes = AtomicU64::new(0);
    let deadline = opts.time_budget.map(|b| start + b);
    let order = branch_order(g);

    let mut found: Vec<(usize, Vec<u8>)> = Vec::new();
    let mut timed_out = false;

    if opts.parallel && n >= PARALLEL_THRESHOLD {
        let results: Vec<BranchOutcome> = std::thread::scope(|scope| {
            let handles: Vec<_> = LABEL_ORDER
                .iter()
                .map(|&c| {
                    let order = &order;
                    let incumbent = &incumbent;
                    let nodes = &nodes;
                    scope.spawn(move || {
                        let mut search = Search::new(g, variant, order, incumbent, deadline);
                        search.nodes += 1;
                        if search.assign(order[0], c) {
                            search.dfs(1);
                        }
                        nodes.fetch_add(search.nodes, Ordering::Relaxed);
                        (search.best.take(), search.timed_out)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for (best, thread_timed_out) in results {
            timed_out |= thread_timed_out;
            if let Some(b) = best {
                found.push(b);
            }
        }
    } else {
        let mut search = Search::new(g, variant, &order, &incumbent, deadline);
        search.dfs(0);
        nodes.store(search.nodes, Ordering::Relaxed);
        timed_out = search.timed_out;
        if let Some(b) = search.best.take() {
            found.push(b);
        }
    }

    let best_weight = incumbent.load(Ordering::SeqCst);
    // first thread (in label order) that achieved the final weight wins;
    // fall back to the all-2 seed when no improvement was found
    let witness = found
        .into_iter()
        .find(|(w, _)| *w == best_weight)
        .map(|(_, wit)| wit)
        .unwrap_or(seed_witness);

    let mut result = SolveResult {
        feasible: true,
        weight: Some(best_weight),
        witness: Some(Labeling::new(witness).expect("search labels are in range")),
        nodes: nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
        optimal: !timed_out,
    };

    if opts.canonical_witness && result.optimal {
        let mut canonical = None;
        for_each_labeling_of_weight(g, variant, best_weight, &mut |labels| {
            canonical = Some(labels.to_vec());
            false // first hit in lexicographic order is the canonical one
        });
        if let Some(wit) = canonical {
            result.witness = Some(Labeling::new(wit).expect("search labels are in range"));
        }
        result.elapsed = start.elapsed();
    }
    result
}

/// Runs `visit` on every valid labeling of weight exactly `target`, in
/// lexicographic order; `visit` returns false to stop early.
///
/// Used for canonical witnesses and for enumerating all optima (when
/// `target` is the minimum weight, completions of exactly that weight are
/// precisely the optimal labelings).
pub(crate) fn for_each_labeling_of_weight(
    g: &Graph,
    variant: Variant,
    target: usize,
    visit: &mut dyn FnMut(&[u8]) -> bool,
) {
    let n = g.n();
    let (total, _) = variant.conditions();
    if n == 0 || (total && g.min_degree() == 0) {
        return;
    }
    let order: Vec<usize> = (0..n).collect();
    let incumbent = AtomicUsize::new(usize::MAX);
    let mut search = Search::new(g, variant, &order, &incumbent, None);
    search.enumerate(0, target, &mut |labels| visit(labels));
}

/// Descending degree, ties by vertex index.
fn branch_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

struct Search<'a> {
    g: &'a Graph,
    total: bool,
    oi: bool,
    order: &'a [usize],
    incumbent: &'a AtomicUsize,
    deadline: Option<Instant>,
    timed_out: bool,

    label: Vec<u8>,
    unassigned_nbrs: Vec<u32>,
    zeros: Vec<u32>,
    twos: Vec<u32>,
    threes: Vec<u32>,
    positives: Vec<u32>,

    // forcing bookkeeping for the admissible lower bound
    forced_sources: Vec<u32>,
    forced_unassigned: usize,
    trail: Vec<usize>, // vertices whose forced_sources was incremented, per assign

    weight: usize,
    nodes: u64,
    best: Option<(usize, Vec<u8>)>,
}

impl<'a> Search<'a> {
    fn new(
        g: &'a Graph,
        variant: Variant,
        order: &'a [usize],
        incumbent: &'a AtomicUsize,
        deadline: Option<Instant>,
    ) -> Self {
        let n = g.n();
        let (total, oi) = variant.conditions();
        Search {
            g,
            total,
            oi,
            order,
            incumbent,
            deadline,
            timed_out: false,
            label: vec![UNASSIGNED; n],
            unassigned_nbrs: (0..n).map(|v| g.degree(v) as u32).collect(),
            zeros: vec![0; n],
            twos: vec![0; n],
            threes: vec![0; n],
            positives: vec![0; n],
            forced_sources: vec![0; n],
            forced_unassigned: 0,
            trail: Vec::new(),
            weight: 0,
            nodes: 0,
            best: None,
        }
    }

    /// Coverage of a 0-vertex is still achievable.
    fn zero_coverable(&self, v: usize) -> bool {
        self.threes[v] >= 1 || self.twos[v] >= 2 || self.unassigned_nbrs[v] >= 1
    }

    /// Constraints of the (assigned) vertex `v` are still satisfiable.
    fn satisfiable(&self, v: usize) -> bool {
        match self.label[v] {
            0 => self.zero_coverable(v),
            1 => {
                (self.twos[v] + self.threes[v] >= 1 || self.unassigned_nbrs[v] >= 1)
                    && (!self.total || self.positives[v] >= 1 || self.unassigned_nbrs[v] >= 1)
            }
            _ => !self.total || self.positives[v] >= 1 || self.unassigned_nbrs[v] >= 1,
        }
    }

    fn force(&mut self, w: usize) {
        self.forced_sources[w] += 1;
        if self.forced_sources[w] == 1 && self.label[w] == UNASSIGNED {
            self.forced_unassigned += 1;
        }
        self.trail.push(w);
    }

    /// Registers forcing from a 1-labeled `u` whose last unassigned
    /// neighbor must now supply its `>= 2` support.
    fn maybe_force_from_one(&mut self, u: usize) {
        if self.label[u] == 1
            && self.twos[u] + self.threes[u] == 0
            && self.unassigned_nbrs[u] == 1
        {
            let w = *self
                .g
                .neighbors(u)
                .iter()
                .find(|&&w| self.label[w] == UNASSIGNED)
                .expect("counter says one unassigned neighbor");
            self.force(w);
        }
    }

    /// Tries to give `v` the label `c`. On success all counters are
    /// updated and every affected constraint is still satisfiable; on
    /// failure the state is unchanged.
    fn assign(&mut self, v: usize, c: u8) -> bool {
        debug_assert_eq!(self.label[v], UNASSIGNED);
        match c {
            0 => {
                if self.oi && self.zeros[v] > 0 {
                    return false;
                }
                if !self.zero_coverable(v) {
                    return false;
                }
            }
            1 => {
                if self.twos[v] + self.threes[v] == 0 && self.unassigned_nbrs[v] == 0 {
                    return false;
                }
                if self.total && self.positives[v] == 0 && self.unassigned_nbrs[v] == 0 {
                    return false;
                }
            }
            _ => {
                if self.total && self.positives[v] == 0 && self.unassigned_nbrs[v] == 0 {
                    return false;
                }
            }
        }

        let trail_mark = self.trail.len();
        self.commit(v, c);

        let mut ok = true;
        for &u in self.g.neighbors(v) {
            if self.label[u] != UNASSIGNED && !self.satisfiable(u) {
                ok = false;
                break;
            }
        }
        if ok {
            // forcing source B: v itself, or a neighbor, may now be a
            // 1-vertex with a single remaining provider
            self.maybe_force_from_one(v);
            for &u in self.g.neighbors(v) {
                if self.label[u] != UNASSIGNED {
                    self.maybe_force_from_one(u);
                }
            }
            true
        } else {
            self.rollback(v, c, trail_mark);
            false
        }
    }

    fn commit(&mut self, v: usize, c: u8) {
        self.label[v] = c;
        self.weight += c as usize;
        if self.forced_sources[v] > 0 {
            self.forced_unassigned -= 1;
        }
        for i in 0..self.g.neighbors(v).len() {
            let u = self.g.neighbors(v)[i];
            self.unassigned_nbrs[u] -= 1;
            match c {
                0 => {
                    self.zeros[u] += 1;
                    // forcing source A: a 0-neighbor pins u positive
                    if self.oi && self.zeros[u] == 1 && self.label[u] == UNASSIGNED {
                        self.force(u);
                    }
                }
                1 => self.positives[u] += 1,
                2 => {
                    self.positives[u] += 1;
                    self.twos[u] += 1;
                }
                _ => {
                    self.positives[u] += 1;
                    self.threes[u] += 1;
                }
            }
        }
    }

    fn rollback(&mut self, v: usize, c: u8, trail_mark: usize) {
        while self.trail.len() > trail_mark {
            let w = self.trail.pop().unwrap();
            self.forced_sources[w] -= 1;
            if self.forced_sources[w] == 0 && self.label[w] == UNASSIGNED {
                self.forced_unassigned -= 1;
            }
        }
        for &u in self.g.neighbors(v) {
            self.unassigned_nbrs[u] += 1;
            match c {
                0 => self.zeros[u] -= 1,
                1 => self.positives[u] -= 1,
                2 => {
                    self.positives[u] -= 1;
                    self.twos[u] -= 1;
                }
                _ => {
                    self.positives[u] -= 1;
                    self.threes[u] -= 1;
                }
            }
        }
        self.label[v] = UNASSIGNED;
        self.weight -= c as usize;
        if self.forced_sources[v] > 0 {
            self.forced_unassigned += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: u8, trail_mark: usize) {
        self.rollback(v, c, trail_mark);
    }

    fn over_budget(&mut self) -> bool {
        if self.timed_out {
            return true;
        }
        if let Some(deadline) = self.deadline {
            if self.nodes & BUDGET_CHECK_MASK == 0 && Instant::now() >= deadline {
                self.timed_out = true;
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, depth: usize) {
        if depth == self.order.len() {
            // complete and valid by construction
            let w = self.weight;
            if self.incumbent.fetch_min(w, Ordering::SeqCst) > w {
                self.best = Some((w, self.label.clone()));
            }
            return;
        }
        let v = self.order[depth];
        for c in LABEL_ORDER {
            if self.over_budget() {
                return;
            }
            self.nodes += 1;
            let trail_mark = self.trail.len();
            if self.assign(v, c) {
                if self.weight + self.forced_unassigned
                    < self.incumbent.load(Ordering::Relaxed)
                {
                    self.dfs(depth + 1);
                }
                self.unassign(v, c, trail_mark);
            }
        }
    }

    /// Depth-first over vertex-index order with labels ascending, visiting
    /// complete valid labelings of weight exactly `target`. Returns false
    /// when the visitor asked to stop.
    fn enumerate(
        &mut self,
        depth: usize,
        target: usize,
        visit: &mut dyn FnMut(&[u8]) -> bool,
    ) -> bool {
        if depth == self.order.len() {
            if self.weight == target {
                return visit(&self.label);
            }
            return true;
        }
        let v = self.order[depth];
        for c in 0..=3u8 {
            let trail_mark = self.trail.len();
            if self.assign(v, c) {
                let keep_going = if self.weight + self.forced_unassigned <= target {
                    self.enumerate(depth + 1, target, visit)
                } else {
                    true
                };
                self.unassign(v, c, trail_mark);
                if !keep_going {
                    return false;
                }
            }
        }
        true
    }
}

//! Exact linear-time minimum-weight OITDRDF computation on trees by
//! bottom-up dynamic programming.
//!
//! Each vertex carries one cost per (label, residual-need) state, where the
//! residual need records what the vertex still requires from its parent:
//!
//! * label 0 has buckets 0 (no 2- or 3-child yet, parent must be 3),
//!   1 (exactly one 2-child, parent must be 2 or 3), and
//!   2 (covered by children, parent need only be positive);
//! * label 1 has buckets 0 (no child labeled `>= 2`, parent must be
//!   `>= 2`) and 1 (supported, no residual need);
//! * labels 2 and 3 have buckets 0 (no positive child, parent must be
//!   positive) and 1 (has a positive child, no residual need).
//!
//! A 0-labeled vertex never admits a 0-labeled child, which enforces outer
//! independence along every tree edge. Children are folded one at a time,
//! so combination cost is order-independent; witness reconstruction breaks
//! ties toward smaller labels. All traversals use explicit stacks/queues,
//! so million-vertex paths do not overflow the call stack.

use std::collections::VecDeque;
use std::time::Instant;

use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::Labeling;
use crate::solver::SolveResult;

const INF: u32 = 1_000_000_000;
const NO_PARENT: usize = usize::MAX;

type Table = [[u32; 3]; 4];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeDpError {
    #[error("input is not a tree (need connected with m = n - 1)")]
    NotATree,
    #[error("root {root} out of range for {n} vertices")]
    RootOutOfRange { root: usize, n: usize },
}

/// Exact minimum OITDRDF weight of the tree `t`, rooted at `root` for the
/// traversal (the weight does not depend on the choice). Single-vertex
/// trees are infeasible. Runs in O(n).
pub fn solve_tree(t: &Graph, root: usize) -> Result<SolveResult, TreeDpError> {
    let start = Instant::now();
    let n = t.n();
    if root >= n.max(1) {
        return Err(TreeDpError::RootOutOfRange { root, n });
    }
    if !t.is_tree() {
        return Err(TreeDpError::NotATree);
    }
    if n <= 1 {
        return Ok(SolveResult::infeasible(n as u64, start.elapsed()));
    }

    // BFS order guarantees parents precede children.
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![NO_PARENT; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &u in t.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }

    // Upward pass: fold children into each vertex in reverse BFS order.
    let mut table: Vec<Table> = vec![empty_table(); n];
    for &v in order.iter().rev() {
        let mut acc = init_table();
        for &c in t.neighbors(v) {
            if parent[c] == v {
                fold_child(&mut acc, &table[c]);
            }
        }
        table[v] = acc;
    }

    let root_costs: [u32; 4] = std::array::from_fn(|label| table[root][label][done_bucket(label as u8)]);
    let best = *root_costs.iter().min().unwrap();
    debug_assert!(best < INF, "every tree with n >= 2 admits the all-2 labeling");
    let root_label = root_costs.iter().position(|&c| c == best).unwrap() as u8;

    // Downward pass: materialize one optimal labeling via the stored
    // tables, re-folding each vertex's children to recover the choices.
    let mut labels = vec![0u8; n];
    let mut stack = vec![(root, root_label, done_bucket(root_label))];
    while let Some((v, label, bucket)) = stack.pop() {
        labels[v] = label;
        let children: Vec<usize> = t
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&c| parent[c] == v)
            .collect();
        if children.is_empty() {
            continue;
        }
        // prefix costs over this vertex's fixed label
        let mut prefix: Vec<[u32; 3]> = Vec::with_capacity(children.len() + 1);
        let mut acc = init_row(label);
        prefix.push(acc);
        for &c in &children {
            acc = fold_row(&acc, &table[c], label);
            prefix.push(acc);
        }
        let mut bucket_now = bucket;
        for (i, &c) in children.iter().enumerate().rev() {
            let (child_state, bucket_prev) =
                unfold_step(&prefix[i], &table[c], label, bucket_now, prefix[i + 1][bucket_now]);
            stack.push((c, child_state.0, child_state.1));
            bucket_now = bucket_prev;
        }
    }

    let witness = Labeling::new(labels).expect("DP labels are in range");
    debug_assert!(crate::labeling::check_oitdrdf(t, &witness)
        .expect("length matches")
        .is_valid());
    Ok(SolveResult {
        feasible: true,
        weight: Some(best as usize),
        witness: Some(witness),
        nodes: n as u64,
        elapsed: start.elapsed(),
        optimal: true,
    })
}

fn empty_table() -> Table {
    [[INF; 3]; 4]
}

/// State costs of a vertex before any child is folded in.
fn init_table() -> Table {
    let mut t = empty_table();
    for (label, row) in t.iter_mut().enumerate() {
        row[0] = label as u32;
    }
    t
}

fn init_row(label: u8) -> [u32; 3] {
    let mut row = [INF; 3];
    row[0] = label as u32;
    row
}

/// Bucket meaning "no residual need toward the parent" for each label.
fn done_bucket(label: u8) -> usize {
    if label == 0 {
        2
    } else {
        1
    }
}

/// Minimum child cost per child label, over the need-states a parent
/// labeled `lp` can discharge.
fn child_class_costs(child: &Table, lp: u8) -> [u32; 4] {
    let zero = match lp {
        0 => INF, // outer independence: no 0-child under a 0-parent
        1 => child[0][2],
        2 => child[0][2].min(child[0][1]),
        _ => child[0][2].min(child[0][1]).min(child[0][0]),
    };
    let pick = |t: &[u32; 3], parent_discharges: bool| {
        if parent_discharges {
            t[0].min(t[1])
        } else {
            t[1]
        }
    };
    let one = pick(&child[1], lp >= 2);
    let two = pick(&child[2], lp >= 1);
    let three = pick(&child[3], lp >= 1);
    [zero, one, two, three]
}

/// Parent bucket after absorbing a child with the given label.
fn bucket_after(lp: u8, b: usize, child_label: u8) -> usize {
    match lp {
        0 => match child_label {
            2 => (b + 1).min(2),
            3 => 2,
            _ => b,
        },
        1 => {
            if child_label >= 2 {
                1
            } else {
                b
            }
        }
        _ => {
            if child_label >= 1 {
                1
            } else {
                b
            }
        }
    }
}

fn fold_row(acc: &[u32; 3], child: &Table, lp: u8) -> [u32; 3] {
    let class_costs = child_class_costs(child, lp);
    let mut new = [INF; 3];
    for (b, &cost) in acc.iter().enumerate() {
        if cost >= INF {
            continue;
        }
        for (class, &ccost) in class_costs.iter().enumerate() {
            if ccost >= INF {
                continue;
            }
            let nb = bucket_after(lp, b, class as u8);
            new[nb] = new[nb].min(cost + ccost);
        }
    }
    new
}

fn fold_child(acc: &mut Table, child: &Table) {
    for lp in 0..4u8 {
        acc[lp as usize] = fold_row(&acc[lp as usize], child, lp);
    }
}

/// Is (child label, child bucket) dischargeable by a parent labeled `lp`?
fn state_allowed(lp: u8, child_label: u8, child_bucket: usize) -> bool {
    match child_label {
        0 => match child_bucket {
            2 => lp >= 1,
            1 => lp >= 2,
            0 => lp == 3,
            _ => false,
        },
        1 => match child_bucket {
            1 => true,
            0 => lp >= 2,
            _ => false,
        },
        _ => match child_bucket {
            1 => true,
            0 => lp >= 1,
            _ => false,
        },
    }
}

/// Recovers one child's (label, bucket) and the preceding prefix bucket
/// for a fold step that ended in `bucket_now` with cost `target`. Ties
/// break toward the smaller child label.
fn unfold_step(
    prefix_before: &[u32; 3],
    child: &Table,
    lp: u8,
    bucket_now: usize,
    target: u32,
) -> ((u8, usize), usize) {
    for child_label in 0..4u8 {
        for (child_bucket, &ccost) in child[child_label as usize].iter().enumerate() {
            if !state_allowed(lp, child_label, child_bucket) || ccost >= INF {
                continue;
            }
            for (b_prev, &pcost) in prefix_before.iter().enumerate() {
                if pcost >= INF {
                    continue;
                }
                if bucket_after(lp, b_prev, child_label) == bucket_now && pcost + ccost == target {
                    return ((child_label, child_bucket), b_prev);
                }
            }
        }
    }
    unreachable!("forward fold guarantees a consistent reconstruction step")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::labeling::check_oitdrdf;
    use crate::solver::{solve_oitdrd, SolveOptions};

    fn dp_weight(t: &Graph) -> usize {
        solve_tree(t, 0).unwrap().weight.unwrap()
    }

    #[test]
    fn leaf_state_table_matches_definitions() {
        // a childless vertex owes everything to its parent
        let t = init_table();
        assert_eq!(t[0][0], 0); // label 0: parent must be 3
        assert_eq!(t[1][0], 1); // label 1: parent must be >= 2
        assert_eq!(t[2][0], 2); // label 2: parent must be positive
        assert_eq!(t[3][0], 3);
        assert!(t[0][1] >= INF && t[0][2] >= INF && t[1][1] >= INF);
    }

    #[test]
    fn two_vertex_path() {
        let p2 = families::path(2).unwrap();
        let res = solve_tree(&p2, 0).unwrap();
        assert_eq!(res.weight, Some(3));
        assert_eq!(res.nodes, 2);
    }

    #[test]
    fn known_small_values() {
        assert_eq!(dp_weight(&families::path(7).unwrap()), 9);
        let cor_p3 = families::corona(&families::path(3).unwrap());
        assert_eq!(dp_weight(&cor_p3), 9); // 3p/2 with p = 6
        assert_eq!(dp_weight(&families::star(5).unwrap()), 4);
    }

    #[test]
    fn star_witness_puts_three_on_the_center() {
        // optimum on a star: 3 at the center, 1 on one leaf, 0 on the rest
        let star = families::star(5).unwrap();
        let res = solve_tree(&star, 0).unwrap();
        let w = res.witness.unwrap();
        assert_eq!(w.get(0), 3);
        assert_eq!(w.labels()[1..].iter().filter(|&&x| x == 1).count(), 1);
        assert_eq!(w.labels()[1..].iter().filter(|&&x| x == 0).count(), 3);
    }

    #[test]
    fn witness_is_valid_and_matches_weight() {
        for seed in 0..30 {
            let t = families::random_tree(17, seed).unwrap();
            let res = solve_tree(&t, 0).unwrap();
            let w = res.witness.unwrap();
            assert!(check_oitdrdf(&t, &w).unwrap().is_valid(), "seed {seed}");
            assert_eq!(w.weight(), res.weight.unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn agrees_with_branch_and_bound_on_small_trees() {
        let opts = SolveOptions::sequential();
        for n in 2..=9 {
            for t in families::all_trees(n).unwrap() {
                let dp = dp_weight(&t);
                let bb = solve_oitdrd(&t, &opts).weight.unwrap();
                assert_eq!(dp, bb, "tree n={n} {:?}", t.edges());
            }
        }
    }

    #[test]
    fn agrees_with_branch_and_bound_beyond_the_enumeration_range() {
        // two independent exact routes on trees too large for 4^n scans
        let opts = SolveOptions::default();
        for n in 11..=16 {
            for seed in 0..8u64 {
                let t = families::random_tree(n, 100 * n as u64 + seed).unwrap();
                let dp = dp_weight(&t);
                let bb = solve_oitdrd(&t, &opts).weight.unwrap();
                assert_eq!(dp, bb, "tree n={n} seed={seed}");
            }
        }
    }

    #[test]
    fn weight_is_root_independent() {
        for seed in 0..10 {
            let t = families::random_tree(13, seed).unwrap();
            let w0 = dp_weight(&t);
            for root in 1..t.n() {
                assert_eq!(solve_tree(&t, root).unwrap().weight.unwrap(), w0);
            }
        }
    }

    #[test]
    fn path_closed_form() {
        for p in 3usize..=120 {
            let expect = if p == 4 { 6 } else { (6 * p).div_ceil(5) };
            assert_eq!(dp_weight(&families::path(p).unwrap()), expect, "p = {p}");
        }
    }

    #[test]
    fn rejects_non_trees_and_tiny_inputs() {
        let c4 = families::cycle(4).unwrap();
        assert_eq!(solve_tree(&c4, 0), Err(TreeDpError::NotATree));
        let k1 = families::path(1).unwrap();
        let res = solve_tree(&k1, 0).unwrap();
        assert!(!res.feasible);
        let p3 = families::path(3).unwrap();
        assert!(matches!(
            solve_tree(&p3, 7),
            Err(TreeDpError::RootOutOfRange { root: 7, n: 3 })
        ));
    }

    #[test]
    fn long_path_runs_without_recursion() {
        let p = families::path(200_000).unwrap();
        let res = solve_tree(&p, 0).unwrap();
        assert_eq!(res.weight, Some((6 * 200_000usize).div_ceil(5)));
        assert_eq!(res.nodes, 200_000);
    }
}

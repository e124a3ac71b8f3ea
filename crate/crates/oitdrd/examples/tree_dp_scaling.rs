//! The linear-time tree solver: closed forms, root independence, and a
//! million-vertex path.
//!
//! Run with: cargo run --release --example tree_dp_scaling

use std::time::Instant;

use oitdrd::families;
use oitdrd::solver::{solve_oitdrd, SolveOptions};
use oitdrd::tree_dp::solve_tree;

fn main() {
    // closed form on paths: 6 for p = 4, otherwise ceil(6p/5)
    println!("path closed form via DP:");
    for p in [3usize, 4, 5, 25, 100, 1000] {
        let res = solve_tree(&families::path(p).unwrap(), 0).unwrap();
        let formula = if p == 4 { 6 } else { (6 * p).div_ceil(5) };
        println!("  P_{p:<5} -> {:5}  (formula {formula})", res.weight.unwrap());
    }

    // the DP agrees with branch-and-bound on every small tree
    let mut checked = 0;
    for n in 2..=9 {
        for t in families::all_trees(n).unwrap() {
            let dp = solve_tree(&t, 0).unwrap().weight;
            let bb = solve_oitdrd(&t, &SolveOptions::default()).weight;
            assert_eq!(dp, bb);
            checked += 1;
        }
    }
    println!("\nDP == branch-and-bound on all {checked} free trees with n <= 9");

    // any root gives the same weight
    let t = families::random_tree(40, 7).unwrap();
    let w0 = solve_tree(&t, 0).unwrap().weight.unwrap();
    assert!((1..t.n()).all(|r| solve_tree(&t, r).unwrap().weight.unwrap() == w0));
    println!("root independence on a random 40-vertex tree: weight {w0} from every root");

    // scale: a path with a million vertices
    let p = families::path(1_000_000).unwrap();
    let start = Instant::now();
    let res = solve_tree(&p, 0).unwrap();
    println!(
        "\nP_1000000 -> {} in {:?} ({} vertices processed)",
        res.weight.unwrap(),
        start.elapsed(),
        res.nodes
    );
    let witness = res.witness.unwrap();
    println!(
        "witness head: {:?}...",
        &witness.labels()[..20.min(witness.len())]
    );
}

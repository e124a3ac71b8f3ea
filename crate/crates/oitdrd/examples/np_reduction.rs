//! The star-gadget reduction: build the host, lift a labeling, verify the
//! threshold equivalence with exact solvers.
//!
//! Run with: cargo run --example np_reduction

use oitdrd::families;
use oitdrd::reduction::{build_gadget, lift_oidrdf, verify_reduction};
use oitdrd::solver::{solve_oidrd, solve_oitdrd, SolveOptions};

fn main() {
    let opts = SolveOptions::default();
    let g = families::cycle(3).unwrap();
    let gm = build_gadget(&g).unwrap();
    println!(
        "host of K3: {} vertices, {} edges (6n and m + 5n)",
        gm.host.n(),
        gm.host.m()
    );
    println!("star ids: {}", gm.to_json());

    // lift an optimal OIDRDF of the base to an OITDRDF of the host
    let base = solve_oidrd(&g, &opts);
    let f = base.witness.unwrap();
    let lifted = lift_oidrdf(&g, &f, &gm).unwrap();
    println!(
        "\nbase OIDRDF {:?} (weight {}) lifts to weight {} = {} + 4n",
        f.labels(),
        f.weight(),
        lifted.weight(),
        f.weight()
    );

    // the lift is never worse than optimal on the host; here it is exact
    let host = solve_oitdrd(&gm.host, &opts);
    println!(
        "host optimum: {} (equality oidr + 4n = {})",
        host.weight.unwrap(),
        base.weight.unwrap() + 4 * g.n()
    );

    // both implications of the threshold equivalence
    for k in [3usize, 4, 5] {
        let verdict = verify_reduction(&g, k, &opts).unwrap();
        println!(
            "k = {k}: forward {:?}, backward {:?}",
            verdict.forward_ok, verdict.backward_ok
        );
    }
}

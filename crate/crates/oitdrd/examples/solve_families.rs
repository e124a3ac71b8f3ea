//! Exact OITDRD-numbers for the classic families, via branch-and-bound.
//!
//! Run with: cargo run --example solve_families

use oitdrd::families;
use oitdrd::solver::{solve_oidrd, solve_oitdrd, solve_tdrd, SolveOptions};

fn main() {
    let opts = SolveOptions::default();

    println!("paths and cycles (minimum OITDRDF weight):");
    for p in 3..=12 {
        let path = solve_oitdrd(&families::path(p).unwrap(), &opts);
        let cycle = solve_oitdrd(&families::cycle(p).unwrap(), &opts);
        println!(
            "  p = {p:2}   path {:2}   cycle {:2}",
            path.weight.unwrap(),
            cycle.weight.unwrap()
        );
    }

    println!("\nstars K_1,k (always 4 once k >= 2):");
    for p in 4..=9 {
        let res = solve_oitdrd(&families::star(p).unwrap(), &opts);
        println!("  K_1,{}  ->  {}", p - 1, res.weight.unwrap());
    }

    println!("\ndouble stars (always 6):");
    for (r, t) in [(1, 1), (2, 3), (4, 4), (1, 5)] {
        let res = solve_oitdrd(&families::double_star(r, t).unwrap(), &opts);
        println!("  DS({r},{t})  ->  {}", res.weight.unwrap());
    }

    let c4 = families::cycle(4).unwrap();
    let res = solve_oitdrd(&c4, &opts);
    println!(
        "\nC4 witness: {:?} (weight {})",
        res.witness.as_ref().unwrap().labels(),
        res.weight.unwrap()
    );
    println!("JSON: {}", res.to_json());

    // the sibling parameters bound the main one from below
    let g = families::cycle(5).unwrap();
    println!(
        "\nC5: oidr = {}, tdr = {}, oitdr = {}",
        solve_oidrd(&g, &opts).weight.unwrap(),
        solve_tdrd(&g, &opts).weight.unwrap(),
        solve_oitdrd(&g, &opts).weight.unwrap(),
    );

    // a lone vertex admits no OITDRDF at all
    let k1 = families::path(1).unwrap();
    let res = solve_oitdrd(&k1, &opts);
    println!("\nK1 feasible: {}", res.feasible);
}

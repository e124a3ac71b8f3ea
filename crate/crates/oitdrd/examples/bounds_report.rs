//! Bound reports: every supported inequality evaluated in exact rational
//! arithmetic, with tightness flags.
//!
//! Run with: cargo run --example bounds_report

use oitdrd::bounds::{bound_report, is_corona_of_tree, tree_bound_report};
use oitdrd::families;
use oitdrd::solver::SolveOptions;

fn main() {
    let opts = SolveOptions::default();

    // the degree-weighted lower bound is tight on C5
    let c5 = families::cycle(5).unwrap();
    let report = bound_report(&c5, &opts).unwrap();
    println!("C5 bound report (CSV):\n{}", report.to_csv());

    // order + matching is tight on P4 = Cor(P2)
    let p4 = families::path(4).unwrap();
    let report = bound_report(&p4, &opts).unwrap();
    for row in &report.rows {
        if row.name == "order_plus_matching" {
            println!("P4 order_plus_matching tight: {:?}", row.tight);
        }
    }

    // tree bounds: the stem bound and the 3p/2 characterization
    for (name, t) in [
        ("DS(2,3)", families::double_star(2, 3).unwrap()),
        ("Cor(P2) = P4", families::path(4).unwrap()),
        ("K_1,4", families::star(5).unwrap()),
        ("Cor(P5)", families::corona(&families::path(5).unwrap())),
    ] {
        let rep = tree_bound_report(&t, &opts).unwrap();
        let stem = rep.report.rows.iter().find(|r| r.name == "stem_bound").unwrap();
        println!(
            "{name}: stem bound {:?} <= {:?} (tight {:?}), corona recognized: {}, 3p/2 tight: {}",
            stem.lhs.unwrap(),
            stem.rhs.unwrap(),
            stem.tight.unwrap(),
            rep.corona_recognized,
            rep.three_halves_tight
        );
        assert!(rep.equivalence_holds);
    }

    // the recognizer in isolation
    for (name, t, expect) in [
        ("P2", families::path(2).unwrap(), true),
        ("P4", families::path(4).unwrap(), true),
        ("P6", families::path(6).unwrap(), false),
        ("K_1,3", families::star(4).unwrap(), false),
    ] {
        assert_eq!(is_corona_of_tree(&t), expect);
        println!("corona({name}) = {expect}");
    }

    println!("\nJSON mirror of the C5 report:\n{}", bound_report(&c5, &opts).unwrap().to_json());
}

//! Every constructive labeling in the crate, each certified by the
//! validity checker.
//!
//! Run with: cargo run --example constructions_tour

use oitdrd::constructions::{
    corona_labeling, cycle_labeling, double_star_labeling, matching_labeling,
    matching_labeling_triangle_free, path_labeling, regular_girth8_labeling, star_labeling,
};
use oitdrd::families;
use oitdrd::labeling::check_oitdrdf;
use oitdrd::solver::maximum_matching;

fn main() {
    println!("period-five path labelings:");
    for p in [6usize, 10, 13] {
        let out = path_labeling(p).unwrap();
        println!("  P_{p:<3} {:?}  weight {}", out.labeling.labels(), out.claimed_bound);
        assert!(check_oitdrdf(&families::path(p).unwrap(), &out.labeling).unwrap().is_valid());
    }
    let out = cycle_labeling(10).unwrap();
    println!("  C_10 {:?}  weight {}", out.labeling.labels(), out.claimed_bound);

    // order + matching number, from any maximum matching
    let c5 = families::cycle(5).unwrap();
    let matching = maximum_matching(&c5).unwrap();
    let out = matching_labeling(&c5, &matching).unwrap();
    println!(
        "\nC5 matching {:?} -> {:?}, certifies oitdr <= {}",
        matching,
        out.labeling.labels(),
        out.claimed_bound
    );

    // 3 * matching number on triangle-free graphs with min degree 2
    let c6 = families::cycle(6).unwrap();
    let matching = maximum_matching(&c6).unwrap();
    let out = matching_labeling_triangle_free(&c6, &matching).unwrap();
    println!(
        "C6 triangle-free variant -> {:?}, certifies oitdr <= {}",
        out.labeling.labels(),
        out.claimed_bound
    );

    // coronas meet the order + matching bound exactly
    let base = families::path(3).unwrap();
    let (host, out) = corona_labeling(&base).unwrap();
    println!(
        "\nCor(P3) on {} vertices -> {:?}, weight {} = 3p/2",
        host.n(),
        out.labeling.labels(),
        out.claimed_bound
    );

    println!("\ndouble star and star:");
    let out = double_star_labeling(2, 3).unwrap();
    println!("  DS(2,3) -> {:?} weight {}", out.labeling.labels(), out.claimed_bound);
    let out = star_labeling(5).unwrap();
    println!("  K_1,4   -> {:?} weight {}", out.labeling.labels(), out.claimed_bound);

    // distance-layer construction on regular graphs of girth >= 8
    let c8 = families::cycle(8).unwrap();
    let out = regular_girth8_labeling(&c8, 0, 1).unwrap();
    println!(
        "\nC8 layer construction -> {:?} weight {} (tight)",
        out.labeling.labels(),
        out.claimed_bound
    );
    let cage = families::tutte_coxeter().unwrap();
    let (r, r2) = cage.edges()[0];
    let out = regular_girth8_labeling(&cage, r, r2).unwrap();
    println!(
        "8-cage (30 vertices, 3-regular, girth 8) -> weight {}",
        out.claimed_bound
    );
    assert!(check_oitdrdf(&cage, &out.labeling).unwrap().is_valid());
    println!("JSON: {}", out.to_json());
}

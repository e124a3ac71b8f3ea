//! Validity checking: the three defining conditions, their violation
//! reports, and the related set properties.
//!
//! Run with: cargo run --example check_labeling

use oitdrd::families;
use oitdrd::graph::Graph;
use oitdrd::labeling::{
    check_drdf, check_oidrdf, check_oitdrdf, check_set_properties, check_tdrdf, Labeling,
};

fn main() {
    let c4 = families::cycle(4).unwrap();
    let f = Labeling::new(vec![2, 0, 2, 1]).unwrap();
    println!("C4 with {:?}: {:?}", f.labels(), check_oitdrdf(&c4, &f).unwrap());

    // a positive vertex needs a positive neighbor
    let p3 = families::path(3).unwrap();
    let f = Labeling::new(vec![0, 3, 0]).unwrap();
    println!("P3 with {:?}: {:?}", f.labels(), check_oitdrdf(&p3, &f).unwrap());

    // a 0-vertex needs a 3-neighbor or two 2-neighbors
    let k2 = families::path(2).unwrap();
    let f = Labeling::new(vec![2, 0]).unwrap();
    println!("K2 with {:?}: {:?}", f.labels(), check_oitdrdf(&k2, &f).unwrap());

    // the classes split the conditions: [3,0] is a fine DRDF and OIDRDF,
    // but the 3 has no positive neighbor
    let f = Labeling::new(vec![3, 0]).unwrap();
    println!(
        "K2 with [3,0]: drdf={} oidrdf={} tdrdf={}",
        check_drdf(&k2, &f).unwrap(),
        check_oidrdf(&k2, &f).unwrap(),
        check_tdrdf(&k2, &f).unwrap()
    );

    // labelings serialize as {"n":..,"labels":[..]}
    let f = Labeling::new(vec![1, 2, 2, 1]).unwrap();
    println!("JSON round trip: {}", f.to_json());
    let back = Labeling::from_json(&f.to_json()).unwrap();
    assert_eq!(back, f);

    // vertex-set properties on a custom graph
    let g = Graph::from_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    for set in [vec![1, 2], vec![0, 1, 2]] {
        let props = check_set_properties(&g, &set);
        println!(
            "C5 set {:?}: independent={} dominating={} total={} tcoi={}",
            set, props.independent, props.dominating, props.total_dominating,
            props.total_coindependent
        );
    }
}

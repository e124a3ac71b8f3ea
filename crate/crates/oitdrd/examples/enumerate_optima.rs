//! Enumerating every minimum-weight OITDRDF, and what the optima look
//! like around stems.
//!
//! Run with: cargo run --example enumerate_optima

use oitdrd::families;
use oitdrd::graph::{classify_vertices, VertexRole};
use oitdrd::solver::enumerate_optimal_oitdrdf;

fn main() {
    for (name, g) in [
        ("K2", families::path(2).unwrap()),
        ("P3", families::path(3).unwrap()),
        ("P4", families::path(4).unwrap()),
        ("C5", families::cycle(5).unwrap()),
    ] {
        let optima = enumerate_optimal_oitdrdf(&g).unwrap();
        println!(
            "{name}: {} optimal labelings of weight {}:",
            optima.len(),
            optima[0].weight()
        );
        for f in &optima {
            println!("  {:?}", f.labels());
        }
    }

    // every strong stem admits an optimum with 3 on it and 0 on its leaves
    let t = families::double_star(2, 3).unwrap();
    let roles = classify_vertices(&t);
    let optima = enumerate_optimal_oitdrdf(&t).unwrap();
    println!("\nDS(2,3): {} optima of weight {}", optima.len(), optima[0].weight());
    for v in 0..t.n() {
        if roles.roles[v] != VertexRole::StrongStem {
            continue;
        }
        let leaves: Vec<usize> = t
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| t.degree(w) == 1)
            .collect();
        let witness = optima
            .iter()
            .find(|f| f.get(v) == 3 && leaves.iter().all(|&w| f.get(w) == 0))
            .expect("a strong stem always has such an optimum");
        println!("  strong stem {v}: {:?} puts 3 on it, 0 on its leaves", witness.labels());
    }
}

//! Exact ν₁..ν₄, α₂ and χ′ of a few small cubic graphs.

use kmatch::exact::{alpha_k, chromatic_index, max_disjoint_maximum_matchings, nu_k};
use kmatch::named;

fn main() {
    let graphs = [
        ("K4", named::complete(4)),
        ("K3,3", named::complete_bipartite(3, 3)),
        ("Petersen", named::petersen()),
        ("triple edge", named::triple_edge()),
    ];
    println!("{:<12} {:>3} {:>3} {:>3} {:>3} {:>3} {:>4} {:>3} {:>5}", "graph", "n", "nu1", "nu2", "nu3", "nu4", "a2", "chi", "disj");
    for (name, g) in &graphs {
        let nu: Vec<usize> = (1..=4).map(|k| nu_k(g, k).value).collect();
        println!(
            "{:<12} {:>3} {:>3} {:>3} {:>3} {:>3} {:>4} {:>3} {:>5}",
            name,
            g.n(),
            nu[0],
            nu[1],
            nu[2],
            nu[3],
            alpha_k(g, 2).value,
            chromatic_index(g),
            max_disjoint_maximum_matchings(g),
        );
    }

    let best = nu_k(&named::petersen(), 2);
    println!("\nan optimal pair in the Petersen graph:");
    for (i, m) in best.witness.members.iter().enumerate() {
        println!("  color {}: edges {:?}", i + 1, m.edges());
    }
}

//! A path/cycle system on a graph where every edge joins a degree-2 vertex to
//! a vertex of degree 3, and the edge-disjoint pair it yields.

use kmatch::decomposition::{build_system, check_system, is_two_big_bipartite};
use kmatch::exact::nu_k;
use kmatch::named;

fn main() {
    let g = named::subdivide_all(&named::petersen());
    assert!(is_two_big_bipartite(&g));
    let w = build_system(&g).expect("host qualifies");
    check_system(&g, &w.system).expect("system is valid");
    for p in &w.system.paths {
        println!("path  {:?}", p.vertices);
    }
    for c in &w.system.cycles {
        println!("cycle {:?}", c.vertices);
    }
    let (h, h2) = &w.pair;
    println!(
        "pair from alternation: {} + {} = {} edges; exact nu2 = {}; n = {}",
        h.len(),
        h2.len(),
        h.len() + h2.len(),
        nu_k(&g, 2).value,
        g.n()
    );
}

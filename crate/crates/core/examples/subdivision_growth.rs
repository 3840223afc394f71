//! Growing an edge-disjoint pair of matchings through repeated
//! 1-subdivisions, one edge gained per new vertex.

use kmatch::decomposition::{build_system, nu2_subdivision_value, transform_pair_through_subdivision};
use kmatch::exact::nu_k;
use kmatch::named;

fn main() {
    let mut g = named::subdivide_all(&named::complete(4));
    let w = build_system(&g).expect("host qualifies");
    let (mut h, mut h2) = w.pair;
    println!("start: n = {}, pair = {}, nu2 = {}", g.n(), h.len() + h2.len(), nu_k(&g, 2).value);
    for step in 0..4 {
        let e = step % g.m();
        let predicted = nu2_subdivision_value(&g, e).expect("host qualifies");
        let (g2, a, b) = transform_pair_through_subdivision(&g, &h, &h2, e).expect("pair extends");
        (g, h, h2) = (g2, a, b);
        println!(
            "subdivide edge {e}: n = {}, pair = {}, predicted nu2 = {predicted}, exact nu2 = {}",
            g.n(),
            h.len() + h2.len(),
            nu_k(&g, 2).value
        );
    }
}

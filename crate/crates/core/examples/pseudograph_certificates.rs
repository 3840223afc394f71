//! Pairs and matchings for subdivided cubic pseudo-graphs, built by cutting
//! loops down to a base case.

use kmatch::exact::{matching_number, nu_k};
use kmatch::pseudograph::{applicable_loops, certify_matching, certify_pair, cut_loop, derive_k_after_cut, realize, CubicPseudograph};

fn main() {
    // A loop on 0, a double edge between 2 and 3.
    let g0 = CubicPseudograph::from_edges(4, [(0, 0), (0, 1), (1, 2), (1, 3), (2, 3), (2, 3)]).expect("cubic");
    for k in [vec![1, 2, 2, 2, 2, 2], vec![3, 2, 4, 2, 3, 2]] {
        let g = realize(&g0, &k).expect("k fits");
        let pair = certify_pair(&g0, &k).expect("premises hold");
        let m = certify_matching(&g0, &k).expect("premises hold");
        println!(
            "k = {k:?}: n = {:>2}, pair {:>2} (nu2 {:>2}), matching {:>2} (nu1 {:>2})",
            g.n(),
            pair.total(),
            nu_k(&g, 2).value,
            m.len(),
            matching_number(&g)
        );
        for e in applicable_loops(&g0) {
            let cut = cut_loop(&g0, e).expect("applicable");
            let k2 = derive_k_after_cut(&k, &cut);
            println!("  cutting loop {e} leaves {} vertices with k = {k2:?}", cut.graph.n());
        }
    }
}

//! A maximum matching with no two unsaturated vertices at distance two.
//!
//! The plain lexicographically smallest maximum matching rarely has such a
//! pair, so this scans many random graphs and shows the ones that needed
//! repair.

use kmatch::exact::{matching_number, maximum_matching};
use kmatch::generate::random_subcubic;
use kmatch::separated::{bad_pairs, separated_maximum_matching};

fn main() {
    let (mut scanned, mut repaired) = (0, 0);
    for seed in 0..12_000 {
        let g = random_subcubic(10, seed).expect("valid size");
        let s = separated_maximum_matching(&g).expect("subcubic input");
        assert_eq!(s.matching.len(), matching_number(&g));
        assert_eq!(s.bad_pairs, 0);
        scanned += 1;
        let before = bad_pairs(&g, &maximum_matching(&g));
        if before > 0 {
            repaired += 1;
            println!(
                "seed {seed}: {before} bad pair(s) fixed in {} step(s); unsaturated now {:?}; edges {:?}",
                s.steps,
                s.unsaturated,
                g.edges()
            );
        }
    }
    println!("{scanned} graphs, {repaired} needed repair, all separated afterwards");
}

//! Certificates for random cubic graphs, checked against the exact optimum.

use kmatch::certify::certify_cubic;
use kmatch::exact::nu_k;
use kmatch::generate::random_cubic;

fn main() {
    for seed in 0..5 {
        let g = random_cubic(16, seed).expect("even order");
        let c = certify_cubic(&g).expect("cubic input");
        assert!(c.is_valid() && c.all_hold());
        println!(
            "seed {seed}: pair {} <= nu2 {}, triple {} <= nu3 {}",
            c.pair.total(),
            nu_k(&g, 2).value,
            c.triple.total(),
            nu_k(&g, 3).value
        );
        for b in &c.claimed_bounds {
            println!("  {:<24} witness {:>3} >= bound {:>3}", b.name, b.witness, b.bound);
        }
    }
}

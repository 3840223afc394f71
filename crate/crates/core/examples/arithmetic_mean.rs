//! The inequality ν₂ ≥ (ν₁ + ν₃)/2 and its relatives on every cubic graph
//! with up to eight vertices.

use kmatch::certify::verify_all;
use kmatch::generate::enumerate_cubic;

fn main() {
    for n in [2, 4, 6, 8] {
        let graphs = enumerate_cubic(n).expect("even order");
        let mut tightest = i64::MAX;
        for g in &graphs {
            let r = verify_all(g).expect("cubic input");
            assert!(r.all_pass(), "{}", r.graph_id);
            tightest = tightest.min(r.check("arithmetical_mean").expect("present").slack);
        }
        println!("n = {n}: {} graphs, all checks pass, least arithmetical-mean slack {tightest}", graphs.len());
    }
}

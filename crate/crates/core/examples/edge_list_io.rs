//! Reading and writing the plain-text edge-list format.

use kmatch::canon::graph_id;
use kmatch::io::{parse_edge_list, write_edge_list};
use kmatch::named;

fn main() {
    let text = "# two vertices joined by a triple edge\np 2 3\ne 0 1\ne 1 0\ne 0 1\n";
    let g = parse_edge_list(text).expect("well formed");
    println!("parsed n = {}, m = {}, id {}", g.n(), g.m(), graph_id(&g));
    print!("{}", write_edge_list(&g));

    let p = write_edge_list(&named::petersen());
    assert_eq!(write_edge_list(&parse_edge_list(&p).expect("round trip")), p);

    match parse_edge_list("p 3 1\ne 0 7\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}

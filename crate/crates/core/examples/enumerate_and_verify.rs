//! Enumerate cubic multigraphs and run every check, as `kmatch verify` does.

use kmatch::generate::TightBound;
use kmatch::harness::{search_tight_records, verify_exhaustive};

fn main() {
    let records = verify_exhaustive(8, false).expect("small orders");
    let failed = records.iter().filter(|r| !r.pass).count();
    println!("{} graphs verified, {failed} failed", records.len());
    println!("first record: {}", records[0].to_json());

    let tight = search_tight_records(10, TightBound::Nu2FourFifths.name(), false).expect("known bound");
    println!("{} graphs on 10 vertices attain nu2 = ceil(4n/5)", tight.len());
}

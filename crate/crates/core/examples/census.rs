// Enumerating all order types of n points and tabulating them.
//
// `cargo run --release --example census -- 8` prints the table for 8 points.

use std::time::Instant;

use orchard::census::{enumerate_levels, mono_records, CensusTable, EnumerateOptions};

fn census_tsv(n: usize, progress: bool) -> String {
    let start = Instant::now();
    let records = enumerate_levels(n, &EnumerateOptions::default(), |m, level| {
        if progress {
            eprintln!("{m} points: {} types after {:.1?}", level.len(), start.elapsed());
        }
    })
    .unwrap();
    let mut out = CensusTable::from_records(n, &records).unwrap().to_tsv();
    out += &format!("monochromatic types: {}\n", mono_records(&records).len());
    out
}

pub fn run_example() -> String {
    census_tsv(6, false)
}

#[allow(dead_code)]
fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    print!("{}", census_tsv(n, true));
}

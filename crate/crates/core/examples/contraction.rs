// Contracting infinitesimally close pairs down to a minimal representative.

use orchard::transforms::{contract, infinitesimal_pairs, minimal_key, minimal_representative};
use orchard::{orchard_partition, Configuration};

pub fn run_example() -> String {
    let c = Configuration::from_ints(&[(0, 0), (1, 0), (9, 1), (5, 9), (0, 8), (4, 4)]).unwrap();
    let pairs = infinitesimal_pairs(&c).unwrap();
    let mut out = format!("{} close pairs\n", pairs.len());
    let first = contract(&c, &pairs[0]).unwrap();
    out += &format!(
        "contract ({},{}): {:?} -> {:?}\n",
        pairs[0].r,
        pairs[0].s,
        orchard_partition(&c).unwrap().sizes(),
        orchard_partition(&first).unwrap().sizes()
    );
    let min = minimal_representative(&c).unwrap();
    out += &format!("minimal representative size {}\n", min.len());
    out += &format!("minimal key {}\n", minimal_key(&c).unwrap());
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}

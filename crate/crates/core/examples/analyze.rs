// Hull, Orchard partition and close pairs of a small configuration.

use orchard::transforms::infinitesimal_pairs;
use orchard::{hull_indices, lemma_decomposition, orchard_partition, separating_count, Configuration};

pub fn run_example() -> String {
    // A convex pentagon with one point inside.
    let c = Configuration::from_ints(&[(0, 0), (6, 0), (9, 4), (5, 8), (-1, 5), (4, 3)]).unwrap();
    let partition = orchard_partition(&c).unwrap();
    let mut out = format!(
        "hull {:?}\nsizes {:?}\ncolors {:?}\n",
        hull_indices(&c).unwrap(),
        partition.sizes(),
        partition.colors()
    );
    out += &format!("n(0,5) = {}\n", separating_count(&c, 0, 5).unwrap());
    let pairs: Vec<_> = infinitesimal_pairs(&c).unwrap().iter().map(|p| (p.r, p.s)).collect();
    out += &format!("close pairs {pairs:?}\n");
    out += &format!("{:?}\n", lemma_decomposition(&c, 0, 2, 4).unwrap());
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}

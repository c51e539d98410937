// Growing a configuration by an infinitesimally close pair on its hull.

use orchard::transforms::add_hull_infinitesimal_pair;
use orchard::{hull_indices, orchard_partition, Configuration};

pub fn run_example() -> String {
    let mut c = Configuration::from_ints(&[(0, 0), (4, 0), (2, 3)]).unwrap();
    let mut out = String::new();
    for _ in 0..3 {
        c = add_hull_infinitesimal_pair(&c).unwrap();
        out += &format!(
            "{} points, hull {}, partition {:?}\n",
            c.len(),
            hull_indices(&c).unwrap().len(),
            orchard_partition(&c).unwrap().sizes()
        );
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}

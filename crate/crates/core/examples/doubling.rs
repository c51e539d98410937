// Adding a point infinitesimally close to an existing one, in every cone.

use orchard::transforms::{cone_count, contract, double_point, ClosePair};
use orchard::{canonical_key, chirotope_of, orchard_partition, Configuration};

pub fn run_example() -> String {
    let c = Configuration::from_ints(&[(0, 0), (8, 0), (4, 7), (4, 2)]).unwrap();
    let original = canonical_key(&chirotope_of(&c).unwrap(), false).unwrap();
    let mut out = String::new();
    for cone in 0..cone_count(c.len()) {
        let d = double_point(&c, 3, cone).unwrap();
        // The new point is last and close to point 3, so contracting gives c back.
        let back = contract(&d, &ClosePair { r: 3, s: d.len() - 1 }).unwrap();
        assert_eq!(canonical_key(&chirotope_of(&back).unwrap(), false).unwrap(), original);
        out += &format!("cone {cone}: {:?}\n", orchard_partition(&d).unwrap().sizes());
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}

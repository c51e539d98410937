// Parametric families with known Orchard partitions.

use orchard::families::{polygon_center_prediction, Family, FamilySpec};
use orchard::orchard_partition;

pub fn run_example() -> String {
    let mut out = String::new();
    for family in Family::ALL {
        for n in [5, 7, 9] {
            let c = FamilySpec::new(family, n).generate().unwrap();
            out += &format!("{family} {n}: {} points, {:?}\n", c.len(), orchard_partition(&c).unwrap().sizes());
        }
    }
    out += &format!("polygon-center 7 predicted {:?}\n", polygon_center_prediction(7));
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}

// Mutations: negating one triple sign, on signs and on coordinates.

use orchard::transforms::{apply_flip_chi, apply_flip_geom, find_flips};
use orchard::{chirotope_of, orchard_partition, Configuration};

pub fn run_example() -> String {
    let c = Configuration::from_ints(&[(0, 0), (10, 0), (5, 8), (4, 2), (6, 4)]).unwrap();
    let chi = chirotope_of(&c).unwrap();
    let moves = find_flips(&chi).unwrap();
    let mut out = format!("{} flippable triples\n", moves.len());
    for m in &moves {
        let flipped = apply_flip_geom(&c, m).unwrap();
        let by_signs = apply_flip_chi(&chi, m).unwrap();
        assert_eq!(chirotope_of(&flipped).unwrap(), by_signs);
        out += &format!(
            "{:?}: {:?} -> {:?}\n",
            m.triple,
            orchard_partition(&c).unwrap().sizes(),
            orchard_partition(&flipped).unwrap().sizes()
        );
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}

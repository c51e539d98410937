// Canonical keys identify order types under relabeling, with or without mirrors.

use orchard::{canonical_key, chirotope_of, is_isomorphic, Configuration};

pub fn run_example() -> String {
    let c = Configuration::from_ints(&[(0, 0), (7, 1), (3, 6), (2, 2), (5, 3)]).unwrap();
    let relabeled = c.permuted(&[3, 0, 4, 1, 2]).unwrap();
    let mirror = c.mirrored();
    let (a, b, m) = (
        chirotope_of(&c).unwrap(),
        chirotope_of(&relabeled).unwrap(),
        chirotope_of(&mirror).unwrap(),
    );
    let mut out = format!("key {}\n", canonical_key(&a, false).unwrap());
    out += &format!("relabeled same: {}\n", is_isomorphic(&a, &b, false).unwrap());
    out += &format!("mirror same unoriented: {}\n", is_isomorphic(&a, &m, false).unwrap());
    out += &format!("mirror same oriented: {}\n", is_isomorphic(&a, &m, true).unwrap());
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}

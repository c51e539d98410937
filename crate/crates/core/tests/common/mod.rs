#![allow(dead_code)]

use orchard::{is_generic, Configuration};
use rand::Rng;

/// A generic configuration of `n` points with coordinates in `[-range, range]`.
pub fn random_configuration(rng: &mut impl Rng, n: usize, range: i64) -> Configuration {
    loop {
        let coords: Vec<(i64, i64)> = (0..n).map(|_| (rng.gen_range(-range..=range), rng.gen_range(-range..=range))).collect();
        if let Ok(c) = Configuration::from_ints(&coords) {
            if is_generic(&c) {
                return c;
            }
        }
    }
}

/// Three distinct indices below `n`.
pub fn random_triple(rng: &mut impl Rng, n: usize) -> (usize, usize, usize) {
    let i = rng.gen_range(0..n);
    let mut j = rng.gen_range(0..n - 1);
    if j >= i {
        j += 1;
    }
    loop {
        let k = rng.gen_range(0..n);
        if k != i && k != j {
            return (i, j, k);
        }
    }
}

/// `P ~ Q` read directly off the separating count.
pub fn related(count: usize, n: usize) -> bool {
    count % 2 == (n + 1) % 2
}

mod common;

use std::collections::BTreeSet;

use common::random_configuration;
use orchard::census::{enumerate, EnumerateOptions};
use orchard::families::{family_doubled_polygon_center, family_odd_polygon, family_polygon_midpoints};
use orchard::transforms::{
    add_hull_infinitesimal_pair, apply_flip_chi, apply_flip_geom, contract, contraction_keys, cone_count, double_point,
    find_flips, infinitesimal_pairs, minimal_representative, FlipMove,
};
use orchard::{canonical_key, chirotope_of, hull_indices, orchard_partition, Chirotope, Configuration};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn key(c: &Configuration) -> orchard::CanonicalKey {
    canonical_key(&chirotope_of(c).unwrap(), false).unwrap()
}

#[test]
fn doubling_reaches_exactly_the_types_that_contract_back() {
    let fives = enumerate(5, &EnumerateOptions::default()).unwrap();
    let sixes = enumerate(6, &EnumerateOptions::default()).unwrap();
    for five in &fives {
        let c = &five.representative;
        let mut doubled = BTreeSet::new();
        for i in 0..c.len() {
            for cone in 0..cone_count(c.len()) {
                doubled.insert(key(&double_point(c, i, cone).unwrap()));
            }
        }
        let contracting: BTreeSet<_> = sixes
            .iter()
            .filter(|six| contraction_keys(&six.representative).unwrap().contains(&five.key))
            .map(|six| six.key.clone())
            .collect();
        assert_eq!(doubled, contracting, "five-point type {}", five.key);
    }
}

#[test]
fn geometric_flips_match_sign_flips() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..300 {
        let n = rng.gen_range(3..=9);
        let c = random_configuration(&mut rng, n, 25);
        let chi = chirotope_of(&c).unwrap();
        for m in find_flips(&chi).unwrap() {
            let flipped = apply_flip_geom(&c, &m).unwrap();
            assert_eq!(chirotope_of(&flipped).unwrap(), apply_flip_chi(&chi, &m).unwrap());
        }
    }
}

#[test]
fn flipping_twice_restores_the_chirotope() {
    let c = Configuration::from_ints(&[(0, 0), (9, 1), (4, 7), (4, 3), (6, 2)]).unwrap();
    let chi = chirotope_of(&c).unwrap();
    for m in find_flips(&chi).unwrap() {
        let once = apply_flip_chi(&chi, &m).unwrap();
        assert_eq!(apply_flip_chi(&once, &m).unwrap(), chi);
    }
}

/// The convex polygon chirotope with vertices labeled counterclockwise.
fn convex(n: usize) -> Chirotope {
    Chirotope::from_fn(n, |_, _, _| 1)
}

#[test]
fn midpoints_family_is_the_even_polygon_after_flips() {
    for n in 3..=8 {
        let mut chi = convex(2 * n);
        for i in 0..n {
            chi = apply_flip_chi(&chi, &FlipMove::new(2 * i, 2 * i + 1, (2 * i + 2) % (2 * n))).unwrap();
        }
        let family = family_polygon_midpoints(n).unwrap();
        assert_eq!(canonical_key(&chi, false).unwrap(), key(&family), "n = {n}");
    }
}

#[test]
fn doubled_polygon_contracts_to_polygon_and_center() {
    for n in [3, 5, 7, 9] {
        let mut c = family_doubled_polygon_center(n).unwrap();
        for _ in 0..n {
            let pair = infinitesimal_pairs(&c)
                .unwrap()
                .into_iter()
                .find(|p| p.r != c.len() - 1 && p.s != c.len() - 1)
                .expect("a close pair away from the center");
            c = contract(&c, &pair).unwrap();
        }
        assert_eq!(c.len(), n + 1);
        assert_eq!(hull_indices(&c).unwrap().len(), n);
    }
}

#[test]
fn even_polygons_contract_to_a_point() {
    for m in 1..=6 {
        let pts: Vec<(i64, i64)> = (0..2 * m)
            .map(|k| {
                let a = std::f64::consts::TAU * k as f64 / (2 * m) as f64;
                ((1000.0 * a.cos()).round() as i64, (1000.0 * a.sin()).round() as i64)
            })
            .collect();
        let c = Configuration::from_ints(&pts).unwrap();
        assert_eq!(minimal_representative(&c).unwrap().len(), 1);
    }
}

#[test]
fn hull_pairs_from_one_point_give_odd_polygons() {
    let mut c = Configuration::from_ints(&[(0, 0)]).unwrap();
    for m in 1..=6 {
        c = add_hull_infinitesimal_pair(&c).unwrap();
        assert_eq!(hull_indices(&c).unwrap().len(), 2 * m + 1);
        assert_eq!(key(&c), key(&family_odd_polygon(m).unwrap()));
    }
}

#[test]
fn hull_pairs_on_balanced_configurations() {
    // A convex hexagon has partition (3,3); adding a hull pair gives (4,4).
    let hex = Configuration::from_ints(&[(4, 0), (2, 3), (-2, 3), (-4, 0), (-2, -3), (2, -3)]).unwrap();
    let grown = add_hull_infinitesimal_pair(&hex).unwrap();
    assert_eq!(orchard_partition(&grown).unwrap().sizes(), (4, 4));
    let n = grown.len();
    assert_eq!(orchard::separating_count(&grown, n - 2, n - 1).unwrap(), 0);
    let hull = hull_indices(&grown).unwrap();
    assert!(hull.contains(&(n - 2)) && hull.contains(&(n - 1)));
}

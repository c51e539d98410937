//! Generators for monochromatic and near-monochromatic families built on
//! regular polygons.
//!
//! Regular polygons have irrational vertices, so each generator rounds them
//! to an integer grid and refines the grid until the combinatorial facts the
//! construction relies on are verified exactly. Since Orchard data depends
//! only on the order type, a certified approximation is as good as the exact
//! polygon.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{Configuration, Point};
use crate::ordertype::{
    chirotope_of, hull_size_chi_unchecked, orchard_partition_chi_unchecked, separating_count_chi_unchecked, Chirotope,
};

/// Grid exponents tried when rounding regular polygons.
const GRID_BITS: std::ops::RangeInclusive<u32> = 10..=44;

/// Halvings of a perturbation scale tried per grid.
const SCALE_HALVINGS: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    OddPolygon,
    PolygonMidpoints,
    PolygonCenter,
    DoubledPolygonCenter,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::OddPolygon,
        Family::PolygonMidpoints,
        Family::PolygonCenter,
        Family::DoubledPolygonCenter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::OddPolygon => "odd-polygon",
            Family::PolygonMidpoints => "polygon-midpoints",
            Family::PolygonCenter => "polygon-center",
            Family::DoubledPolygonCenter => "doubled-polygon-center",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family {s:?}")))
    }
}

/// A family member: which family, its size parameter and the relative size
/// of the small offsets the construction needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub scale: BigRational,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec {
            family,
            n,
            scale: BigRational::new(1.into(), 1024.into()),
        }
    }

    pub fn with_scale(mut self, scale: BigRational) -> Self {
        self.scale = scale;
        self
    }

    pub fn generate(&self) -> Result<Configuration> {
        if self.scale <= BigRational::zero() {
            return Err(Error::InvalidArgument("perturbation scale must be positive".into()));
        }
        match self.family {
            Family::OddPolygon => family_odd_polygon(self.n),
            Family::PolygonMidpoints => midpoints_with(self.n, &self.scale),
            Family::PolygonCenter => family_polygon_center(self.n).map(|(c, _)| c),
            Family::DoubledPolygonCenter => doubled_with(self.n, &self.scale),
        }
    }
}

/// Vertices of a regular `n`-gon of radius `2^bits`, rounded to integers,
/// counterclockwise from the positive x axis.
fn regular_polygon(n: usize, bits: u32) -> Vec<Point> {
    let radius = (1u64 << bits) as f64;
    (0..n)
        .map(|k| {
            let a = std::f64::consts::TAU * k as f64 / n as f64;
            Point::from_ints((radius * a.cos()).round() as i64, (radius * a.sin()).round() as i64)
        })
        .collect()
}

fn rat(p: &Point, s: &BigRational) -> Point {
    Point::new(&p.x * s, &p.y * s)
}

fn plus(p: &Point, q: &Point) -> Point {
    Point::new(&p.x + &q.x, &p.y + &q.y)
}

fn minus(p: &Point, q: &Point) -> Point {
    Point::new(&p.x - &q.x, &p.y - &q.y)
}

fn certified_chirotope(points: Vec<Point>) -> Option<(Configuration, Chirotope)> {
    let c = Configuration::new(points).ok()?;
    let chi = chirotope_of(&c).ok()?;
    Some((c, chi))
}

fn sep(chi: &Chirotope, i: usize, j: usize) -> usize {
    separating_count_chi_unchecked(chi, i, j)
}

/// The vertices of a convex `(2m+1)`-gon.
pub fn family_odd_polygon(m: usize) -> Result<Configuration> {
    if m == 0 {
        return Err(Error::InvalidArgument("odd polygons need m >= 1".into()));
    }
    let n = 2 * m + 1;
    for bits in GRID_BITS {
        if let Some((c, chi)) = certified_chirotope(regular_polygon(n, bits)) {
            if hull_size_chi_unchecked(&chi) == n {
                return Ok(c);
            }
        }
    }
    Err(Error::PrecisionExhausted)
}

/// A regular `n`-gon with a point just inside each edge midpoint.
///
/// Vertex `k` has index `2k` and the point near the midpoint of edge
/// `(k, k+1)` has index `2k+1`, so the indices follow the boundary.
pub fn family_polygon_midpoints(n: usize) -> Result<Configuration> {
    midpoints_with(n, &FamilySpec::new(Family::PolygonMidpoints, n).scale)
}

fn midpoints_with(n: usize, scale: &BigRational) -> Result<Configuration> {
    if n < 3 {
        return Err(Error::InvalidArgument("polygon with midpoints needs n >= 3".into()));
    }
    let half = BigRational::new(1.into(), 2.into());
    for bits in GRID_BITS {
        let verts = regular_polygon(n, bits);
        let mut s = scale.clone();
        for _ in 0..SCALE_HALVINGS {
            let mut pts = Vec::with_capacity(2 * n);
            for k in 0..n {
                let (a, b) = (&verts[k], &verts[(k + 1) % n]);
                let mid = rat(&plus(a, b), &half);
                let edge = minus(b, a);
                // Left normal of a counterclockwise edge points inside; its
                // length is the edge length.
                let inward = Point::new(-edge.y.clone(), edge.x.clone());
                pts.push(a.clone());
                pts.push(plus(&mid, &rat(&inward, &s)));
            }
            if let Some((c, chi)) = certified_chirotope(pts) {
                let ok = hull_size_chi_unchecked(&chi) == n
                    && (0..n).all(|k| sep(&chi, 2 * k, (2 * k + 2) % (2 * n)) == 2 * n - 1)
                    && orchard_partition_chi_unchecked(&chi).is_monochromatic();
                if ok {
                    return Ok(c);
                }
            }
            s *= &half;
        }
    }
    Err(Error::PerturbationFailed)
}

/// Partition of the regular `n`-gon plus center, odd `n`: monochromatic when
/// `n + 1` is 0 or 6 mod 8, otherwise the center alone is in the small class.
pub fn polygon_center_prediction(n: usize) -> (usize, usize) {
    if matches!((n + 1) % 8, 0 | 6) {
        (0, n + 1)
    } else {
        (1, n)
    }
}

/// A regular `n`-gon (indices `0..n`) plus its center (index `n`), with the
/// partition predicted from `n mod 8`.
pub fn family_polygon_center(n: usize) -> Result<(Configuration, (usize, usize))> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::InvalidArgument("polygon with center needs odd n >= 5".into()));
    }
    let rotation: Vec<usize> = (0..n).map(|k| (k + 1) % n).chain([n]).collect();
    let reflection: Vec<usize> = (0..n).map(|k| (n - k) % n).chain([n]).collect();
    for bits in GRID_BITS {
        let mut pts = regular_polygon(n, bits);
        pts.push(Point::from_ints(0, 0));
        let Some((c, chi)) = certified_chirotope(pts) else {
            continue;
        };
        // Symmetry under the dihedral relabelings pins the regular order type.
        let symmetric = chi.permuted(&rotation)? == chi && chi.permuted(&reflection)? == chi.negated();
        if symmetric && hull_size_chi_unchecked(&chi) == n && sep(&chi, 0, 1) == 1 {
            return Ok((c, polygon_center_prediction(n)));
        }
    }
    Err(Error::PrecisionExhausted)
}

/// A regular `n`-gon with every vertex split into two close points plus the
/// center: `P_i` at `2i`, `P'_i` at `2i+1`, the center at `2n`.
pub fn family_doubled_polygon_center(n: usize) -> Result<Configuration> {
    doubled_with(n, &FamilySpec::new(Family::DoubledPolygonCenter, n).scale)
}

fn doubled_with(n: usize, scale: &BigRational) -> Result<Configuration> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidArgument("doubled polygon needs odd n >= 3".into()));
    }
    let half = BigRational::new(1.into(), 2.into());
    for bits in GRID_BITS {
        let verts = regular_polygon(n, bits);
        let mut s = scale.clone();
        for _ in 0..SCALE_HALVINGS {
            let mut pts = Vec::with_capacity(2 * n + 1);
            for v in &verts {
                // Counterclockwise tangent, as long as the radius.
                let tangent = rat(&Point::new(-v.y.clone(), v.x.clone()), &s);
                pts.push(minus(v, &tangent));
                pts.push(plus(v, &tangent));
            }
            pts.push(Point::from_ints(0, 0));
            if let Some((c, chi)) = certified_chirotope(pts) {
                if doubled_certificate(&chi, n) {
                    return Ok(c);
                }
            }
            s *= &half;
        }
    }
    Err(Error::PrecisionExhausted)
}

fn doubled_certificate(chi: &Chirotope, n: usize) -> bool {
    let center = 2 * n;
    hull_size_chi_unchecked(chi) == 2 * n
        && (0..n).all(|i| {
            sep(chi, 2 * i, 2 * i + 1) == 0
                && sep(chi, 2 * i + 1, (2 * i + 2) % (2 * n)) == 2
                && sep(chi, center, 2 * i).is_multiple_of(2)
        })
        && orchard_partition_chi_unchecked(chi).is_monochromatic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{hull_indices, orchard_partition, separating_count};

    #[test]
    fn small_odd_polygons() {
        let tri = family_odd_polygon(1).unwrap();
        assert_eq!(tri.len(), 3);
        let pent = family_odd_polygon(2).unwrap();
        assert_eq!(hull_indices(&pent).unwrap().len(), 5);
        assert!(orchard_partition(&pent).unwrap().is_monochromatic());
    }

    #[test]
    fn midpoints_for_five() {
        let c = family_polygon_midpoints(5).unwrap();
        assert_eq!(c.len(), 10);
        assert!(orchard_partition(&c).unwrap().is_monochromatic());
        assert_eq!(separating_count(&c, 0, 2).unwrap(), 9);
    }

    #[test]
    fn center_predictions() {
        assert_eq!(polygon_center_prediction(5), (0, 6));
        assert_eq!(polygon_center_prediction(7), (0, 8));
        assert_eq!(polygon_center_prediction(9), (1, 9));
        assert_eq!(polygon_center_prediction(11), (1, 11));
        let (c, pred) = family_polygon_center(9).unwrap();
        assert_eq!(orchard_partition(&c).unwrap().sizes(), pred);
    }

    #[test]
    fn doubled_triangle() {
        let c = family_doubled_polygon_center(3).unwrap();
        assert_eq!(c.len(), 7);
        assert!(orchard_partition(&c).unwrap().is_monochromatic());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("polygon_center".parse::<Family>().unwrap(), Family::PolygonCenter);
        assert!("hexagon".parse::<Family>().is_err());
    }

    #[test]
    fn bad_parameters() {
        assert!(family_odd_polygon(0).is_err());
        assert!(family_polygon_midpoints(2).is_err());
        assert!(family_polygon_center(6).is_err());
        assert!(family_doubled_polygon_center(4).is_err());
        let spec = FamilySpec::new(Family::OddPolygon, 2).with_scale(BigRational::zero());
        assert!(spec.generate().is_err());
    }
}

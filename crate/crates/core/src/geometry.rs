//! Coordinate-level predicates, separating-line counts and the Orchard
//! partition computed directly from a realization.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, Int, IntPoint};

/// A point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point {
            x: BigRational::from_integer(x.into()),
            y: BigRational::from_integer(y.into()),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.x, self.y)
    }
}

/// Orientation of the triangle `(p, q, r)`: +1 counterclockwise, -1 clockwise, 0 collinear.
pub fn orient(p: &Point, q: &Point, r: &Point) -> i8 {
    let det = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    if det.is_zero() {
        0
    } else if det.is_positive() {
        1
    } else {
        -1
    }
}

/// An ordered list of points, indexed `0..n`.
///
/// Coordinates are kept both as given and scaled by their common denominator,
/// which is what the batch predicates work on.
#[derive(Clone, Debug)]
pub struct Configuration {
    points: Vec<Point>,
    ints: Vec<IntPoint>,
    degeneracy: OnceLock<Option<Vec<usize>>>,
}

impl PartialEq for Configuration {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points
    }
}

impl Eq for Configuration {}

impl Configuration {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidArgument("a configuration needs at least one point".into()));
        }
        let mut denom = BigInt::one();
        for p in &points {
            denom = denom.lcm(p.x.denom()).lcm(p.y.denom());
        }
        let scale = |v: &BigRational| Int::from_big(v.numer() * (&denom / v.denom()));
        let ints = points
            .iter()
            .map(|p| IntPoint {
                x: scale(&p.x),
                y: scale(&p.y),
            })
            .collect();
        Ok(Configuration {
            points,
            ints,
            degeneracy: OnceLock::new(),
        })
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect())
    }

    pub(crate) fn from_int_points(ints: Vec<IntPoint>) -> Result<Self> {
        if ints.is_empty() {
            return Err(Error::InvalidArgument("a configuration needs at least one point".into()));
        }
        let points = ints
            .iter()
            .map(|p| Point::new(BigRational::from_integer(p.x.to_big()), BigRational::from_integer(p.y.to_big())))
            .collect();
        Ok(Configuration {
            points,
            ints,
            degeneracy: OnceLock::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub(crate) fn ints(&self) -> &[IntPoint] {
        &self.ints
    }

    pub(crate) fn orient_idx(&self, a: usize, b: usize, c: usize) -> i8 {
        exact::orient(&self.ints[a], &self.ints[b], &self.ints[c])
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.len() {
            Err(Error::IndexOutOfRange { index: i, n: self.len() })
        } else {
            Ok(())
        }
    }

    /// First coinciding pair or collinear triple, if any.
    pub fn degeneracy(&self) -> Option<&[usize]> {
        self.degeneracy
            .get_or_init(|| {
                let n = self.len();
                for i in 0..n {
                    for j in i + 1..n {
                        if self.ints[i] == self.ints[j] {
                            return Some(vec![i, j]);
                        }
                    }
                }
                for i in 0..n {
                    for j in i + 1..n {
                        for k in j + 1..n {
                            if self.orient_idx(i, j, k) == 0 {
                                return Some(vec![i, j, k]);
                            }
                        }
                    }
                }
                None
            })
            .as_deref()
    }

    pub fn require_generic(&self) -> Result<()> {
        match self.degeneracy() {
            Some(idx) => Err(Error::NonGeneric { indices: idx.to_vec() }),
            None => Ok(()),
        }
    }

    /// Appends a point.
    pub fn with_point(&self, p: Point) -> Configuration {
        let mut pts = self.points.clone();
        pts.push(p);
        Configuration::new(pts).expect("non-empty")
    }

    /// Removes point `i`; later indices shift down by one.
    pub fn without(&self, i: usize) -> Result<Configuration> {
        self.check_index(i)?;
        let mut pts = self.points.clone();
        pts.remove(i);
        Configuration::new(pts)
    }

    /// Keeps the listed points, in the listed order.
    pub fn select(&self, indices: &[usize]) -> Result<Configuration> {
        for &i in indices {
            self.check_index(i)?;
        }
        Configuration::new(indices.iter().map(|&i| self.points[i].clone()).collect())
    }

    /// New point `i` is old point `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Configuration> {
        if perm.len() != self.len() {
            return Err(Error::InvalidArgument("permutation length mismatch".into()));
        }
        self.select(perm)
    }

    /// Reflection in the y axis.
    pub fn mirrored(&self) -> Configuration {
        Configuration::new(self.points.iter().map(|p| Point::new(-p.x.clone(), p.y.clone())).collect())
            .expect("non-empty")
    }
}

/// Is the configuration generic: distinct points, no three collinear.
pub fn is_generic(c: &Configuration) -> bool {
    c.degeneracy().is_none()
}

pub(crate) fn separating_count_unchecked(c: &Configuration, i: usize, j: usize) -> usize {
    let n = c.len();
    let mut count = 0;
    for a in 0..n {
        if a == i || a == j {
            continue;
        }
        for b in a + 1..n {
            if b == i || b == j {
                continue;
            }
            if c.orient_idx(a, b, i) != c.orient_idx(a, b, j) {
                count += 1;
            }
        }
    }
    count
}

/// `n(P_i, P_j)`: number of lines through two other points separating `P_i` from `P_j`.
pub fn separating_count(c: &Configuration, i: usize, j: usize) -> Result<usize> {
    c.check_index(i)?;
    c.check_index(j)?;
    if i == j {
        return Err(Error::InvalidArgument("separating_count needs two distinct points".into()));
    }
    c.require_generic()?;
    Ok(separating_count_unchecked(c, i, j))
}

/// The Orchard two-colouring.
///
/// Class 0 ("black") is the larger class; on a tie it is the class of point 0.
/// `sizes` is the unordered pair `(a, b)` with `a <= b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrchardPartition {
    colors: Vec<u8>,
    sizes: (usize, usize),
}

impl OrchardPartition {
    /// Builds the colouring from `same(j)`: whether point `j` is related to point 0.
    pub(crate) fn from_relation_to_first(n: usize, same: impl Fn(usize) -> bool) -> Self {
        let mut colors = vec![0u8; n];
        for (j, c) in colors.iter_mut().enumerate().skip(1) {
            *c = if same(j) { 0 } else { 1 };
        }
        let ones = colors.iter().filter(|&&c| c == 1).count();
        let zeros = n - ones;
        if ones > zeros {
            for c in &mut colors {
                *c ^= 1;
            }
        }
        let sizes = (zeros.min(ones), zeros.max(ones));
        OrchardPartition { colors, sizes }
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, i: usize) -> u8 {
        self.colors[i]
    }

    pub fn sizes(&self) -> (usize, usize) {
        self.sizes
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn is_monochromatic(&self) -> bool {
        self.sizes.0 == 0
    }

    pub fn same_class(&self, i: usize, j: usize) -> bool {
        self.colors[i] == self.colors[j]
    }
}

impl fmt::Display for OrchardPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.sizes.0, self.sizes.1)?;
        if self.is_monochromatic() {
            write!(f, " mono")?;
        }
        Ok(())
    }
}

/// Parity of `n - 3`, valid for every `n >= 1`.
pub(crate) fn orchard_parity(n: usize) -> usize {
    (n + 1) % 2
}

/// The Orchard partition of a generic configuration.
pub fn orchard_partition(c: &Configuration) -> Result<OrchardPartition> {
    c.require_generic()?;
    let n = c.len();
    let parity = orchard_parity(n);
    Ok(OrchardPartition::from_relation_to_first(n, |j| {
        separating_count_unchecked(c, 0, j) % 2 == parity
    }))
}

/// Counts from the decomposition of the plane by the three lines of a triple.
///
/// `alpha_x` counts lines through two of the remaining points that separate
/// `P_x` from the other two; `sigma_0` counts remaining points inside the
/// triangle and `sigma_x` those in the triangle opposite `P_x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct LemmaDecomposition {
    pub alpha_i: usize,
    pub alpha_j: usize,
    pub alpha_k: usize,
    pub sigma_0: usize,
    pub sigma_i: usize,
    pub sigma_j: usize,
    pub sigma_k: usize,
}

pub fn lemma_decomposition(c: &Configuration, i: usize, j: usize, k: usize) -> Result<LemmaDecomposition> {
    for x in [i, j, k] {
        c.check_index(x)?;
    }
    if i == j || j == k || i == k {
        return Err(Error::InvalidArgument("lemma_decomposition needs three distinct points".into()));
    }
    c.require_generic()?;
    let n = c.len();
    let rest: Vec<usize> = (0..n).filter(|&x| x != i && x != j && x != k).collect();
    let mut d = LemmaDecomposition::default();
    for (ai, &a) in rest.iter().enumerate() {
        for &b in &rest[ai + 1..] {
            let (si, sj, sk) = (c.orient_idx(a, b, i), c.orient_idx(a, b, j), c.orient_idx(a, b, k));
            if si != sj && si != sk {
                d.alpha_i += 1;
            } else if sj != si && sj != sk {
                d.alpha_j += 1;
            } else if sk != si && sk != sj {
                d.alpha_k += 1;
            }
        }
    }
    for &q in &rest {
        // Is q on the same side of each side line as the opposite vertex?
        let ei = c.orient_idx(j, k, q) == c.orient_idx(j, k, i);
        let ej = c.orient_idx(k, i, q) == c.orient_idx(k, i, j);
        let ek = c.orient_idx(i, j, q) == c.orient_idx(i, j, k);
        match (ei, ej, ek) {
            (true, true, true) => d.sigma_0 += 1,
            (false, true, true) | (true, false, false) => d.sigma_i += 1,
            (true, false, true) | (false, true, false) => d.sigma_j += 1,
            (true, true, false) | (false, false, true) => d.sigma_k += 1,
            (false, false, false) => unreachable!("no affine point is outside all three half-planes"),
        }
    }
    Ok(d)
}

/// Convex hull vertices in counterclockwise order, starting at the
/// lexicographically smallest point.
pub fn hull_indices(c: &Configuration) -> Result<Vec<usize>> {
    c.require_generic()?;
    let pts = c.ints();
    let mut order: Vec<usize> = (0..c.len()).collect();
    order.sort_by(|&a, &b| (&pts[a].x, &pts[a].y).cmp(&(&pts[b].x, &pts[b].y)));
    if order.len() < 3 {
        return Ok(order);
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * order.len());
    // Lower chain left to right, then upper chain right to left.
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(order.iter())
        } else {
            Box::new(order.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 {
                let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
                if c.orient_idx(a, b, p) > 0 {
                    break;
                }
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    Ok(hull)
}

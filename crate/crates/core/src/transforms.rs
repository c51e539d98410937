//! Mutations of configurations: flips, infinitesimally close pairs and their
//! contraction, minimal representatives, point doubling and adding a close
//! pair on the convex hull.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::census::realize;
use crate::error::{Error, Result};
use crate::geometry::{
    hull_indices, orchard_partition, orient, separating_count_unchecked, Configuration, Point,
};
use crate::ordertype::{canonical_key, chirotope_of, require_valid, valid_after_flip, CanonicalKey, Chirotope};

/// Negation of the orientation of one triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlipMove {
    pub triple: [usize; 3],
}

impl FlipMove {
    /// The move on the given three indices, stored sorted.
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut triple = [a, b, c];
        triple.sort_unstable();
        FlipMove { triple }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.triple.contains(&i)
    }
}

/// Two points with no separating line, `r < s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClosePair {
    pub r: usize,
    pub s: usize,
}

/// Triples whose negation keeps the chirotope valid.
pub fn find_flips(chi: &Chirotope) -> Result<Vec<FlipMove>> {
    require_valid(chi)?;
    let n = chi.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if valid_after_flip(chi, [a, b, c]) {
                    out.push(FlipMove { triple: [a, b, c] });
                }
            }
        }
    }
    Ok(out)
}

fn check_move(n: usize, m: &FlipMove) -> Result<()> {
    let [a, b, c] = m.triple;
    for i in m.triple {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
    }
    if a == b || b == c || a == c {
        return Err(Error::IllegalFlip { triple: m.triple });
    }
    Ok(())
}

pub fn apply_flip_chi(chi: &Chirotope, m: &FlipMove) -> Result<Chirotope> {
    require_valid(chi)?;
    check_move(chi.len(), m)?;
    let mut t = m.triple;
    t.sort_unstable();
    if !valid_after_flip(chi, t) {
        return Err(Error::IllegalFlip { triple: m.triple });
    }
    chi.with_negated_triple(t[0], t[1], t[2])
}

fn sub(p: &Point, q: &Point) -> Point {
    Point::new(&p.x - &q.x, &p.y - &q.y)
}

fn add(p: &Point, q: &Point) -> Point {
    Point::new(&p.x + &q.x, &p.y + &q.y)
}

fn scale(p: &Point, t: &BigRational) -> Point {
    Point::new(&p.x * t, &p.y * t)
}

fn cross(u: &Point, v: &Point) -> BigRational {
    &u.x * &v.y - &u.y * &v.x
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// Moves one vertex of the triple across the line of the other two, keeping
/// every other orientation.
///
/// The vertex goes to a point just past the middle of the stretch of that
/// line it can reach without crossing another connecting line. Some legal
/// flips need the other points to move as well; those are realized afresh,
/// starting from the current coordinates, on an integer grid.
pub fn apply_flip_geom(c: &Configuration, m: &FlipMove) -> Result<Configuration> {
    c.require_generic()?;
    check_move(c.len(), m)?;
    for &v in &m.triple {
        let others: Vec<usize> = m.triple.iter().copied().filter(|&x| x != v).collect();
        if let Some(p) = crossing_target(c, v, others[0], others[1]) {
            let mut pts = c.points().to_vec();
            pts[v] = p;
            return Configuration::new(pts);
        }
    }
    let target = apply_flip_chi(&chirotope_of(c)?, m)?;
    let start: Vec<(f64, f64)> = c.ints().iter().map(|p| (p.x.to_f64(), p.y.to_f64())).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    match realize::realize_near(&target, &start, FLIP_REALIZE_ATTEMPTS, &mut rng) {
        Some(pts) => Configuration::from_int_points(pts),
        None => Err(Error::PerturbationFailed),
    }
}

const FLIP_REALIZE_ATTEMPTS: usize = 16;

fn crossing_target(c: &Configuration, v: usize, a: usize, b: usize) -> Option<Point> {
    let n = c.len();
    let pts = c.points();
    let (pa, pb, pv) = (&pts[a], &pts[b], &pts[v]);
    let dir = sub(pb, pa);
    // Feasible parameters along a + t (b - a), as an open interval.
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    let mut constraints = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if x == v || y == v || (x.min(y), x.max(y)) == (a.min(b), a.max(b)) {
                continue;
            }
            let sigma = orient(&pts[x], &pts[y], pv);
            let axis = sub(&pts[y], &pts[x]);
            let alpha = cross(&axis, &sub(pa, &pts[x]));
            let beta = cross(&axis, &dir);
            constraints.push((x, y, sigma));
            if beta.is_zero() {
                if alpha.is_zero() || (alpha.is_positive() != (sigma > 0)) {
                    return None;
                }
                continue;
            }
            let root = -&alpha / &beta;
            if beta.is_positive() == (sigma > 0) {
                if lo.as_ref().is_none_or(|l| root > *l) {
                    lo = Some(root);
                }
            } else if hi.as_ref().is_none_or(|h| root < *h) {
                hi = Some(root);
            }
        }
    }
    let t = match (&lo, &hi) {
        (Some(l), Some(h)) if l >= h => return None,
        (Some(l), Some(h)) => (l + h) * half(),
        (Some(l), None) => l + BigRational::one(),
        (None, Some(h)) => h - BigRational::one(),
        (None, None) => half(),
    };
    let foot = add(pa, &scale(&dir, &t));
    let beyond = sub(&foot, pv);
    let side = orient(pa, pb, pv);
    let mut delta = BigRational::one();
    for _ in 0..256 {
        let cand = add(&foot, &scale(&beyond, &delta));
        let ok = orient(pa, pb, &cand) == -side
            && constraints
                .iter()
                .all(|&(x, y, sigma)| orient(&pts[x], &pts[y], &cand) == sigma);
        if ok {
            return Some(cand);
        }
        delta *= half();
    }
    None
}

/// All pairs with separating count zero, in lexicographic order.
pub fn infinitesimal_pairs(c: &Configuration) -> Result<Vec<ClosePair>> {
    c.require_generic()?;
    let n = c.len();
    let mut out = Vec::new();
    for r in 0..n {
        for s in r + 1..n {
            if separating_count_unchecked(c, r, s) == 0 {
                out.push(ClosePair { r, s });
            }
        }
    }
    Ok(out)
}

fn close_pairs_chi(chi: &Chirotope) -> Vec<ClosePair> {
    let n = chi.len();
    let mut out = Vec::new();
    for r in 0..n {
        for s in r + 1..n {
            let separated = (0..n)
                .filter(|&a| a != r && a != s)
                .any(|a| ((a + 1)..n).filter(|&b| b != r && b != s).any(|b| chi.sign(a, b, r) != chi.sign(a, b, s)));
            if !separated {
                out.push(ClosePair { r, s });
            }
        }
    }
    out
}

/// Removes the smaller index of a close pair.
pub fn contract(c: &Configuration, p: &ClosePair) -> Result<Configuration> {
    c.check_index(p.r)?;
    c.check_index(p.s)?;
    c.require_generic()?;
    if p.r >= p.s || separating_count_unchecked(c, p.r, p.s) != 0 {
        return Err(Error::NotClosePair { pair: [p.r, p.s] });
    }
    c.without(p.r)
}

/// Contracts close pairs until none is left, always taking the first.
pub fn minimal_representative(c: &Configuration) -> Result<Configuration> {
    minimal_representative_by(c, |_| 0)
}

/// Like [`minimal_representative`], with `choose` picking which of the
/// currently available close pairs to contract.
pub fn minimal_representative_by(
    c: &Configuration,
    mut choose: impl FnMut(&[ClosePair]) -> usize,
) -> Result<Configuration> {
    c.require_generic()?;
    let mut chi = chirotope_of(c)?;
    let mut alive: Vec<usize> = (0..c.len()).collect();
    loop {
        let pairs = close_pairs_chi(&chi);
        if pairs.is_empty() {
            return c.select(&alive);
        }
        let pick = choose(&pairs);
        let p = pairs.get(pick).ok_or_else(|| {
            Error::InvalidArgument(format!("chose close pair {pick} of {}", pairs.len()))
        })?;
        chi = chi.without(p.r)?;
        alive.remove(p.r);
    }
}

/// Unoriented key of the minimal representative.
pub fn minimal_key(c: &Configuration) -> Result<CanonicalKey> {
    canonical_key(&chirotope_of(&minimal_representative(c)?)?, false)
}

fn angle_order(u: &Point, v: &Point) -> Ordering {
    let upper = |p: &Point| p.y.is_positive() || (p.y.is_zero() && p.x.is_positive());
    match (upper(u), upper(v)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => {
            let c = cross(u, v);
            if c.is_positive() {
                Ordering::Less
            } else if c.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        }
    }
}

/// Number of opposite cone pairs at a point of an `n`-point configuration.
pub fn cone_count(n: usize) -> usize {
    n.saturating_sub(1)
}

/// Adds a point infinitesimally close to `P_i` inside cone pair `cone`.
///
/// The directions from `P_i` to the other points and their opposites, sorted
/// by angle from the positive x axis, cut the plane into `2(n-1)` cones; cone
/// `k` lies between directions `k` and `k + 1`, and cones `k` and `k + n - 1`
/// are opposite.
pub fn double_point(c: &Configuration, i: usize, cone: usize) -> Result<Configuration> {
    c.check_index(i)?;
    c.require_generic()?;
    let n = c.len();
    if n < 2 {
        return Err(Error::InvalidArgument("doubling needs at least two points".into()));
    }
    let cones = cone_count(n);
    if cone >= cones {
        return Err(Error::ConeOutOfRange { cone, cones });
    }
    let pi = c.point(i);
    let mut dirs: Vec<Point> = Vec::with_capacity(2 * cones);
    for j in (0..n).filter(|&j| j != i) {
        let d = sub(c.point(j), pi);
        dirs.push(Point::new(-d.x.clone(), -d.y.clone()));
        dirs.push(d);
    }
    dirs.sort_by(angle_order);
    let inside = if n == 2 {
        Point::new(-dirs[cone].y.clone(), dirs[cone].x.clone())
    } else {
        add(&dirs[cone], &dirs[cone + 1])
    };
    let mut eps = BigRational::one();
    for _ in 0..256 {
        let cand = c.with_point(add(pi, &scale(&inside, &eps)));
        if cand.degeneracy().is_none() && separating_count_unchecked(&cand, i, n) == 0 {
            return Ok(cand);
        }
        eps *= half();
    }
    Err(Error::PerturbationFailed)
}

/// Appends two infinitesimally close points that are both extreme.
///
/// Placements run over hull edges and the stretches of each edge between
/// crossings with connecting lines, pushed outward until valid. A
/// monochromatic input with an odd point count prefers a placement that keeps
/// the output monochromatic.
pub fn add_hull_infinitesimal_pair(c: &Configuration) -> Result<Configuration> {
    c.require_generic()?;
    let n = c.len();
    let pts = c.points();
    if n == 1 {
        let p = &pts[0];
        return Ok(c
            .with_point(add(p, &Point::from_ints(1, 0)))
            .with_point(add(p, &Point::from_ints(0, 1))));
    }
    let want_mono = n % 2 == 1 && orchard_partition(c)?.is_monochromatic();
    let hull = hull_indices(c)?;
    let edges: Vec<(usize, usize)> = if n == 2 {
        vec![(0, 1), (1, 0)]
    } else {
        (0..hull.len()).map(|k| (hull[k], hull[(k + 1) % hull.len()])).collect()
    };
    let mut fallback = None;
    for &(u, v) in &edges {
        for (s0, s1) in edge_stretches(c, u, v) {
            let Some(out) = place_pair(c, u, v, &s0, &s1) else {
                continue;
            };
            if !want_mono || orchard_partition(&out)?.is_monochromatic() {
                return Ok(out);
            }
            fallback.get_or_insert(out);
        }
    }
    fallback.ok_or(Error::PlacementFailed)
}

/// Parameter intervals of the edge `u -> v` between consecutive crossings
/// with lines through two other points.
fn edge_stretches(c: &Configuration, u: usize, v: usize) -> Vec<(BigRational, BigRational)> {
    let pts = c.points();
    let n = c.len();
    let (pu, pv) = (&pts[u], &pts[v]);
    let dir = sub(pv, pu);
    let mut cuts = vec![BigRational::zero(), BigRational::one()];
    for x in 0..n {
        for y in x + 1..n {
            if [x, y].iter().any(|&z| z == u || z == v) {
                continue;
            }
            let axis = sub(&pts[y], &pts[x]);
            let beta = cross(&axis, &dir);
            if beta.is_zero() {
                continue;
            }
            let t = -cross(&axis, &sub(pu, &pts[x])) / beta;
            if t.is_positive() && t < BigRational::one() {
                cuts.push(t);
            }
        }
    }
    cuts.sort();
    cuts.dedup();
    cuts.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect()
}

fn place_pair(c: &Configuration, u: usize, v: usize, s0: &BigRational, s1: &BigRational) -> Option<Configuration> {
    let pts = c.points();
    let n = c.len();
    let (pu, pv) = (&pts[u], &pts[v]);
    let dir = sub(pv, pu);
    // Outward normal: the interior is to the left of u -> v.
    let normal = Point::new(dir.y.clone(), -dir.x.clone());
    let width = s1 - s0;
    let quarter = BigRational::new(1.into(), 4.into());
    let a = s0 + &width * &quarter;
    let b = s1 - &width * &quarter;
    let mut t = quarter.clone();
    for _ in 0..128 {
        let lift = scale(&normal, &t);
        let p = add(&add(pu, &scale(&dir, &a)), &lift);
        let q = add(&add(pu, &scale(&dir, &b)), &lift);
        let cand = c.with_point(p).with_point(q);
        if cand.degeneracy().is_none() && separating_count_unchecked(&cand, n, n + 1) == 0 {
            if let Ok(h) = hull_indices(&cand) {
                if h.contains(&n) && h.contains(&(n + 1)) {
                    return Some(cand);
                }
            }
        }
        t *= half();
    }
    None
}

/// Every key reachable by one contraction.
pub fn contraction_keys(c: &Configuration) -> Result<Vec<CanonicalKey>> {
    let mut keys = Vec::new();
    for p in infinitesimal_pairs(c)? {
        keys.push(canonical_key(&chirotope_of(&contract(c, &p)?)?, false)?);
    }
    keys.sort();
    keys.dedup();
    Ok(keys)
}

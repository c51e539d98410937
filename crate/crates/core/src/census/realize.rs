//! Realizing a prescribed chirotope near a starting configuration.
//!
//! Gradient descent on a hinge loss over all triple orientations in floating
//! point, followed by rounding to an integer grid and an exact check. Only
//! the exact check certifies anything; failure proves nothing.

use rand::Rng;

use crate::exact::{orient, Int, IntPoint};
use crate::ordertype::Chirotope;

/// Descent steps per attempt.
const STEPS: usize = 6000;

/// A realization of `target` with integer coordinates, or `None` when the
/// search gives up.
pub(crate) fn realize_near(
    target: &Chirotope,
    start: &[(f64, f64)],
    attempts: usize,
    rng: &mut impl Rng,
) -> Option<Vec<IntPoint>> {
    let n = target.len();
    debug_assert_eq!(start.len(), n);
    let mut triples = Vec::with_capacity(n * n * n / 6);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                triples.push((i, j, k, target.sign(i, j, k) as f64));
            }
        }
    }
    for attempt in 0..attempts {
        let mut pts: Vec<(f64, f64)> = start.to_vec();
        if attempt > 0 {
            let amp = 0.05 * attempt as f64;
            for p in pts.iter_mut() {
                p.0 += rng.gen_range(-amp..amp);
                p.1 += rng.gen_range(-amp..amp);
            }
        }
        rescale(&mut pts);
        if let Some(found) = descend(target, &triples, pts) {
            return Some(found);
        }
    }
    None
}

/// Translates and scales uniformly into the unit square.
fn rescale(pts: &mut [(f64, f64)]) {
    let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in pts.iter() {
        lo_x = lo_x.min(x);
        lo_y = lo_y.min(y);
        hi_x = hi_x.max(x);
        hi_y = hi_y.max(y);
    }
    let span = (hi_x - lo_x).max(hi_y - lo_y).max(f64::MIN_POSITIVE);
    for p in pts.iter_mut() {
        p.0 = (p.0 - lo_x) / span;
        p.1 = (p.1 - lo_y) / span;
    }
}

fn descend(target: &Chirotope, triples: &[(usize, usize, usize, f64)], mut pts: Vec<(f64, f64)>) -> Option<Vec<IntPoint>> {
    let n = pts.len();
    let mut margin = 1e-3;
    let mut grad = vec![(0.0f64, 0.0f64); n];
    let mut best = usize::MAX;
    let mut stall = 0;
    for it in 0..STEPS {
        grad.iter_mut().for_each(|g| *g = (0.0, 0.0));
        let mut violated = 0;
        for &(i, j, k, s) in triples {
            let (pi, pj, pk) = (pts[i], pts[j], pts[k]);
            let det = (pj.0 - pi.0) * (pk.1 - pi.1) - (pj.1 - pi.1) * (pk.0 - pi.0);
            let gap = margin - s * det;
            if gap <= 0.0 {
                continue;
            }
            if s * det <= 0.0 {
                violated += 1;
            }
            let c = -gap * s;
            grad[i].0 += c * (pj.1 - pk.1);
            grad[i].1 += c * (pk.0 - pj.0);
            grad[j].0 += c * (pk.1 - pi.1);
            grad[j].1 += c * (pi.0 - pk.0);
            grad[k].0 += c * (pi.1 - pj.1);
            grad[k].1 += c * (pj.0 - pi.0);
        }
        if violated == 0 {
            if let Some(found) = certify(target, &pts) {
                return Some(found);
            }
        }
        if violated < best {
            best = violated;
            stall = 0;
        } else {
            stall += 1;
            if stall > 200 && margin > 1e-12 {
                // Tight configurations need thin triangles.
                margin *= 0.5;
                stall = 0;
            }
        }
        let norm = grad.iter().map(|g| g.0.abs().max(g.1.abs())).fold(0.0, f64::max);
        if norm == 0.0 {
            margin *= 0.5;
            continue;
        }
        let step = margin.sqrt() * 0.1 * (1.0 - it as f64 / STEPS as f64) / norm;
        for (p, g) in pts.iter_mut().zip(&grad) {
            p.0 -= step * g.0;
            p.1 -= step * g.1;
        }
        rescale(&mut pts);
    }
    None
}

/// Rounds to successively finer integer grids until the orientations are exact.
fn certify(target: &Chirotope, pts: &[(f64, f64)]) -> Option<Vec<IntPoint>> {
    let n = pts.len();
    for bits in [8, 12, 16, 20, 26, 32, 40] {
        let scale = (1u64 << bits) as f64;
        let ints: Vec<IntPoint> = pts
            .iter()
            .map(|&(x, y)| IntPoint {
                x: Int::from((x * scale).round() as i64),
                y: Int::from((y * scale).round() as i64),
            })
            .collect();
        let ok = (0..n).all(|i| {
            (i + 1..n).all(|j| (j + 1..n).all(|k| orient(&ints[i], &ints[j], &ints[k]) == target.sign(i, j, k)))
        });
        if ok {
            return Some(ints);
        }
    }
    None
}

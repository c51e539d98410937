//! One sample point in every open cell of the arrangement of connecting lines.
//!
//! Every cell of an arrangement of at least two non-parallel lines has a
//! vertex on its boundary, so sampling each angular wedge at each vertex
//! reaches all cells. A sample `v + d / 2^k` in the wedge bisected by `d` is
//! pushed close enough to `v` that it stays on `v`'s side of every line not
//! through `v`; the required `k` is read off from bit lengths, so no search is
//! needed.

use std::collections::HashSet;

use crate::exact::{angle_cmp, HPoint, Int, IntPoint, Line};

/// A cell of the arrangement: the signs `orient(p_a, p_b, s)` for all pairs
/// `a < b` in lexicographic order, and a point `s` inside it.
pub(crate) struct CellSample {
    pub column: u128,
    pub point: HPoint,
}

impl CellSample {
    pub fn sign(&self, line: usize) -> i8 {
        if self.column >> line & 1 == 1 {
            1
        } else {
            -1
        }
    }
}

/// Largest point count whose connecting lines fit the column bitmask.
pub(crate) const MAX_POINTS: usize = 16;

pub(crate) fn lines_of(points: &[IntPoint]) -> Vec<Line> {
    let n = points.len();
    let mut lines = Vec::with_capacity(n * (n - 1) / 2);
    for a in 0..n {
        for b in a + 1..n {
            lines.push(Line::through(&points[a], &points[b]));
        }
    }
    lines
}

/// One sample per distinct cell, in a deterministic order.
pub(crate) fn cell_samples(points: &[IntPoint]) -> Vec<CellSample> {
    let n = points.len();
    assert!((3..=MAX_POINTS).contains(&n), "cell sampling supports 3..=16 points");
    let mut endpoints = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            endpoints.push((a, b));
        }
    }
    let lines = lines_of(points);

    let mut vertices: Vec<HPoint> = points.iter().map(HPoint::from_point).collect();
    let mut seen: HashSet<HPoint> = vertices.iter().cloned().collect();
    for l1 in 0..lines.len() {
        let (a1, b1) = endpoints[l1];
        for l2 in l1 + 1..lines.len() {
            let (a2, b2) = endpoints[l2];
            if a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2 {
                continue; // they meet at a configuration point
            }
            if let Some(v) = lines[l1].meet(&lines[l2]) {
                if seen.insert(v.clone()) {
                    vertices.push(v);
                }
            }
        }
    }

    let mut columns: HashSet<u128> = HashSet::new();
    let mut out = Vec::new();
    let mut values: Vec<Int> = Vec::with_capacity(lines.len());
    let mut through: Vec<usize> = Vec::new();
    for v in &vertices {
        values.clear();
        through.clear();
        for (l, line) in lines.iter().enumerate() {
            let val = line.eval(v);
            if val.is_zero() {
                through.push(l);
            }
            values.push(val);
        }
        if through.len() < 2 {
            continue;
        }
        let mut dirs: Vec<(Int, Int)> = Vec::with_capacity(2 * through.len());
        for &l in &through {
            let (dx, dy) = lines[l].direction();
            dirs.push((dx.neg(), dy.neg()));
            dirs.push((dx, dy));
        }
        dirs.sort_by(angle_cmp);
        for w in 0..dirs.len() {
            let (d1, d2) = (&dirs[w], &dirs[(w + 1) % dirs.len()]);
            let (dx, dy) = (d1.0.add(&d2.0), d1.1.add(&d2.1));
            let mut column = 0u128;
            let mut shift = 0u64;
            for (l, line) in lines.iter().enumerate() {
                let slope = line.slope(&dx, &dy);
                let side = if values[l].is_zero() {
                    slope.signum()
                } else {
                    let s = values[l].signum();
                    if slope.signum() == -s {
                        // need 2^shift * |value| > w * |slope|
                        let need = (v.w.bits() + slope.bits() + 1).saturating_sub(values[l].bits());
                        shift = shift.max(need);
                    }
                    s
                };
                debug_assert!(side != 0);
                if side > 0 {
                    column |= 1 << l;
                }
            }
            if columns.insert(column) {
                let x = v.x.shl(shift).add(&dx.mul(&v.w));
                let y = v.y.shl(shift).add(&dy.mul(&v.w));
                let w = v.w.shl(shift);
                let point = HPoint::normalized(x, y, w).expect("w > 0");
                out.push(CellSample { column, point });
            }
        }
    }
    out
}

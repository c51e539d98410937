//! Integer kernel for the exact predicates.
//!
//! `Int` is an arbitrary-precision integer that stays in an `i128` while the
//! value fits and promotes to `BigInt` on overflow. Every operation is exact.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Int {
    Small(i128),
    Big(BigInt),
}

impl Int {
    pub fn zero() -> Self {
        Int::Small(0)
    }

    pub fn from_big(v: BigInt) -> Self {
        match v.to_i128() {
            Some(s) => Int::Small(s),
            None => Int::Big(v),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Int::Small(v) => *v as f64,
            Int::Big(v) => v.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(v) => v.clone(),
        }
    }

    pub fn signum(&self) -> i8 {
        match self {
            Int::Small(v) => v.signum() as i8,
            Int::Big(v) => {
                if v.is_zero() {
                    0
                } else if v.is_positive() {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.signum() == 0
    }

    /// Number of significant bits of `|self|`; zero for zero.
    pub fn bits(&self) -> u64 {
        match self {
            Int::Small(v) => 128 - v.unsigned_abs().leading_zeros() as u64,
            Int::Big(v) => v.bits(),
        }
    }

    pub fn neg(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(a) => Int::Small(a),
                None => Int::Big(-BigInt::from(*v)),
            },
            Int::Big(v) => Int::from_big(-v),
        }
    }

    pub fn add(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(r) = a.checked_add(*b) {
                return Int::Small(r);
            }
        }
        Int::from_big(self.to_big() + o.to_big())
    }

    pub fn sub(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(r) = a.checked_sub(*b) {
                return Int::Small(r);
            }
        }
        Int::from_big(self.to_big() - o.to_big())
    }

    pub fn mul(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(r) = a.checked_mul(*b) {
                return Int::Small(r);
            }
        }
        Int::from_big(self.to_big() * o.to_big())
    }

    pub fn shl(&self, k: u64) -> Int {
        if let Int::Small(a) = self {
            if k < 127 && self.bits() + k < 127 {
                return Int::Small(a << k);
            }
        }
        Int::from_big(self.to_big() << k as usize)
    }

    pub fn gcd(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if *a != i128::MIN && *b != i128::MIN {
                return Int::Small(a.gcd(b));
            }
        }
        Int::from_big(self.to_big().gcd(&o.to_big()))
    }

    pub fn div_exact(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(r) = a.checked_div(*b) {
                return Int::Small(r);
            }
        }
        Int::from_big(self.to_big() / o.to_big())
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v as i128)
    }
}

impl From<BigInt> for Int {
    fn from(v: BigInt) -> Self {
        Int::from_big(v)
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

/// A point with integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct IntPoint {
    pub x: Int,
    pub y: Int,
}

impl IntPoint {
    #[cfg(test)]
    pub fn new(x: impl Into<Int>, y: impl Into<Int>) -> Self {
        IntPoint {
            x: x.into(),
            y: y.into(),
        }
    }
}

/// Sign of the determinant of `(b - a, c - a)`: +1 counterclockwise.
pub(crate) fn orient(a: &IntPoint, b: &IntPoint, c: &IntPoint) -> i8 {
    let l = b.x.sub(&a.x).mul(&c.y.sub(&a.y));
    let r = b.y.sub(&a.y).mul(&c.x.sub(&a.x));
    match l.cmp(&r) {
        Ordering::Greater => 1,
        Ordering::Less => -1,
        Ordering::Equal => 0,
    }
}

/// A point in homogeneous integer coordinates `(x/w, y/w)` with `w > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct HPoint {
    pub x: Int,
    pub y: Int,
    pub w: Int,
}

impl HPoint {
    /// Normalizes to `w > 0` and coprime coordinates. Returns `None` at infinity.
    pub fn normalized(x: Int, y: Int, w: Int) -> Option<HPoint> {
        if w.is_zero() {
            return None;
        }
        let (x, y, w) = if w.signum() < 0 {
            (x.neg(), y.neg(), w.neg())
        } else {
            (x, y, w)
        };
        let g = x.gcd(&y).gcd(&w);
        if let Int::Small(1) = g {
            return Some(HPoint { x, y, w });
        }
        Some(HPoint {
            x: x.div_exact(&g),
            y: y.div_exact(&g),
            w: w.div_exact(&g),
        })
    }

    pub fn from_point(p: &IntPoint) -> HPoint {
        HPoint {
            x: p.x.clone(),
            y: p.y.clone(),
            w: Int::Small(1),
        }
    }
}

/// The line through `p` and `q` as `a x + b y + c`, whose sign at a point `s`
/// equals `orient(p, q, s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Line {
    pub a: Int,
    pub b: Int,
    pub c: Int,
}

impl Line {
    pub fn through(p: &IntPoint, q: &IntPoint) -> Line {
        Line {
            a: p.y.sub(&q.y),
            b: q.x.sub(&p.x),
            c: p.x.mul(&q.y).sub(&p.y.mul(&q.x)),
        }
    }

    /// `a x + b y + c w`; its sign is the side of the line for `w > 0`.
    pub fn eval(&self, p: &HPoint) -> Int {
        self.a
            .mul(&p.x)
            .add(&self.b.mul(&p.y))
            .add(&self.c.mul(&p.w))
    }

    /// Rate of change of the line value along direction `(dx, dy)`.
    pub fn slope(&self, dx: &Int, dy: &Int) -> Int {
        self.a.mul(dx).add(&self.b.mul(dy))
    }

    /// Direction vector, oriented from `p` towards `q`.
    pub fn direction(&self) -> (Int, Int) {
        (self.b.clone(), self.a.neg())
    }

    pub fn meet(&self, o: &Line) -> Option<HPoint> {
        let x = self.b.mul(&o.c).sub(&self.c.mul(&o.b));
        let y = self.c.mul(&o.a).sub(&self.a.mul(&o.c));
        let w = self.a.mul(&o.b).sub(&self.b.mul(&o.a));
        HPoint::normalized(x, y, w)
    }
}

/// Angular comparison of nonzero directions, counterclockwise from the positive x axis.
pub(crate) fn angle_cmp(a: &(Int, Int), b: &(Int, Int)) -> Ordering {
    fn half(d: &(Int, Int)) -> u8 {
        let ys = d.1.signum();
        if ys > 0 || (ys == 0 && d.0.signum() > 0) {
            0
        } else {
            1
        }
    }
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha.cmp(&hb);
    }
    // Same half-plane: a before b when b is counterclockwise of a.
    let cross = a.0.mul(&b.1).sub(&a.1.mul(&b.0));
    match cross.signum() {
        1 => Ordering::Less,
        -1 => Ordering::Greater,
        _ => Ordering::Equal,
    }
}

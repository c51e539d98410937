//! Canonical keys: the lexicographically least lambda matrix over all
//! relabelings by angular order around a base point.

use std::cmp::Ordering;
use std::fmt;

use super::{require_valid, Chirotope};
use crate::error::{Error, Result};

/// A complete invariant of a chirotope up to relabeling (oriented) or up to
/// relabeling and mirror image (unoriented).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    oriented: bool,
    bytes: Vec<u8>,
}

impl CanonicalKey {
    pub fn is_oriented(&self) -> bool {
        self.oriented
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }

    pub fn to_hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(hex: &str, oriented: bool) -> Result<Self> {
        if !hex.len().is_multiple_of(2) {
            return Err(Error::InvalidArgument("odd-length hex key".into()));
        }
        let bytes = (0..hex.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&hex[i..i + 2], 16))
            .collect::<std::result::Result<Vec<u8>, _>>()
            .map_err(|e| Error::InvalidArgument(format!("bad hex key: {e}")))?;
        Ok(CanonicalKey { oriented, bytes })
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// `lambda[i * n + j]` = number of points strictly left of the directed line `i -> j`.
fn lambda(chi: &Chirotope) -> Vec<u8> {
    let n = chi.len();
    let mut lam = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                lam[i * n + j] = (0..n).filter(|&k| chi.sign(i, j, k) > 0).count() as u8;
            }
        }
    }
    lam
}

/// The other points in counterclockwise order around `p` (under sign `s`),
/// starting from the lowest-numbered one.
fn cyclic_order(chi: &Chirotope, p: usize, s: i8, out: &mut Vec<usize>) {
    out.clear();
    let n = chi.len();
    let Some(q0) = (0..n).find(|&x| x != p) else {
        return;
    };
    let mut right = Vec::new();
    out.push(q0);
    for x in 0..n {
        if x == p || x == q0 {
            continue;
        }
        if s * chi.sign(p, q0, x) > 0 {
            out.push(x);
        } else {
            right.push(x);
        }
    }
    let by_angle = |a: &usize, b: &usize| {
        if s * chi.sign(p, *a, *b) > 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    };
    out[1..].sort_by(by_angle);
    right.sort_by(by_angle);
    out.extend(right);
}

pub(crate) fn canonical_key_unchecked(chi: &Chirotope, oriented: bool) -> CanonicalKey {
    let n = chi.len();
    let lam = lambda(chi);
    let span = n.saturating_sub(2) as u8;
    let width = n * n.saturating_sub(1);
    let mut best: Vec<u8> = Vec::with_capacity(width);
    let mut cand = vec![0u8; width];
    let mut cyc = Vec::with_capacity(n);
    let mut order = vec![0usize; n];
    let signs: &[i8] = if oriented { &[1] } else { &[1, -1] };
    for &s in signs {
        for p in 0..n {
            cyclic_order(chi, p, s, &mut cyc);
            let m = cyc.len();
            for start in 0..m {
                order[0] = p;
                for u in 0..m {
                    order[1 + u] = cyc[(start + u) % m];
                }
                // Stream the relabeled matrix, abandoning it once it exceeds the best.
                let mut state = if best.is_empty() { Ordering::Less } else { Ordering::Equal };
                let mut idx = 0;
                'rows: for a in 0..n {
                    let row = order[a] * n;
                    for b in 0..n {
                        if a == b {
                            continue;
                        }
                        let raw = lam[row + order[b]];
                        let v = if s > 0 { raw } else { span - raw };
                        if state == Ordering::Equal {
                            state = v.cmp(&best[idx]);
                            if state == Ordering::Greater {
                                break 'rows;
                            }
                        }
                        cand[idx] = v;
                        idx += 1;
                    }
                }
                if state == Ordering::Less {
                    best.clear();
                    best.extend_from_slice(&cand);
                }
            }
        }
    }
    let mut bytes = Vec::with_capacity(width + 1);
    bytes.push(n as u8);
    bytes.extend_from_slice(&best);
    CanonicalKey { oriented, bytes }
}

/// Canonical key of a valid chirotope on at most 255 points.
pub fn canonical_key(chi: &Chirotope, oriented: bool) -> Result<CanonicalKey> {
    require_valid(chi)?;
    if chi.len() > 255 {
        return Err(Error::InvalidArgument("canonical keys support at most 255 points".into()));
    }
    Ok(canonical_key_unchecked(chi, oriented))
}

pub fn is_isomorphic(a: &Chirotope, b: &Chirotope, oriented: bool) -> Result<bool> {
    if a.len() != b.len() {
        require_valid(a)?;
        require_valid(b)?;
        return Ok(false);
    }
    Ok(canonical_key(a, oriented)? == canonical_key(b, oriented)?)
}

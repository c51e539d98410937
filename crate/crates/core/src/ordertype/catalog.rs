//! Chirotope validation against the catalog of realizable 5-point sign vectors.
//!
//! A uniform sign map is an affine rank-3 chirotope iff every 4-subset is
//! acyclic and every 5-subset restriction is realizable. The 5-point catalog
//! is generated from one realization of each of the three 5-point order types
//! under all relabelings and reflection.

use std::sync::OnceLock;

use super::Chirotope;
use crate::error::{Error, Result, Violation, ViolationKind};
use crate::geometry::Configuration;

/// Increasing triples of `0..5` in lexicographic order.
pub(crate) const FIVE_TRIPLES: [[usize; 3]; 10] = [
    [0, 1, 2],
    [0, 1, 3],
    [0, 1, 4],
    [0, 2, 3],
    [0, 2, 4],
    [0, 3, 4],
    [1, 2, 3],
    [1, 2, 4],
    [1, 3, 4],
    [2, 3, 4],
];

const REPRESENTATIVES: [[(i64, i64); 5]; 3] = [
    [(0, 0), (4, 0), (6, 3), (2, 6), (-2, 3)],
    [(0, 0), (6, 0), (6, 6), (0, 6), (2, 3)],
    [(0, 0), (12, 0), (5, 12), (4, 3), (7, 4)],
];

/// Bit `t` is set when triple `FIVE_TRIPLES[t]` of `idx` is positive.
pub(crate) fn mask5(chi: &Chirotope, idx: [usize; 5]) -> usize {
    FIVE_TRIPLES.iter().enumerate().fold(0, |m, (t, tr)| {
        if chi.sign(idx[tr[0]], idx[tr[1]], idx[tr[2]]) > 0 {
            m | (1 << t)
        } else {
            m
        }
    })
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

pub(crate) fn catalog() -> &'static [bool] {
    static CATALOG: OnceLock<Vec<bool>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut table = vec![false; 1 << 10];
        for rep in REPRESENTATIVES {
            let c = Configuration::from_ints(&rep).expect("non-empty");
            let chi = super::chirotope_of(&c).expect("catalog representatives are generic");
            for perm in permutations(5) {
                let p: [usize; 5] = perm.try_into().unwrap();
                let m = mask5(&chi, p);
                table[m] = true;
                // The mirror image negates every sign.
                table[!m & 0x3ff] = true;
            }
        }
        table
    })
}

fn is_cyclic4(chi: &Chirotope, a: usize, b: usize, c: usize, d: usize) -> bool {
    let s = [chi.sign(b, c, d), -chi.sign(a, c, d), chi.sign(a, b, d), -chi.sign(a, b, c)];
    s.iter().all(|&v| v == s[0])
}

/// Checks nonzero signs, acyclicity and realizability of every 5-subset.
pub fn validate_chirotope(chi: &Chirotope) -> std::result::Result<(), Violation> {
    let n = chi.len();
    let cat = catalog();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if chi.sign(i, j, k) == 0 {
                    return Err(Violation {
                        kind: ViolationKind::ZeroSign,
                        subset: vec![i, j, k],
                    });
                }
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if is_cyclic4(chi, a, b, c, d) {
                        return Err(Violation {
                            kind: ViolationKind::Cyclic,
                            subset: vec![a, b, c, d],
                        });
                    }
                    for e in d + 1..n {
                        if !cat[mask5(chi, [a, b, c, d, e])] {
                            return Err(Violation {
                                kind: ViolationKind::NotRealizable,
                                subset: vec![a, b, c, d, e],
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn require_valid(chi: &Chirotope) -> Result<()> {
    if chi.is_realized() {
        return Ok(());
    }
    validate_chirotope(chi).map_err(Error::InvalidChirotope)
}

/// Whether negating triple `t` of a valid chirotope keeps it valid.
/// Only subsets containing the triple can change.
pub(crate) fn valid_after_flip(chi: &Chirotope, t: [usize; 3]) -> bool {
    let flipped = match chi.with_negated_triple(t[0], t[1], t[2]) {
        Ok(f) => f,
        Err(_) => return false,
    };
    let n = chi.len();
    let cat = catalog();
    let others: Vec<usize> = (0..n).filter(|x| !t.contains(x)).collect();
    for (ix, &x) in others.iter().enumerate() {
        let mut four = [t[0], t[1], t[2], x];
        four.sort_unstable();
        if is_cyclic4(&flipped, four[0], four[1], four[2], four[3]) {
            return false;
        }
        for &y in &others[ix + 1..] {
            let mut five = [t[0], t[1], t[2], x, y];
            five.sort_unstable();
            if !cat[mask5(&flipped, five)] {
                return false;
            }
        }
    }
    true
}

//! Purely combinatorial one-point extensions: every sign column for a new
//! point that keeps the chirotope valid. Supersets the geometric extensions
//! and tells the enumeration which types it still has to realize.

use crate::ordertype::{catalog, Chirotope, FIVE_TRIPLES};

/// All valid chirotopes on `n + 1` points restricting to `chi` on the first `n`.
pub(crate) fn sign_extensions(chi: &Chirotope) -> Vec<Chirotope> {
    let n = chi.len();
    // Pairs in order (0,1), (0,2), (1,2), (0,3), ...: a constraint is checked
    // once its last pair is assigned.
    let order: Vec<(usize, usize)> = (1..n).flat_map(|b| (0..b).map(move |a| (a, b))).collect();
    let mut col = vec![0i8; n * n];
    let mut out = Vec::new();
    search(chi, &order, 0, &mut col, &mut out);
    out
}

fn search(chi: &Chirotope, order: &[(usize, usize)], depth: usize, col: &mut [i8], out: &mut Vec<Chirotope>) {
    let n = chi.len();
    if depth == order.len() {
        out.push(chi.extended(|a, b| col[a * n + b]));
        return;
    }
    let (a, b) = order[depth];
    for s in [1i8, -1] {
        col[a * n + b] = s;
        if consistent(chi, col, a, b) {
            search(chi, order, depth + 1, col, out);
        }
    }
    col[a * n + b] = 0;
}

/// Checks the 4- and 5-subsets whose last pair is `(a, b)`.
fn consistent(chi: &Chirotope, col: &[i8], a: usize, b: usize) -> bool {
    let n = chi.len();
    let sign = |i: usize, j: usize, k: usize| if k == n { col[i * n + j] } else { chi.sign(i, j, k) };
    for c in 0..a {
        let s = [sign(a, b, n), -sign(c, b, n), sign(c, a, n), -chi.sign(c, a, b)];
        if s.iter().all(|&v| v == s[0]) {
            return false;
        }
    }
    let cat = catalog();
    for c1 in 0..a {
        for c2 in c1 + 1..a {
            let idx = [c1, c2, a, b, n];
            let mask = FIVE_TRIPLES.iter().enumerate().fold(0usize, |m, (t, tr)| {
                if sign(idx[tr[0]], idx[tr[1]], idx[tr[2]]) > 0 {
                    m | 1 << t
                } else {
                    m
                }
            });
            if !cat[mask] {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordertype::{canonical_key, chirotope_of, validate_chirotope};
    use crate::Configuration;
    use std::collections::HashSet;

    #[test]
    fn extensions_are_valid_and_cover_both_four_point_types() {
        let tri = chirotope_of(&Configuration::from_ints(&[(0, 0), (1, 0), (0, 1)]).unwrap()).unwrap();
        let ext = sign_extensions(&tri);
        // Seven cells of the triangle's arrangement.
        assert_eq!(ext.len(), 7);
        let mut keys = HashSet::new();
        for e in &ext {
            validate_chirotope(e).unwrap();
            keys.insert(canonical_key(e, false).unwrap());
        }
        assert_eq!(keys.len(), 2);
    }
}

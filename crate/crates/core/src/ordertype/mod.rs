//! Purely combinatorial layer: chirotopes and what can be read off them.

mod canonical;
mod catalog;

use std::hash::{Hash, Hasher};

pub use canonical::{canonical_key, is_isomorphic, CanonicalKey};
pub(crate) use canonical::canonical_key_unchecked;
pub use catalog::validate_chirotope;
pub(crate) use catalog::{catalog, require_valid, valid_after_flip, FIVE_TRIPLES};

use crate::error::{Error, Result};
use crate::geometry::{orchard_parity, Configuration, OrchardPartition};

/// Orientation signs of all point triples.
///
/// Stored densely so that `sign(i, j, k)` is a single lookup for every
/// ordering of the indices; repeated indices read as 0.
#[derive(Clone, Debug)]
pub struct Chirotope {
    n: usize,
    signs: Vec<i8>,
    // Known to come from a realization (skips re-validation).
    realized: bool,
}

impl PartialEq for Chirotope {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.signs == other.signs
    }
}

impl Eq for Chirotope {}

impl Hash for Chirotope {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.signs.hash(state);
    }
}

pub(crate) fn triple_count(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

impl Chirotope {
    fn empty(n: usize) -> Self {
        Chirotope {
            n,
            signs: vec![0; n * n * n],
            realized: false,
        }
    }

    fn set(&mut self, i: usize, j: usize, k: usize, s: i8) {
        let n = self.n;
        let mut put = |a: usize, b: usize, c: usize, v: i8| self.signs[(a * n + b) * n + c] = v;
        put(i, j, k, s);
        put(j, k, i, s);
        put(k, i, j, s);
        put(j, i, k, -s);
        put(i, k, j, -s);
        put(k, j, i, -s);
    }

    /// Builds a chirotope from `f(i, j, k)` evaluated on increasing triples.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> i8) -> Self {
        let mut chi = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    chi.set(i, j, k, f(i, j, k).signum());
                }
            }
        }
        chi
    }

    /// Signs of increasing triples in lexicographic order.
    pub fn from_triple_signs(n: usize, signs: &[i8]) -> Result<Self> {
        if signs.len() != triple_count(n) {
            return Err(Error::InvalidArgument(format!(
                "{} points need {} triple signs, got {}",
                n,
                triple_count(n),
                signs.len()
            )));
        }
        if let Some(bad) = signs.iter().find(|s| !(-1..=1).contains(*s)) {
            return Err(Error::InvalidArgument(format!("sign {bad} is not in {{-1, 0, +1}}")));
        }
        let mut it = signs.iter();
        Ok(Self::from_fn(n, |_, _, _| *it.next().unwrap()))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn sign(&self, i: usize, j: usize, k: usize) -> i8 {
        self.signs[(i * self.n + j) * self.n + k]
    }

    pub fn triple_signs(&self) -> Vec<i8> {
        let n = self.n;
        let mut out = Vec::with_capacity(triple_count(n));
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    out.push(self.sign(i, j, k));
                }
            }
        }
        out
    }

    pub(crate) fn is_realized(&self) -> bool {
        self.realized
    }

    pub(crate) fn mark_realized(mut self) -> Self {
        self.realized = true;
        self
    }

    /// Global sign reversal (the mirror image).
    pub fn negated(&self) -> Chirotope {
        Chirotope {
            n: self.n,
            signs: self.signs.iter().map(|s| -s).collect(),
            realized: self.realized,
        }
    }

    /// Relabeling: new point `i` is old point `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Chirotope> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidArgument("not a permutation".into()));
        }
        let mut out = Chirotope::from_fn(self.n, |i, j, k| self.sign(perm[i], perm[j], perm[k]));
        out.realized = self.realized;
        Ok(out)
    }

    /// Restriction to the listed points, in the listed order.
    pub fn restricted(&self, indices: &[usize]) -> Result<Chirotope> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.n) {
            return Err(Error::IndexOutOfRange { index: bad, n: self.n });
        }
        let mut out = Chirotope::from_fn(indices.len(), |i, j, k| self.sign(indices[i], indices[j], indices[k]));
        out.realized = self.realized;
        Ok(out)
    }

    /// Deletes point `i`; later indices shift down by one.
    pub fn without(&self, i: usize) -> Result<Chirotope> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&x| x != i).collect();
        self.restricted(&keep)
    }

    /// The sign map with one triple negated. The result need not be valid.
    pub fn with_negated_triple(&self, i: usize, j: usize, k: usize) -> Result<Chirotope> {
        for x in [i, j, k] {
            if x >= self.n {
                return Err(Error::IndexOutOfRange { index: x, n: self.n });
            }
        }
        if i == j || j == k || i == k {
            return Err(Error::InvalidArgument("triple indices must be distinct".into()));
        }
        let mut out = self.clone();
        let s = self.sign(i, j, k);
        out.set(i, j, k, -s);
        out.realized = false;
        Ok(out)
    }

    /// Appends a point whose sign against every pair `a < b` is `column(a, b)`.
    pub(crate) fn extended(&self, mut column: impl FnMut(usize, usize) -> i8) -> Chirotope {
        let n = self.n;
        let m = n + 1;
        let mut out = Chirotope::empty(m);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    out.set(i, j, k, self.sign(i, j, k));
                }
                out.set(i, j, n, column(i, j));
            }
        }
        out
    }
}

/// The chirotope of a generic configuration.
pub fn chirotope_of(c: &Configuration) -> Result<Chirotope> {
    c.require_generic()?;
    Ok(Chirotope::from_fn(c.len(), |i, j, k| c.orient_idx(i, j, k)).mark_realized())
}

pub(crate) fn separating_count_chi_unchecked(chi: &Chirotope, i: usize, j: usize) -> usize {
    let n = chi.n;
    let mut count = 0;
    for a in 0..n {
        if a == i || a == j {
            continue;
        }
        for b in a + 1..n {
            if b != i && b != j && chi.sign(a, b, i) != chi.sign(a, b, j) {
                count += 1;
            }
        }
    }
    count
}

/// Number of lines `ab` with `chi(a, b, i) != chi(a, b, j)`.
pub fn separating_count_chi(chi: &Chirotope, i: usize, j: usize) -> Result<usize> {
    for x in [i, j] {
        if x >= chi.n {
            return Err(Error::IndexOutOfRange { index: x, n: chi.n });
        }
    }
    if i == j {
        return Err(Error::InvalidArgument("separating_count needs two distinct points".into()));
    }
    Ok(separating_count_chi_unchecked(chi, i, j))
}

pub(crate) fn orchard_partition_chi_unchecked(chi: &Chirotope) -> OrchardPartition {
    let parity = orchard_parity(chi.n);
    OrchardPartition::from_relation_to_first(chi.n, |j| separating_count_chi_unchecked(chi, 0, j) % 2 == parity)
}

pub fn orchard_partition_chi(chi: &Chirotope) -> Result<OrchardPartition> {
    require_valid(chi)?;
    if chi.n == 0 {
        return Err(Error::InvalidArgument("empty chirotope".into()));
    }
    Ok(orchard_partition_chi_unchecked(chi))
}

/// Whether point `i` is extreme: some line through `i` has all other points on one side.
pub(crate) fn is_extreme_chi(chi: &Chirotope, i: usize) -> bool {
    let n = chi.n;
    (0..n).filter(|&j| j != i).any(|j| {
        let mut side = 0i8;
        (0..n).filter(|&k| k != i && k != j).all(|k| {
            let s = chi.sign(i, j, k);
            if side == 0 {
                side = s;
            }
            s == side
        })
    })
}

pub(crate) fn hull_size_chi_unchecked(chi: &Chirotope) -> usize {
    (0..chi.n).filter(|&i| is_extreme_chi(chi, i)).count()
}

/// Number of extreme points.
pub fn hull_size_chi(chi: &Chirotope) -> Result<usize> {
    require_valid(chi)?;
    if chi.n < 3 {
        return Err(Error::InvalidArgument("hull size needs at least 3 points".into()));
    }
    Ok(hull_size_chi_unchecked(chi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Configuration;

    fn chi(pts: &[(i64, i64)]) -> Chirotope {
        chirotope_of(&Configuration::from_ints(pts).unwrap()).unwrap()
    }

    #[test]
    fn chirotope_examples() {
        let tri = chi(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(tri.triple_signs(), vec![1]);
        let quad = chi(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        assert_eq!(quad.triple_signs(), vec![1, 1, 1, 1]);
        let mirrored = chirotope_of(&Configuration::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap().mirrored()).unwrap();
        assert_eq!(mirrored, quad.negated());
    }

    #[test]
    fn alternation() {
        let c = chi(&[(0, 0), (5, 1), (2, 7), (1, 3)]);
        for (i, j, k) in [(0, 1, 2), (1, 2, 3), (0, 2, 3)] {
            let s = c.sign(i, j, k);
            assert_eq!(c.sign(j, k, i), s);
            assert_eq!(c.sign(j, i, k), -s);
            assert_eq!(c.sign(i, i, k), 0);
        }
    }

    #[test]
    fn separating_and_hull() {
        let tri = chi(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(separating_count_chi(&tri, 0, 1).unwrap(), 0);
        let quad = chi(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        assert_eq!(separating_count_chi(&quad, 0, 2).unwrap(), 1);
        assert_eq!(separating_count_chi(&quad, 1, 3).unwrap(), 1);
        assert_eq!(separating_count_chi(&quad, 0, 1).unwrap(), 0);
        assert!(separating_count_chi(&quad, 0, 9).is_err());
        assert_eq!(hull_size_chi(&tri).unwrap(), 3);
        assert_eq!(hull_size_chi(&chi(&[(0, 0), (4, 0), (2, 3), (2, 1)])).unwrap(), 3);
    }

    #[test]
    fn delete_and_permute() {
        let c = chi(&[(0, 0), (4, 0), (2, 3), (2, 1)]);
        let d = c.without(3).unwrap();
        assert_eq!(d.triple_signs(), vec![1]);
        let p = c.permuted(&[3, 2, 1, 0]).unwrap();
        assert_eq!(p.sign(0, 1, 2), c.sign(3, 2, 1));
        assert!(c.permuted(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn extended_column() {
        let base = chi(&[(0, 0), (4, 0), (2, 3)]);
        let full = chi(&[(0, 0), (4, 0), (2, 3), (2, 1)]);
        let ext = base.extended(|a, b| full.sign(a, b, 3));
        assert_eq!(ext, full);
    }
}

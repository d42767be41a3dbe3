//! Binary relations on a finite carrier, used as partial orders.

use alloc::vec;
use alloc::vec::Vec;

use crate::table::Elem;

/// A relation on `{0, .., n-1}` stored as a dense boolean matrix.
///
/// `le(a, b)` reads "a is below b". Nothing forces the relation to be a
/// partial order; use [`OrderRelation::is_partial_order`] to check.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderRelation {
    n: usize,
    bits: Vec<bool>,
}

impl OrderRelation {
    /// The discrete order: only reflexive pairs.
    pub fn discrete(n: usize) -> Self {
        let mut bits = vec![false; n * n];
        for i in 0..n {
            bits[i * n + i] = true;
        }
        Self { n, bits }
    }

    /// The empty relation (not even reflexive).
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            bits: vec![false; n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(Elem, Elem) -> bool) -> Self {
        let mut bits = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                bits[a * n + b] = f(a, b);
            }
        }
        Self { n, bits }
    }

    /// Exactly the given pairs.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (Elem, Elem)>) -> Self {
        let mut r = Self::empty(n);
        for (a, b) in pairs {
            r.set(a, b, true);
        }
        r
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn le(&self, a: Elem, b: Elem) -> bool {
        self.bits[a * self.n + b]
    }

    /// Strictly below.
    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.le(a, b)
    }

    pub fn comparable(&self, a: Elem, b: Elem) -> bool {
        self.le(a, b) || self.le(b, a)
    }

    pub fn set(&mut self, a: Elem, b: Elem, value: bool) {
        assert!(a < self.n && b < self.n);
        self.bits[a * self.n + b] = value;
    }

    /// All related pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        let n = self.n;
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(i, _)| (i / n, i % n))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|a| self.le(a, a))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.pairs().all(|(a, b)| a == b || !self.le(b, a))
    }

    pub fn is_transitive(&self) -> bool {
        for (a, b) in self.pairs() {
            for c in 0..self.n {
                if self.le(b, c) && !self.le(a, c) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_reflexive() && self.is_antisymmetric() && self.is_transitive()
    }

    /// Reflexive-transitive closure (Warshall).
    pub fn closure(&self) -> Self {
        let mut r = self.clone();
        let n = self.n;
        for i in 0..n {
            r.bits[i * n + i] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if r.bits[i * n + k] {
                    for j in 0..n {
                        if r.bits[k * n + j] {
                            r.bits[i * n + j] = true;
                        }
                    }
                }
            }
        }
        r
    }

    /// Covering pairs `a < b` with nothing strictly between them.
    ///
    /// For a partial order this is the smallest relation whose closure gives
    /// the order back.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        self.pairs()
            .filter(|&(a, b)| a != b)
            .filter(|&(a, b)| !(0..self.n).any(|c| self.lt(a, c) && self.lt(c, b)))
            .collect()
    }

    /// Connected components of `subset` under the zig-zag equivalence
    /// generated by the relation restricted to `subset`.
    ///
    /// Components are listed by smallest element; each is sorted.
    pub fn components(&self, subset: &[Elem]) -> Vec<Vec<Elem>> {
        let mut parent: Vec<usize> = (0..subset.len()).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for i in 0..subset.len() {
            for j in 0..subset.len() {
                if self.le(subset[i], subset[j]) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                }
            }
        }
        let mut out: Vec<Vec<Elem>> = Vec::new();
        let mut roots: Vec<usize> = Vec::new();
        for (i, &x) in subset.iter().enumerate() {
            let r = find(&mut parent, i);
            match roots.iter().position(|&y| y == r) {
                Some(k) => out[k].push(x),
                None => {
                    roots.push(r);
                    out.push(vec![x]);
                }
            }
        }
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    /// The maximum of `set`, if one exists.
    pub fn maximum(&self, set: &[Elem]) -> Option<Elem> {
        set.iter()
            .copied()
            .find(|&m| set.iter().all(|&y| self.le(y, m)))
    }

    /// The greatest lower bound of `a` and `b` among `within`, if it exists.
    pub fn meet_within(&self, a: Elem, b: Elem, within: &[Elem]) -> Option<Elem> {
        let lower: Vec<Elem> = within
            .iter()
            .copied()
            .filter(|&z| self.le(z, a) && self.le(z, b))
            .collect();
        self.maximum(&lower)
    }

    /// Relation transported along `perm` (element `i` becomes `perm[i]`).
    pub fn permuted(&self, perm: &[Elem]) -> Self {
        let mut r = Self::empty(self.n);
        for (a, b) in self.pairs() {
            r.set(perm[a], perm[b], true);
        }
        r
    }

    /// Every partial order on `n` points, in a fixed order.
    pub fn all_partial_orders(n: usize) -> Vec<Self> {
        let off: Vec<(Elem, Elem)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b)
            .collect();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << off.len()) {
            let mut r = Self::discrete(n);
            for (i, &(a, b)) in off.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    r.set(a, b, true);
                }
            }
            if r.is_antisymmetric() && r.is_transitive() {
                out.push(r);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelled_poset_counts() {
        // Labelled posets on n points: 1, 1, 3, 19, 219 (OEIS A001035).
        let counts: Vec<usize> = (0..5)
            .map(|n| OrderRelation::all_partial_orders(n).len())
            .collect();
        assert_eq!(counts, [1, 1, 3, 19, 219]);
    }

    #[test]
    fn closure_and_covers_invert() {
        let chain = OrderRelation::from_pairs(3, [(0, 1), (1, 2)]).closure();
        assert!(chain.le(0, 2));
        assert!(chain.is_partial_order());
        assert_eq!(chain.covers(), [(0, 1), (1, 2)]);
        assert_eq!(OrderRelation::from_pairs(3, chain.covers()).closure(), chain);
    }

    #[test]
    fn zigzag_components() {
        // 0 <= 1 >= 2, 3 isolated
        let r = OrderRelation::from_pairs(4, [(0, 1), (2, 1)]).closure();
        assert_eq!(r.components(&[0, 1, 2, 3]), [vec![0, 1, 2], vec![3]]);
        assert_eq!(r.components(&[0, 2, 3]), [vec![0], vec![2], vec![3]]);
    }

    #[test]
    fn meets() {
        // diamond: 0 below 1 and 2, both below 3
        let r = OrderRelation::from_pairs(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).closure();
        assert_eq!(r.meet_within(1, 2, &[0, 1, 2, 3]), Some(0));
        assert_eq!(r.meet_within(1, 2, &[1, 2, 3]), None);
        assert_eq!(r.maximum(&[0, 1, 2, 3]), Some(3));
        assert_eq!(r.maximum(&[0, 1, 2]), None);
    }
}

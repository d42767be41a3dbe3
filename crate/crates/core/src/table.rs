//! Partial composition tables over a labelled finite carrier.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::error::Error;

/// Index of an element in a carrier.
pub type Elem = usize;

/// Returns `true` when `id` is a legal element id (`[A-Za-z0-9_+']+`).
pub fn is_valid_id(id: &str) -> bool {
    !id.is_empty()
        && id
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || matches!(b, b'_' | b'+' | b'\''))
}

/// A finite carrier together with a partially defined binary operation.
///
/// The set of composable pairs is stored explicitly: `get(a, b)` is `None`
/// exactly when `(a, b)` is not composable. Two tables are equal when they have
/// the same labels in the same order and the same composition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialTable {
    labels: Vec<String>,
    cells: Vec<Option<Elem>>,
}

impl PartialTable {
    /// Creates a table with nothing composable.
    pub fn new<I, S>(labels: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        for (i, l) in labels.iter().enumerate() {
            if !is_valid_id(l) {
                return Err(Error::InvalidLabel(l.clone()));
            }
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Self {
            labels,
            cells: vec![None; n * n],
        })
    }

    /// A table on the carrier `0, 1, ..., n - 1`.
    pub fn numbered(n: usize) -> Result<Self, Error> {
        Self::new((0..n).map(|i| format!("{i}")))
    }

    /// Builds a table from a list of `(a, b, a * b)` triples over `labels`.
    pub fn from_triples(labels: &[&str], triples: &[(&str, &str, &str)]) -> Result<Self, Error> {
        let mut t = Self::new(labels.iter().copied())?;
        for &(a, b, c) in triples {
            let ia = t.lookup(a)?;
            let ib = t.lookup(b)?;
            let ic = t.lookup(c)?;
            t.set(ia, ib, Some(ic));
        }
        Ok(t)
    }

    fn lookup(&self, label: &str) -> Result<Elem, Error> {
        self.index_of(label)
            .ok_or_else(|| Error::InvalidLabel(String::from(label)))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always `false`: carriers are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> Range<Elem> {
        0..self.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e]
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    /// The product `a * b`, or `None` if the pair is not composable.
    #[inline]
    pub fn get(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.cells[a * self.labels.len() + b]
    }

    #[inline]
    pub fn is_defined(&self, a: Elem, b: Elem) -> bool {
        self.get(a, b).is_some()
    }

    /// Sets or clears the product of `a` and `b`.
    ///
    /// Panics if any index is outside the carrier.
    pub fn set(&mut self, a: Elem, b: Elem, value: Option<Elem>) {
        let n = self.len();
        assert!(a < n && b < n, "pair ({a}, {b}) outside carrier of size {n}");
        if let Some(c) = value {
            assert!(c < n, "product {c} outside carrier of size {n}");
        }
        self.cells[a * n + b] = value;
    }

    /// All `(a, b, a * b)` with `(a, b)` composable, in row-major order.
    pub fn defined_triples(&self) -> impl Iterator<Item = (Elem, Elem, Elem)> + '_ {
        let n = self.len();
        self.cells
            .iter()
            .enumerate()
            .filter_map(move |(i, c)| c.map(|c| (i / n, i % n, c)))
    }

    pub fn defined_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }

    /// Elements `t` with `s * t` defined.
    pub fn right_partners(&self, s: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.elements().filter(move |&t| self.is_defined(s, t))
    }

    /// Elements `t` with `t * s` defined.
    pub fn left_partners(&self, s: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.elements().filter(move |&t| self.is_defined(t, s))
    }

    /// Returns a copy relabelled by `perm`, where element `i` of `self`
    /// becomes element `perm[i]` of the result.
    pub fn permuted(&self, perm: &[Elem]) -> Self {
        let n = self.len();
        assert_eq!(perm.len(), n);
        let mut labels = vec![String::new(); n];
        let mut cells = vec![None; n * n];
        for a in 0..n {
            labels[perm[a]] = self.labels[a].clone();
            for b in 0..n {
                cells[perm[a] * n + perm[b]] = self.get(a, b).map(|c| perm[c]);
            }
        }
        Self { labels, cells }
    }

    /// Replaces the labels, keeping the composition.
    pub fn relabelled<I, S>(&self, labels: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let fresh = Self::new(labels)?;
        if fresh.len() != self.len() {
            return Err(Error::SizeMismatch {
                expected: self.len(),
                found: fresh.len(),
            });
        }
        Ok(Self {
            labels: fresh.labels,
            cells: self.cells.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_follow_the_charset() {
        assert!(is_valid_id("x+"));
        assert!(is_valid_id("x_plus'"));
        assert!(!is_valid_id(""));
        assert!(!is_valid_id("x^+"));
        assert!(!is_valid_id("a b"));
    }

    #[test]
    fn rejects_bad_carriers() {
        assert_eq!(PartialTable::new(Vec::<String>::new()), Err(Error::EmptyCarrier));
        assert!(matches!(
            PartialTable::new(["a", "a"]),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(PartialTable::new(["a", "b c"]), Err(Error::InvalidLabel(_))));
    }

    #[test]
    fn permutation_moves_products() {
        let t = PartialTable::from_triples(&["a", "b"], &[("a", "b", "b")]).unwrap();
        let p = t.permuted(&[1, 0]);
        assert_eq!(p.labels(), &["b", "a"]);
        assert_eq!(p.get(1, 0), Some(0));
        assert_eq!(p.defined_count(), 1);
    }
}

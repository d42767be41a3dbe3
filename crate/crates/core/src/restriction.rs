//! Semigroupoids, left restriction structures and the natural partial order.

use alloc::vec::Vec;

use crate::error::Error;
use crate::order::OrderRelation;
use crate::report::{Axiom, ValidationReport};
use crate::table::{Elem, PartialTable};

/// The unary operation `s -> s^+`, a total map on the carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RestrictionStructure {
    plus: Vec<Elem>,
}

impl RestrictionStructure {
    /// Checks that `plus` is total on a carrier of size `n` and maps into it.
    pub fn new(plus: Vec<Elem>, n: usize) -> Result<Self, Error> {
        if plus.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: plus.len(),
            });
        }
        if let Some(&bad) = plus.iter().find(|&&p| p >= n) {
            return Err(Error::OutOfRange { elem: bad, len: n });
        }
        Ok(Self { plus })
    }

    /// The identity map, `s^+ = s`.
    pub fn identity(n: usize) -> Self {
        Self {
            plus: (0..n).collect(),
        }
    }

    #[inline]
    pub fn get(&self, s: Elem) -> Elem {
        self.plus[s]
    }

    pub fn len(&self) -> usize {
        self.plus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty()
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.plus
    }

    /// The image `S^+`, sorted.
    pub fn image(&self) -> Vec<Elem> {
        let mut img = self.plus.clone();
        img.sort_unstable();
        img.dedup();
        img
    }

    pub fn is_projection(&self, e: Elem) -> bool {
        self.plus.contains(&e)
    }

    pub fn permuted(&self, perm: &[Elem]) -> Self {
        let mut plus = alloc::vec![0; self.plus.len()];
        for (s, &p) in self.plus.iter().enumerate() {
            plus[perm[s]] = perm[p];
        }
        Self { plus }
    }
}

/// Checks the semigroupoid associativity law on every triple.
///
/// A triple `(s, t, r)` is constrained when `(s,t),(t,r)` are composable (s1),
/// or `(s,t),(st,r)` are (s2), or `(t,r),(s,tr)` are (s3). Then all four pairs
/// must be composable and `(st)r = s(tr)`. A failing triple is reported once,
/// under the first clause that constrained it, with witness `[s, t, r]`.
pub fn check_semigroupoid(t: &PartialTable) -> ValidationReport {
    let mut report = ValidationReport::new();
    for s in t.elements() {
        for u in t.elements() {
            let su = t.get(s, u);
            for r in t.elements() {
                let ur = t.get(u, r);
                let s1 = su.is_some() && ur.is_some();
                let s2 = su.is_some_and(|x| t.is_defined(x, r));
                let s3 = ur.is_some_and(|y| t.is_defined(s, y));
                let clause = if s1 {
                    Axiom::S1
                } else if s2 {
                    Axiom::S2
                } else if s3 {
                    Axiom::S3
                } else {
                    continue;
                };
                let left = su.and_then(|x| t.get(x, r));
                let right = ur.and_then(|y| t.get(s, y));
                let ok = su.is_some() && ur.is_some() && left.is_some() && left == right;
                if !ok {
                    report.push(clause, [s, u, r]);
                }
            }
        }
    }
    report
}

/// Checks lr1 to lr4 for `plus` over `t`.
///
/// Each axiom is checked on its own, so a structure may be reported under
/// several of them at once.
pub fn check_left_restriction(t: &PartialTable, plus: &RestrictionStructure) -> ValidationReport {
    let mut report = ValidationReport::new();
    if plus.len() != t.len() {
        report.push(Axiom::MapShape, []);
        return report;
    }
    let p = |s: Elem| plus.get(s);
    for s in t.elements() {
        if t.get(p(s), s) != Some(s) {
            report.push(Axiom::Lr1, [s]);
        }
    }
    for s in t.elements() {
        for u in t.elements() {
            let (sp, up) = (p(s), p(u));
            // lr2
            match (t.get(sp, up), t.get(up, sp)) {
                (None, None) => {}
                (Some(a), Some(b)) if a == b => {}
                _ => report.push(Axiom::Lr2, [s, u]),
            }
            // lr3
            if let Some(v) = t.get(sp, u) {
                if t.get(sp, up) != Some(p(v)) {
                    report.push(Axiom::Lr3, [s, u]);
                }
            }
            // lr4
            if let Some(su) = t.get(s, u) {
                let lhs = t.get(s, up);
                let rhs = t.get(p(su), s);
                if lhs.is_none() || lhs != rhs {
                    report.push(Axiom::Lr4, [s, u]);
                }
            }
        }
    }
    report
}

/// `s <= t` iff `s^+ t` is defined and equals `s`.
///
/// Fails with [`Error::InvalidOrder`] if the result is not a partial order,
/// which cannot happen for a structure satisfying lr1 to lr4.
pub fn natural_order(t: &PartialTable, plus: &RestrictionStructure) -> Result<OrderRelation, Error> {
    let order = OrderRelation::from_fn(t.len(), |s, u| t.get(plus.get(s), u) == Some(s));
    if order.is_partial_order() {
        Ok(order)
    } else {
        Err(Error::InvalidOrder)
    }
}

/// The natural order in its second form: `s <= t` iff `s = e t` for some
/// projection `e` with `e t` defined.
pub fn natural_order_via_projections(t: &PartialTable, plus: &RestrictionStructure) -> OrderRelation {
    let projections = plus.image();
    OrderRelation::from_fn(t.len(), |s, u| {
        projections.iter().any(|&e| t.get(e, u) == Some(s))
    })
}

/// Elements `e` with `e e` defined and equal to `e`.
pub fn idempotents(t: &PartialTable) -> Vec<Elem> {
    t.elements().filter(|&e| t.get(e, e) == Some(e)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    None,
    Left,
    Right,
    Both,
}

impl IdentityKind {
    pub fn is_left(self) -> bool {
        matches!(self, IdentityKind::Left | IdentityKind::Both)
    }

    pub fn is_right(self) -> bool {
        matches!(self, IdentityKind::Right | IdentityKind::Both)
    }
}

pub fn is_left_identity(t: &PartialTable, e: Elem) -> bool {
    t.is_defined(e, e) && t.elements().all(|s| t.get(e, s).is_none_or(|v| v == s))
}

pub fn is_right_identity(t: &PartialTable, e: Elem) -> bool {
    t.is_defined(e, e) && t.elements().all(|s| t.get(s, e).is_none_or(|v| v == s))
}

/// Classifies `x` as a left identity, right identity, both, or neither.
pub fn identity_kind(t: &PartialTable, x: Elem) -> IdentityKind {
    match (is_left_identity(t, x), is_right_identity(t, x)) {
        (true, true) => IdentityKind::Both,
        (true, false) => IdentityKind::Left,
        (false, true) => IdentityKind::Right,
        (false, false) => IdentityKind::None,
    }
}

/// A semigroupoid with a left restriction structure.
///
/// Values only exist after [`check_semigroupoid`] and
/// [`check_left_restriction`] have both passed. The natural order is computed
/// once at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeftRestrictionSemigroupoid {
    table: PartialTable,
    plus: RestrictionStructure,
    order: OrderRelation,
}

impl LeftRestrictionSemigroupoid {
    pub fn new(table: PartialTable, plus: RestrictionStructure) -> Result<Self, Error> {
        if plus.len() != table.len() {
            return Err(Error::SizeMismatch {
                expected: table.len(),
                found: plus.len(),
            });
        }
        let mut report = check_semigroupoid(&table);
        report.extend(check_left_restriction(&table, &plus));
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        let order = natural_order(&table, &plus)?;
        Ok(Self { table, plus, order })
    }

    /// Convenience constructor from a plus vector.
    pub fn from_parts(table: PartialTable, plus: Vec<Elem>) -> Result<Self, Error> {
        let n = table.len();
        Self::new(table, RestrictionStructure::new(plus, n)?)
    }

    pub fn table(&self) -> &PartialTable {
        &self.table
    }

    pub fn restriction(&self) -> &RestrictionStructure {
        &self.plus
    }

    pub fn order(&self) -> &OrderRelation {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    #[inline]
    pub fn plus(&self, s: Elem) -> Elem {
        self.plus.get(s)
    }

    #[inline]
    pub fn product(&self, s: Elem, t: Elem) -> Option<Elem> {
        self.table.get(s, t)
    }

    #[inline]
    pub fn le(&self, s: Elem, t: Elem) -> bool {
        self.order.le(s, t)
    }

    pub fn projections(&self) -> Vec<Elem> {
        self.plus.image()
    }

    pub fn label(&self, s: Elem) -> &str {
        self.table.label(s)
    }

    pub fn into_parts(self) -> (PartialTable, RestrictionStructure) {
        (self.table, self.plus)
    }

    /// Copy relabelled along `perm` (element `i` becomes `perm[i]`).
    pub fn permuted(&self, perm: &[Elem]) -> Self {
        Self {
            table: self.table.permuted(perm),
            plus: self.plus.permuted(perm),
            order: self.order.permuted(perm),
        }
    }
}

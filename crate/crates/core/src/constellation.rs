//! Left constellations with a partial order: restriction, corestriction and
//! the locally inductive axioms.

use alloc::vec::Vec;

use crate::error::Error;
use crate::order::OrderRelation;
use crate::report::{Axiom, ValidationReport};
use crate::restriction::RestrictionStructure;
use crate::table::{Elem, PartialTable};

/// Outcome of a corestriction `x|e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Corestriction {
    /// The maximum of `{ y <= x : y e defined }`.
    Value(Elem),
    /// No `y <= x` is composable with `e`.
    Empty,
    /// The set is nonempty but has no maximum; carries the set.
    NoMaximum(Vec<Elem>),
}

impl Corestriction {
    pub fn value(&self) -> Option<Elem> {
        match self {
            Corestriction::Value(v) => Some(*v),
            _ => None,
        }
    }

    /// `x|e != ∅` in the usual notation.
    pub fn exists(&self) -> bool {
        matches!(self, Corestriction::Value(_))
    }
}

/// A left constellation `(T, T^(2), *, +)` together with an order on `T`.
///
/// Construction only checks shapes. Use [`check_constellation`] and
/// [`check_locally_inductive`] to validate the axioms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedConstellation {
    table: PartialTable,
    plus: RestrictionStructure,
    order: OrderRelation,
}

impl OrderedConstellation {
    pub fn new(table: PartialTable, plus: RestrictionStructure, order: OrderRelation) -> Result<Self, Error> {
        let n = table.len();
        for found in [plus.len(), order.len()] {
            if found != n {
                return Err(Error::SizeMismatch { expected: n, found });
            }
        }
        Ok(Self { table, plus, order })
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

    pub fn label(&self, x: Elem) -> &str {
        self.table.label(x)
    }

    #[inline]
    pub fn plus(&self, x: Elem) -> Elem {
        self.plus.get(x)
    }

    #[inline]
    pub fn product(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.table.get(x, y)
    }

    #[inline]
    pub fn le(&self, x: Elem, y: Elem) -> bool {
        self.order.le(x, y)
    }

    /// `T^+`, sorted.
    pub fn projections(&self) -> Vec<Elem> {
        self.plus.image()
    }

    pub fn is_projection(&self, e: Elem) -> bool {
        self.plus.is_projection(e)
    }

    pub fn into_parts(self) -> (PartialTable, RestrictionStructure, OrderRelation) {
        (self.table, self.plus, self.order)
    }

    pub fn permuted(&self, perm: &[Elem]) -> Self {
        Self {
            table: self.table.permuted(perm),
            plus: self.plus.permuted(perm),
            order: self.order.permuted(perm),
        }
    }

    /// Candidates for the restriction `e|x`: every `y <= x` with `y^+ = e`.
    fn restriction_candidates(&self, e: Elem, x: Elem) -> Vec<Elem> {
        self.table
            .elements()
            .filter(|&y| self.le(y, x) && self.plus(y) == e)
            .collect()
    }

    /// The restriction `e|x`, found by scanning for the unique `y <= x` with
    /// `y^+ = e`.
    pub fn restrict(&self, e: Elem, x: Elem) -> Result<Elem, Error> {
        if !self.is_projection(e) || !self.le(e, self.plus(x)) {
            return Err(Error::RestrictionNotApplicable { e, x });
        }
        match self.restriction_candidates(e, x)[..] {
            [y] => Ok(y),
            ref other => Err(Error::NonUnique {
                candidates: other.to_vec(),
            }),
        }
    }

    /// Corestriction without the projection precondition on `e`.
    pub(crate) fn corestrict_any(&self, x: Elem, e: Elem) -> Corestriction {
        let set: Vec<Elem> = self
            .table
            .elements()
            .filter(|&y| self.le(y, x) && self.table.is_defined(y, e))
            .collect();
        if set.is_empty() {
            return Corestriction::Empty;
        }
        match self.order.maximum(&set) {
            Some(m) => Corestriction::Value(m),
            None => Corestriction::NoMaximum(set),
        }
    }

    /// The corestriction `x|e`: the maximum `y <= x` with `y e` defined.
    pub fn corestrict(&self, x: Elem, e: Elem) -> Result<Corestriction, Error> {
        if !self.is_projection(e) {
            return Err(Error::NotProjection(e));
        }
        Ok(self.corestrict_any(x, e))
    }

    /// Connected components of `(T^+, <=)`.
    pub fn plus_components(&self) -> Vec<Vec<Elem>> {
        self.order.components(&self.projections())
    }

    /// `e ∧ f`, computed as the corestriction `e|f` when `e` and `f` share a
    /// component of `T^+`, and `None` otherwise.
    pub fn meet(&self, e: Elem, f: Elem) -> Result<Option<Elem>, Error> {
        for p in [e, f] {
            if !self.is_projection(p) {
                return Err(Error::NotProjection(p));
            }
        }
        let same = self
            .plus_components()
            .iter()
            .any(|c| c.contains(&e) && c.contains(&f));
        if !same {
            return Ok(None);
        }
        match self.corestrict_any(e, f) {
            Corestriction::Value(m) => Ok(Some(m)),
            _ => Err(Error::MeetUndefined(e, f)),
        }
    }

    /// The pseudo-product `x ⊗ y = (x|y^+) y`, or `None` when `x|y^+` is
    /// empty.
    pub fn pseudo_product(&self, x: Elem, y: Elem) -> Result<Option<Elem>, Error> {
        match self.corestrict_any(x, self.plus(y)) {
            Corestriction::Value(c) => self
                .product(c, y)
                .map(Some)
                .ok_or(Error::UndefinedProduct(c, y)),
            Corestriction::Empty => Ok(None),
            Corestriction::NoMaximum(candidates) => Err(Error::NoMaximum { candidates }),
        }
    }
}

/// All corestrictions `x|e` for `x, e` in the carrier, computed once.
///
/// `e` ranges over every element, not just projections, so that morphism
/// checkers can ask about images that are not projections.
#[derive(Clone, Debug)]
pub struct CorestrictionTable {
    n: usize,
    cells: Vec<Corestriction>,
}

impl CorestrictionTable {
    pub fn new(t: &OrderedConstellation) -> Self {
        let n = t.len();
        Self {
            n,
            cells: (0..n * n).map(|i| t.corestrict_any(i / n, i % n)).collect(),
        }
    }

    #[inline]
    pub fn get(&self, x: Elem, e: Elem) -> &Corestriction {
        &self.cells[x * self.n + e]
    }

    #[inline]
    pub fn value(&self, x: Elem, e: Elem) -> Option<Elem> {
        self.get(x, e).value()
    }

    /// `x ⊗ y`, `None` when `x|y^+` is empty or the product is missing.
    pub fn pseudo_product(&self, t: &OrderedConstellation, x: Elem, y: Elem) -> Option<Elem> {
        self.value(x, t.plus(y)).and_then(|c| t.product(c, y))
    }
}

/// Checks c1 to c4.
pub fn check_constellation(t: &OrderedConstellation) -> ValidationReport {
    let mut report = ValidationReport::new();
    let tab = t.table();
    let elems = tab.elements();
    for x in elems.clone() {
        for y in elems.clone() {
            let xy = tab.get(x, y);
            for z in elems.clone() {
                let yz = tab.get(y, z);
                let lhs = xy.is_some() && yz.is_some();
                let rhs = yz.is_some_and(|v| tab.is_defined(x, v));
                if lhs != rhs {
                    report.push(Axiom::C1, [x, y, z]);
                }
                if lhs {
                    let left = xy.and_then(|v| tab.get(v, z));
                    let right = yz.and_then(|v| tab.get(x, v));
                    if left.is_none() || left != right {
                        report.push(Axiom::C2, [x, y, z]);
                    }
                }
            }
        }
    }
    for e in t.projections() {
        for x in elems.clone() {
            let fixes = tab.get(e, x) == Some(x);
            if fixes != (e == t.plus(x)) {
                report.push(Axiom::C3, [e, x]);
            }
            if let Some(v) = tab.get(x, e) {
                if v != x {
                    report.push(Axiom::C4, [x, e]);
                }
            }
        }
    }
    report
}

/// Checks that the order is a partial order and wo1 to wo9.
///
/// wo9 is read as an equality of partial operations on `T^+`: `e|f` exists
/// exactly when `e` and `f` lie in one component, and then equals `e ∧ f`.
///
/// The guards of wo7 and wo8 are checked too: if `y|e` or `x|(y|e)^+` is
/// missing while `(xy)|e` exists, that is a wo7 violation, and a missing
/// corestriction `e|f` for `e <= f` is a wo8 violation.
pub fn check_locally_inductive(t: &OrderedConstellation) -> ValidationReport {
    let mut report = ValidationReport::new();
    let tab = t.table();
    let ord = t.order();
    if !ord.is_partial_order() {
        report.push(Axiom::PartialOrder, []);
    }
    let projections = t.projections();
    let cores = CorestrictionTable::new(t);
    let cor = |x: Elem, e: Elem| cores.get(x, e);
    let pairs: Vec<(Elem, Elem)> = ord.pairs().collect();

    for &(x, y) in &pairs {
        for &(x2, y2) in &pairs {
            if let (Some(a), Some(b)) = (tab.get(x, x2), tab.get(y, y2)) {
                if !ord.le(a, b) {
                    report.push(Axiom::Wo1, [x, x2, y, y2]);
                }
            }
        }
    }
    for &(x, y) in &pairs {
        if !ord.le(t.plus(x), t.plus(y)) {
            report.push(Axiom::Wo2, [x, y]);
        }
    }
    for &e in &projections {
        for x in tab.elements() {
            if ord.le(e, t.plus(x)) && t.restriction_candidates(e, x).len() != 1 {
                report.push(Axiom::Wo3, [e, x]);
            }
        }
    }
    for x in tab.elements() {
        for &e in &projections {
            if matches!(cor(x, e), Corestriction::NoMaximum(_)) {
                report.push(Axiom::Wo4, [x, e]);
            }
        }
    }
    for (x, y, xy) in tab.defined_triples() {
        for &e in &projections {
            if cor(xy, e).exists() != cor(y, e).exists() {
                report.push(Axiom::Wo5, [x, y, e]);
            }
        }
    }
    for &e in &projections {
        for &f in &projections {
            if !ord.le(f, e) {
                continue;
            }
            for x in tab.elements() {
                if cor(x, e).exists() != cor(x, f).exists() {
                    report.push(Axiom::Wo6, [x, e, f]);
                }
            }
        }
    }
    for (x, y, xy) in tab.defined_triples() {
        for &e in &projections {
            let Some(lhs) = cor(xy, e).value() else {
                continue;
            };
            let rhs = cor(y, e)
                .value()
                .and_then(|ye| cor(x, t.plus(ye)).value());
            if rhs.is_none_or(|r| t.plus(r) != t.plus(lhs)) {
                report.push(Axiom::Wo7, [x, y, e]);
            }
        }
    }
    for &e in &projections {
        for &f in &projections {
            if !ord.le(e, f) {
                continue;
            }
            let restricted = match t.restriction_candidates(e, f)[..] {
                [r] => Some(r),
                _ => None,
            };
            if restricted.is_none() || cor(e, f).value() != restricted {
                report.push(Axiom::Wo8, [e, f]);
            }
        }
    }
    let comps = ord.components(&projections);
    let comp_of = |e: Elem| comps.iter().position(|c| c.contains(&e));
    for &e in &projections {
        for &f in &projections {
            let meet = if comp_of(e) == comp_of(f) {
                let m = ord.meet_within(e, f, &projections);
                if m.is_none() {
                    report.push(Axiom::Wo9, [e, f]);
                    continue;
                }
                m
            } else {
                None
            };
            if cor(e, f).value() != meet || (meet.is_none() && !matches!(cor(e, f), Corestriction::Empty)) {
                report.push(Axiom::Wo9, [e, f]);
            }
        }
    }
    report
}

/// Both checkers together.
pub fn check_li_constellation(t: &OrderedConstellation) -> ValidationReport {
    let mut r = check_constellation(t);
    r.extend(check_locally_inductive(t));
    r
}

/// Inductive in the sense of the classical definition: locally inductive and
/// every corestriction `x|e` exists.
pub fn is_inductive(t: &OrderedConstellation) -> bool {
    let projections = t.projections();
    check_li_constellation(t).is_valid()
        && t
            .table()
            .elements()
            .all(|x| projections.iter().all(|&e| t.corestrict_any(x, e).exists()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::functor::build_c;
    use alloc::vec;

    fn idx(t: &OrderedConstellation, l: &str) -> Elem {
        t.table().index_of(l).unwrap()
    }

    #[test]
    fn constellations_of_fixtures_validate() {
        for (name, s) in fixtures::extended() {
            let c = build_c(&s);
            let r = check_li_constellation(&c);
            assert!(r.is_valid(), "{name}: {:?}", r);
        }
    }

    #[test]
    fn c3_counterexample() {
        // e x = x but x^+ = x, not e.
        let table = PartialTable::from_triples(
            &["e", "x"],
            &[("e", "e", "e"), ("x", "x", "x"), ("e", "x", "x")],
        )
        .unwrap();
        let t = OrderedConstellation::new(
            table,
            RestrictionStructure::identity(2),
            OrderRelation::discrete(2),
        )
        .unwrap();
        let r = check_constellation(&t);
        assert!(r.violations().iter().any(|v| v.axiom == Axiom::C3 && v.witness == [0, 1]));
    }

    #[test]
    fn restrictions() {
        let c = build_c(&fixtures::left_unital());
        let (yp, x, y) = (idx(&c, "y+"), idx(&c, "x"), idx(&c, "y"));
        assert_eq!(c.restrict(yp, x), Ok(y));
        for x in c.table().elements() {
            assert_eq!(c.restrict(c.plus(x), x), Ok(x));
        }
        let c = build_c(&fixtures::semilattice_zero());
        let (zero, e) = (idx(&c, "0"), idx(&c, "e"));
        assert_eq!(c.restrict(zero, e), Ok(zero));
        let f = idx(&c, "f");
        assert_eq!(c.restrict(e, f), Err(Error::RestrictionNotApplicable { e, x: f }));
    }

    #[test]
    fn corestrictions() {
        let c = build_c(&fixtures::single_arrow());
        let (xp, x) = (idx(&c, "x+"), idx(&c, "x"));
        assert_eq!(c.corestrict(x, xp), Ok(Corestriction::Empty));
        assert_eq!(c.corestrict(xp, xp), Ok(Corestriction::Value(xp)));
        assert_eq!(c.corestrict(xp, x), Err(Error::NotProjection(x)));

        // {y <= e : y f composable in C(S)} = {0}: e f is not composable in
        // C(S) because e f^+ = 0 != e.
        let c = build_c(&fixtures::semilattice_zero());
        let (e, f, zero) = (idx(&c, "e"), idx(&c, "f"), idx(&c, "0"));
        assert!(!c.table().is_defined(e, f));
        assert_eq!(c.corestrict(e, f), Ok(Corestriction::Value(zero)));
    }

    #[test]
    fn components() {
        let c = build_c(&fixtures::left_unital());
        let names: Vec<Vec<&str>> = c
            .plus_components()
            .iter()
            .map(|comp| comp.iter().map(|&e| c.label(e)).collect())
            .collect();
        assert_eq!(names, [vec!["e"], vec!["x+", "y+"]]);

        let c = build_c(&fixtures::singleton());
        assert_eq!(c.plus_components().len(), 1);

        let c = build_c(&fixtures::semilattice_zero());
        assert_eq!(c.plus_components(), [vec![0, 1, 2]]);
    }

    #[test]
    fn meets() {
        let c = build_c(&fixtures::semilattice_zero());
        let (e, f, zero) = (idx(&c, "e"), idx(&c, "f"), idx(&c, "0"));
        assert_eq!(c.meet(e, f), Ok(Some(zero)));
        assert_eq!(c.meet(e, e), Ok(Some(e)));

        let c = build_c(&fixtures::left_unital());
        let (e, xp, yp) = (idx(&c, "e"), idx(&c, "x+"), idx(&c, "y+"));
        assert_eq!(c.meet(xp, yp), Ok(Some(yp)));
        assert_eq!(c.meet(e, xp), Ok(None));
    }

    #[test]
    fn wo2_violation_from_mutated_order() {
        // In C(left_unital), y <= x. Add x+ <= e? Instead break monotonicity of +:
        // declare x <= e while x+ and e are incomparable.
        let c = build_c(&fixtures::left_unital());
        let (table, plus, mut order) = c.into_parts();
        let x = table.index_of("x").unwrap();
        let e = table.index_of("e").unwrap();
        order.set(x, e, true);
        let t = OrderedConstellation::new(table, plus, order).unwrap();
        let r = check_locally_inductive(&t);
        assert!(r.violations().iter().any(|v| v.axiom == Axiom::Wo2 && v.witness == [x, e]));
    }

    #[test]
    fn corestriction_across_components_breaks_wo9() {
        // Left-zero semigroup on {0, 1} with x^+ = x and the discrete order:
        // a left constellation whose projections are incomparable yet
        // 0|1 = 0 exists.
        let table = PartialTable::from_triples(
            &["0", "1"],
            &[("0", "0", "0"), ("0", "1", "0"), ("1", "0", "1"), ("1", "1", "1")],
        )
        .unwrap();
        let t = OrderedConstellation::new(
            table,
            RestrictionStructure::identity(2),
            OrderRelation::discrete(2),
        )
        .unwrap();
        assert!(check_constellation(&t).is_valid());
        assert_eq!(check_locally_inductive(&t).axioms(), [Axiom::Wo9]);
    }

    #[test]
    fn semigroup_fixtures_are_inductive() {
        assert!(is_inductive(&build_c(&fixtures::semilattice_zero())));
        assert!(is_inductive(&build_c(&fixtures::semilattice())));
        assert!(!is_inductive(&build_c(&fixtures::single_arrow())));
    }

    #[test]
    fn pseudo_product_recovers_composition() {
        let s = fixtures::left_unital();
        let c = build_c(&s);
        for a in s.table().elements() {
            for b in s.table().elements() {
                assert_eq!(c.pseudo_product(a, b), Ok(s.product(a, b)));
            }
        }
        let _ = vec![0u8];
    }
}

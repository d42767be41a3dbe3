//! Szendrei expansions, the embedding `iota`, generation witnesses and the
//! universal extension of a preradiant.
//!
//! The carrier of an expansion depends only on the plus map: for every
//! projection `e`, all pairs `(A, a)` where `A` contains `e`, every member of
//! `A` has `^+` equal to `e`, and `a` is in `A`. Elements are listed by `e`,
//! then by subset (as a bitmask over the class of `e`), then by anchor.
//!
//! Labels join the member labels with `_`, then `__` and the anchor label, so
//! `({x+, x}, x)` becomes `x+_x__x`. If that produces a clash, every element
//! is labelled `sz<i>` instead.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::constellation::OrderedConstellation;
use crate::error::Error;
use crate::order::OrderRelation;
use crate::restriction::{LeftRestrictionSemigroupoid, RestrictionStructure};
use crate::table::{Elem, PartialTable};

/// `(A, a)` with `A` sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SzendreiElement {
    pub subset: Vec<Elem>,
    pub anchor: Elem,
}

impl SzendreiElement {
    /// Sorts and dedups `subset`.
    pub fn new(mut subset: Vec<Elem>, anchor: Elem) -> Self {
        subset.sort_unstable();
        subset.dedup();
        Self { subset, anchor }
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.subset.binary_search(&x).is_ok()
    }
}

/// An expanded structure together with the pair each element stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion<T> {
    pub structure: T,
    pub elements: Vec<SzendreiElement>,
    index: BTreeMap<SzendreiElement, Elem>,
}

impl<T> Expansion<T> {
    fn new(structure: T, elements: Vec<SzendreiElement>) -> Self {
        let index = elements.iter().cloned().enumerate().map(|(i, el)| (el, i)).collect();
        Self {
            structure,
            elements,
            index,
        }
    }

    pub fn index_of(&self, el: &SzendreiElement) -> Option<Elem> {
        self.index.get(el).copied()
    }

    pub fn element(&self, i: Elem) -> &SzendreiElement {
        &self.elements[i]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// The carrier of the expansion, in canonical order.
pub fn carrier(plus: &RestrictionStructure) -> Vec<SzendreiElement> {
    let mut out = Vec::new();
    for e in plus.image() {
        let others: Vec<Elem> = (0..plus.len()).filter(|&b| b != e && plus.get(b) == e).collect();
        for mask in 0u64..(1u64 << others.len()) {
            let mut subset: Vec<Elem> = others
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &b)| b)
                .collect();
            subset.push(e);
            subset.sort_unstable();
            for &a in &subset {
                out.push(SzendreiElement::new(subset.clone(), a));
            }
        }
    }
    out
}

fn labels(base: &PartialTable, elements: &[SzendreiElement]) -> Vec<String> {
    let joined: Vec<String> = elements
        .iter()
        .map(|el| {
            let members: Vec<&str> = el.subset.iter().map(|&b| base.label(b)).collect();
            format!("{}__{}", members.join("_"), base.label(el.anchor))
        })
        .collect();
    let mut sorted = joined.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() == joined.len() {
        joined
    } else {
        (0..elements.len()).map(|i| format!("sz{i}")).collect()
    }
}

fn lookup(index: &BTreeMap<SzendreiElement, Elem>, el: SzendreiElement) -> Result<Elem, Error> {
    index
        .get(&el)
        .copied()
        .ok_or_else(|| Error::Mismatch(format!("{el:?} is not in the expansion")))
}

/// `x B`, or `None` if some product is undefined.
fn left_multiply(table: &PartialTable, x: Elem, set: &[Elem]) -> Option<Vec<Elem>> {
    set.iter().map(|&b| table.get(x, b)).collect()
}

/// `Sz(S)`: `(A,a)(B,b) = ((ab)^+ A ∪ aB, ab)` when `ab` is defined, and
/// `(A,a)^+ = (A, a^+)`.
pub fn expand_semigroupoid(s: &LeftRestrictionSemigroupoid) -> Result<Expansion<LeftRestrictionSemigroupoid>, Error> {
    let elements = carrier(s.restriction());
    let sz = Expansion::new((), elements);
    let n = sz.len();
    let mut table = PartialTable::new(labels(s.table(), &sz.elements))?;
    let mut plus = Vec::with_capacity(n);
    for (i, p) in sz.elements.iter().enumerate() {
        plus.push(lookup(&sz.index, SzendreiElement::new(p.subset.clone(), s.plus(p.anchor)))?);
        for (j, q) in sz.elements.iter().enumerate() {
            let Some(ab) = s.product(p.anchor, q.anchor) else {
                continue;
            };
            let mut subset = left_multiply(s.table(), s.plus(ab), &p.subset).ok_or(Error::UndefinedProduct(s.plus(ab), p.anchor))?;
            subset.extend(left_multiply(s.table(), p.anchor, &q.subset).ok_or(Error::UndefinedProduct(p.anchor, q.anchor))?);
            table.set(i, j, Some(lookup(&sz.index, SzendreiElement::new(subset, ab))?));
        }
    }
    let structure = LeftRestrictionSemigroupoid::from_parts(table, plus)?;
    Ok(Expansion::new(structure, sz.elements))
}

/// `Sz(T)`: `(A,a)(B,b) = (A, ab)` when `ab` is defined in `T` and `aB ⊆ A`;
/// `(A,a) <= (B,b)` when `a <= b` and `a^+ B ⊆ A`; `(A,a)^+ = (A, a^+)`.
///
/// The result is not validated; a valid li-constellation yields a valid one.
pub fn expand_constellation(t: &OrderedConstellation) -> Result<Expansion<OrderedConstellation>, Error> {
    let elements = carrier(t.restriction());
    let sz = Expansion::new((), elements);
    let n = sz.len();
    let mut table = PartialTable::new(labels(t.table(), &sz.elements))?;
    let mut plus = Vec::with_capacity(n);
    let mut order = OrderRelation::empty(n);
    let within = |x: Elem, b: &SzendreiElement, a: &SzendreiElement| {
        left_multiply(t.table(), x, &b.subset).is_some_and(|xb| xb.iter().all(|&y| a.contains(y)))
    };
    for (i, p) in sz.elements.iter().enumerate() {
        plus.push(lookup(&sz.index, SzendreiElement::new(p.subset.clone(), t.plus(p.anchor)))?);
        for (j, q) in sz.elements.iter().enumerate() {
            if let Some(ab) = t.product(p.anchor, q.anchor) {
                if within(p.anchor, q, p) {
                    table.set(i, j, Some(lookup(&sz.index, SzendreiElement::new(p.subset.clone(), ab))?));
                }
            }
            if t.le(p.anchor, q.anchor) && within(t.plus(p.anchor), q, p) {
                order.set(i, j, true);
            }
        }
    }
    let plus = RestrictionStructure::new(plus, n)?;
    let structure = OrderedConstellation::new(table, plus, order)?;
    Ok(Expansion::new(structure, sz.elements))
}

/// `iota(x) = ({x^+, x}, x)`, as indices into `sz`.
pub fn iota<T>(plus: &RestrictionStructure, sz: &Expansion<T>) -> Result<Vec<Elem>, Error> {
    (0..plus.len())
        .map(|x| lookup(&sz.index, SzendreiElement::new(alloc::vec![plus.get(x), x], x)))
        .collect()
}

/// A term over `iota`-images built with `^+`, corestriction and composition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Iota(Elem),
    Plus(Box<Term>),
    /// `x|e`.
    Corestrict(Box<Term>, Box<Term>),
    Compose(Box<Term>, Box<Term>),
}

impl Term {
    pub fn plus(t: Term) -> Term {
        Term::Plus(Box::new(t))
    }

    pub fn corestrict(x: Term, e: Term) -> Term {
        Term::Corestrict(Box::new(x), Box::new(e))
    }

    pub fn compose(x: Term, y: Term) -> Term {
        Term::Compose(Box::new(x), Box::new(y))
    }

    /// Evaluates in `target`, reading each `Iota(x)` leaf as `leaf(x)`.
    pub fn eval_with(&self, target: &OrderedConstellation, leaf: &dyn Fn(Elem) -> Elem) -> Result<Elem, Error> {
        match self {
            Term::Iota(x) => Ok(leaf(*x)),
            Term::Plus(t) => Ok(target.plus(t.eval_with(target, leaf)?)),
            Term::Corestrict(x, e) => {
                let (x, e) = (x.eval_with(target, leaf)?, e.eval_with(target, leaf)?);
                target.corestrict_any(x, e).value().ok_or(Error::MeetUndefined(x, e))
            }
            Term::Compose(x, y) => {
                let (x, y) = (x.eval_with(target, leaf)?, y.eval_with(target, leaf)?);
                target.product(x, y).ok_or(Error::UndefinedProduct(x, y))
            }
        }
    }

    /// Evaluates in the expansion itself, with leaves read through `iota`.
    pub fn eval(&self, sz: &Expansion<OrderedConstellation>, iota: &[Elem]) -> Result<Elem, Error> {
        self.eval_with(&sz.structure, &|x| iota[x])
    }
}

/// A term evaluating to `el`:
/// `(iota(a_1)^+ | iota(a_2)^+ | ... | iota(a_n)^+) iota(a)` over the members
/// of `A` other than `a^+`, with the shortcuts `({e},e) = iota(e)^+`,
/// `({x^+,x},x^+) = iota(x)^+` and `({x^+,x},x) = iota(x)`.
pub fn generation_decomposition(plus: &RestrictionStructure, el: &SzendreiElement) -> Term {
    let e = plus.get(el.anchor);
    let others: Vec<Elem> = el.subset.iter().copied().filter(|&b| b != e).collect();
    match others[..] {
        [] => return Term::plus(Term::Iota(e)),
        [x] if el.anchor == e => return Term::plus(Term::Iota(x)),
        [x] if el.anchor == x => return Term::Iota(x),
        _ => {}
    }
    let mut it = others.iter().map(|&b| Term::plus(Term::Iota(b)));
    let first = it.next().expect("nonempty");
    let proj = it.fold(first, Term::corestrict);
    Term::compose(proj, Term::Iota(el.anchor))
}

/// `Phi(A, x) = (∧_{a∈A} phi(a)^+) phi(x)`, the meet folded left over `A` in
/// ascending order using corestriction in `target`.
pub fn extend(phi: &[Elem], target: &OrderedConstellation, sz: &Expansion<OrderedConstellation>) -> Result<Vec<Elem>, Error> {
    sz.elements
        .iter()
        .map(|el| {
            let meet = meet_fold(target, el.subset.iter().map(|&a| target.plus(phi[a])))?;
            let fx = phi[el.anchor];
            target.product(meet, fx).ok_or(Error::UndefinedProduct(meet, fx))
        })
        .collect()
}

/// Left fold of `e|f` over the projections; fails on an empty input or a
/// missing corestriction.
pub fn meet_fold(target: &OrderedConstellation, mut projections: impl Iterator<Item = Elem>) -> Result<Elem, Error> {
    let first = projections.next().ok_or(Error::EmptyCarrier)?;
    projections.try_fold(first, |m, f| target.corestrict_any(m, f).value().ok_or(Error::MeetUndefined(m, f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constellation::check_li_constellation;
    use crate::fixtures;
    use crate::functor::{build_c, build_g};
    use crate::morphism::{check_inductive_preradiant, check_inductive_radiant};
    use alloc::vec;

    #[test]
    fn carrier_sizes() {
        assert_eq!(carrier(fixtures::singleton().restriction()).len(), 1);
        assert_eq!(carrier(fixtures::single_arrow().restriction()).len(), 3);
        assert_eq!(carrier(fixtures::semilattice_zero().restriction()).len(), 3);
    }

    #[test]
    fn single_arrow_elements() {
        let s = fixtures::single_arrow();
        let sz = expand_semigroupoid(&s).unwrap();
        assert_eq!(sz.structure.table().labels(), ["x+__x+", "x+_x__x+", "x+_x__x"]);
        assert_eq!(sz.elements[2], SzendreiElement::new(vec![0, 1], 1));
    }

    #[test]
    fn expansions_are_valid() {
        for (name, s) in fixtures::extended() {
            let sz = expand_semigroupoid(&s).unwrap();
            let c = build_c(&s);
            let szc = expand_constellation(&c).unwrap();
            assert!(check_li_constellation(&szc.structure).is_valid(), "{name}");
            assert_eq!(build_c(&sz.structure), szc.structure, "{name}");
            assert_eq!(
                expand_constellation(&c).unwrap().structure,
                build_c(&expand_semigroupoid(&build_g(&c).unwrap()).unwrap().structure)
            );
        }
    }

    #[test]
    fn iota_is_an_injective_preradiant() {
        for (name, s) in fixtures::extended() {
            let c = build_c(&s);
            let sz = expand_constellation(&c).unwrap();
            let i = iota(c.restriction(), &sz).unwrap();
            let mut sorted = i.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), i.len(), "{name}");
            assert!(check_inductive_preradiant(&c, &sz.structure, &i).is_valid(), "{name}");
        }
    }

    #[test]
    fn witnesses_evaluate_back() {
        for (name, s) in fixtures::extended() {
            let c = build_c(&s);
            let sz = expand_constellation(&c).unwrap();
            let i = iota(c.restriction(), &sz).unwrap();
            for (k, el) in sz.elements.iter().enumerate() {
                let term = generation_decomposition(c.restriction(), el);
                assert_eq!(term.eval(&sz, &i), Ok(k), "{name} {el:?}");
            }
        }
    }

    #[test]
    fn shortcuts() {
        let c = build_c(&fixtures::single_arrow());
        let p = c.restriction();
        assert_eq!(generation_decomposition(p, &SzendreiElement::new(vec![0], 0)), Term::plus(Term::Iota(0)));
        assert_eq!(generation_decomposition(p, &SzendreiElement::new(vec![0, 1], 0)), Term::plus(Term::Iota(1)));
        assert_eq!(generation_decomposition(p, &SzendreiElement::new(vec![0, 1], 1)), Term::Iota(1));
    }

    #[test]
    fn extending_the_identity_projects_to_the_anchor() {
        for (name, s) in fixtures::extended() {
            let c = build_c(&s);
            let sz = expand_constellation(&c).unwrap();
            let id: Vec<Elem> = c.table().elements().collect();
            let phi = extend(&id, &c, &sz).unwrap();
            let anchors: Vec<Elem> = sz.elements.iter().map(|el| el.anchor).collect();
            assert_eq!(phi, anchors, "{name}");
            assert!(check_inductive_radiant(&sz.structure, &c, &phi).is_valid(), "{name}");
        }
    }

    #[test]
    fn extending_iota_gives_back_iota() {
        let c = build_c(&fixtures::left_unital());
        let sz = expand_constellation(&c).unwrap();
        let i = iota(c.restriction(), &sz).unwrap();
        let phi = extend(&i, &sz.structure, &sz).unwrap();
        for x in c.table().elements() {
            assert_eq!(phi[i[x]], i[x]);
        }
    }
}

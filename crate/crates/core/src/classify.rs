//! Non-degenerate, locally complete and unitary constellations, and the
//! matching special classes of semigroupoids: categories, semigroups and
//! inverse semigroupoids.

use alloc::vec;
use alloc::vec::Vec;

use crate::constellation::{CorestrictionTable, OrderedConstellation};
use crate::error::Error;
use crate::functor::{build_c, build_g};
use crate::restriction::{identity_kind, is_left_identity, IdentityKind, LeftRestrictionSemigroupoid, RestrictionStructure};
use crate::table::{Elem, PartialTable};

/// Which predicate a witness refutes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Predicate {
    Nd,
    Lc,
    Unitary,
    Category,
    Semigroup,
    InverseSemigroupoid,
    RightInverses,
}

impl Predicate {
    pub const fn id(self) -> &'static str {
        match self {
            Predicate::Nd => "nd",
            Predicate::Lc => "lc",
            Predicate::Unitary => "unitary",
            Predicate::Category => "is_category",
            Predicate::Semigroup => "is_semigroup",
            Predicate::InverseSemigroupoid => "is_inverse_semigroupoid",
            Predicate::RightInverses => "has_right_inverses",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassificationReport {
    pub nd: bool,
    pub lc: bool,
    pub unitary: bool,
    pub is_category: bool,
    pub is_semigroup: bool,
    pub is_inverse_semigroupoid: bool,
    pub has_right_inverses: bool,
    /// One counterexample per failed predicate.
    pub witnesses: Vec<(Predicate, Vec<Elem>)>,
}

impl ClassificationReport {
    pub fn witness(&self, p: Predicate) -> Option<&[Elem]> {
        self.witnesses.iter().find(|(q, _)| *q == p).map(|(_, w)| w.as_slice())
    }

    /// The three constellation-level verdicts.
    pub fn nd_lc_u(&self) -> (bool, bool, bool) {
        (self.nd, self.lc, self.unitary)
    }
}

fn note<T>(witnesses: &mut Vec<(Predicate, Vec<Elem>)>, p: Predicate, w: Option<T>) -> bool
where
    T: Into<Vec<Elem>>,
{
    match w {
        Some(w) => {
            witnesses.push((p, w.into()));
            false
        }
        None => true,
    }
}

/// ND, LC and U read off the constellation, with witnesses.
fn nd_lc_u(t: &OrderedConstellation, witnesses: &mut Vec<(Predicate, Vec<Elem>)>) -> (bool, bool, bool) {
    let cores = CorestrictionTable::new(t);
    let projections = t.projections();
    let nd_fail = t
        .table()
        .elements()
        .find(|&x| !projections.iter().any(|&e| cores.get(x, e).exists()));
    let nd = note(witnesses, Predicate::Nd, nd_fail.map(|x| vec![x]));

    let mut maxima = Vec::new();
    let mut lc_fail = None;
    for comp in t.plus_components() {
        match t.order().maximum(&comp) {
            Some(m) => maxima.push(m),
            None => {
                lc_fail = Some(comp);
                break;
            }
        }
    }
    let lc = note(witnesses, Predicate::Lc, lc_fail);

    let unitary = if lc {
        let fail = maxima.iter().find_map(|&one| {
            t.table()
                .elements()
                .find(|&x| cores.value(x, one).is_some_and(|v| v != x))
                .map(|x| vec![x, one])
        });
        note(witnesses, Predicate::Unitary, fail)
    } else {
        witnesses.push((Predicate::Unitary, Vec::new()));
        false
    };
    (nd, lc, unitary)
}

/// ND, LC, U directly on `S`: some `t` with `st` defined; some left identity
/// `e` in `S^+` with `es` defined; some identity `e` with `es` defined.
pub fn nd_lc_u_semigroupoid(s: &LeftRestrictionSemigroupoid) -> (bool, bool, bool) {
    let tab = s.table();
    let projections = s.projections();
    let nd = tab.elements().all(|x| tab.right_partners(x).next().is_some());
    let lc = tab
        .elements()
        .all(|x| projections.iter().any(|&e| tab.is_defined(e, x) && is_left_identity(tab, e)));
    let unitary = tab
        .elements()
        .all(|x| tab.elements().any(|e| tab.is_defined(e, x) && identity_kind(tab, e) == IdentityKind::Both));
    (nd, lc, unitary)
}

/// Everything the classifier knows about `t`. Category, semigroup and inverse
/// verdicts are read off `G(T)`.
pub fn classify_constellation(t: &OrderedConstellation) -> Result<ClassificationReport, Error> {
    let mut witnesses = Vec::new();
    let (nd, lc, unitary) = nd_lc_u(t, &mut witnesses);
    let g = build_g(t)?;
    let is_category = detect_category(&g).is_some();
    let is_semigroup = detect_semigroup(&g)?;
    let is_inverse_semigroupoid = detect_inverse_semigroupoid(g.table())?.is_some();
    let right = has_right_inverses(t);
    let fail = right
        .as_ref()
        .err()
        .map(|&x| vec![x]);
    note(&mut witnesses, Predicate::RightInverses, fail);
    if !is_category {
        witnesses.push((Predicate::Category, Vec::new()));
    }
    if !is_semigroup {
        witnesses.push((Predicate::Semigroup, Vec::new()));
    }
    if !is_inverse_semigroupoid {
        witnesses.push((Predicate::InverseSemigroupoid, Vec::new()));
    }
    witnesses.sort();
    Ok(ClassificationReport {
        nd,
        lc,
        unitary,
        is_category,
        is_semigroup,
        is_inverse_semigroupoid,
        has_right_inverses: right.is_ok(),
        witnesses,
    })
}

/// Classifies `S`. ND, LC and U are computed directly on `S`, then compared
/// with the verdicts for `C(S)`; any difference is an error.
pub fn classify_semigroupoid(s: &LeftRestrictionSemigroupoid) -> Result<ClassificationReport, Error> {
    let report = classify_constellation(&build_c(s))?;
    if nd_lc_u_semigroupoid(s) != report.nd_lc_u() {
        return Err(Error::Disagreement("direct and constellation verdicts for nd, lc, u"));
    }
    Ok(report)
}

/// Identity assignments `D` and `R` of a category: `s D(s)` and `R(s) s` are
/// defined and `D(s)`, `R(s)` are identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryStructure {
    pub domain: Vec<Elem>,
    pub range: Vec<Elem>,
}

/// `Some` when every element has identities on both sides.
pub fn detect_category(s: &LeftRestrictionSemigroupoid) -> Option<CategoryStructure> {
    let tab = s.table();
    let identities: Vec<Elem> = tab
        .elements()
        .filter(|&e| identity_kind(tab, e) == IdentityKind::Both)
        .collect();
    let mut domain = Vec::with_capacity(tab.len());
    let mut range = Vec::with_capacity(tab.len());
    for x in tab.elements() {
        domain.push(*identities.iter().find(|&&e| tab.is_defined(x, e))?);
        range.push(*identities.iter().find(|&&e| tab.is_defined(e, x))?);
    }
    Some(CategoryStructure { domain, range })
}

/// Is every pair composable? Also computes "`C(S)` is non-degenerate with
/// `C(S)^+` a meet-semilattice" and "every `x|e` exists in `C(S)`", and fails
/// if the three answers differ.
pub fn detect_semigroup(s: &LeftRestrictionSemigroupoid) -> Result<bool, Error> {
    let total = s.table().defined_count() == s.len() * s.len();
    let c = build_c(s);
    let mut scratch = Vec::new();
    let (nd, _, _) = nd_lc_u(&c, &mut scratch);
    let projections = c.projections();
    let semilattice = projections
        .iter()
        .all(|&e| projections.iter().all(|&f| c.order().meet_within(e, f, &projections).is_some()));
    let cores = CorestrictionTable::new(&c);
    let all_exist = c
        .table()
        .elements()
        .all(|x| projections.iter().all(|&e| cores.get(x, e).exists()));
    if total != (nd && semilattice) || total != all_exist {
        return Err(Error::Disagreement("semigroup characterisations"));
    }
    Ok(total)
}

/// All `t` with `st`, `ts` defined, `sts = s` and `tst = t`.
pub fn pseudo_inverses(t: &PartialTable, s: Elem) -> Vec<Elem> {
    t.elements()
        .filter(|&u| {
            let st = t.get(s, u);
            let ts = t.get(u, s);
            st.is_some()
                && ts.is_some()
                && st.and_then(|v| t.get(v, s)) == Some(s)
                && ts.and_then(|v| t.get(v, u)) == Some(u)
        })
        .collect()
}

/// If `ef` is defined for idempotents `e, f`, then `fe` is defined and equal.
pub fn idempotents_commute(t: &PartialTable) -> bool {
    let e = crate::restriction::idempotents(t);
    e.iter().all(|&a| e.iter().all(|&b| t.get(a, b).is_none() || t.get(a, b) == t.get(b, a)))
}

/// The inverse map when every element has exactly one pseudo-inverse.
///
/// Regularity plus commuting idempotents is computed independently; when the
/// table is regular and the two criteria disagree, that is an error.
pub fn detect_inverse_semigroupoid(t: &PartialTable) -> Result<Option<Vec<Elem>>, Error> {
    let all: Vec<Vec<Elem>> = t.elements().map(|s| pseudo_inverses(t, s)).collect();
    let regular = all.iter().all(|p| !p.is_empty());
    let unique = all.iter().all(|p| p.len() == 1);
    if regular && unique != idempotents_commute(t) {
        return Err(Error::Disagreement("unique pseudo-inverses against commuting idempotents"));
    }
    Ok(unique.then(|| all.iter().map(|p| p[0]).collect()))
}

/// `s^+ = s s^{-1}`.
pub fn derive_plus_from_inverses(t: &PartialTable, inverse: &[Elem]) -> Result<RestrictionStructure, Error> {
    let plus = t
        .elements()
        .map(|s| t.get(s, inverse[s]).ok_or(Error::UndefinedProduct(s, inverse[s])))
        .collect::<Result<Vec<_>, _>>()?;
    RestrictionStructure::new(plus, t.len())
}

/// For each `x` the least `y` with `xy = x^+`, or the first `x` without one.
pub fn has_right_inverses(t: &OrderedConstellation) -> Result<Vec<Elem>, Elem> {
    t.table()
        .elements()
        .map(|x| {
            t.table()
                .elements()
                .find(|&y| t.product(x, y) == Some(t.plus(x)))
                .ok_or(x)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn verdicts(s: &LeftRestrictionSemigroupoid) -> (bool, bool, bool) {
        classify_semigroupoid(s).unwrap().nd_lc_u()
    }

    #[test]
    fn known_verdicts() {
        let r = classify_constellation(&build_c(&fixtures::semilattice_zero())).unwrap();
        assert!(r.nd && !r.lc);
        let (nd, _, u) = verdicts(&fixtures::single_arrow());
        assert!(u && !nd);
        assert_eq!(verdicts(&fixtures::left_unital()), (true, true, false));
        let (nd, lc, _) = verdicts(&fixtures::semilattice_zero_tail());
        assert!(!nd && !lc);
        assert_eq!(verdicts(&fixtures::left_unital_tail()), (false, true, false));
        assert_eq!(verdicts(&fixtures::singleton()), (true, true, true));
    }

    #[test]
    fn witnesses_name_the_culprit() {
        let s = fixtures::semilattice_zero_tail();
        let r = classify_semigroupoid(&s).unwrap();
        assert_eq!(r.witness(Predicate::Nd), Some(&[s.table().index_of("s").unwrap()][..]));
    }

    #[test]
    fn categories() {
        for (name, s) in fixtures::all().into_iter().skip(2) {
            assert!(detect_category(&s).is_none(), "{name}");
        }
        // The two-element semilattice is a monoid with identity f.
        assert!(detect_category(&fixtures::semilattice()).is_some());
        let one = detect_category(&fixtures::singleton()).unwrap();
        assert_eq!((one.domain, one.range), (vec![0], vec![0]));
        let two = detect_category(&fixtures::discrete_category()).unwrap();
        assert_eq!(two.domain, [0, 1]);
        assert!(detect_category(&fixtures::z2()).is_some());
    }

    #[test]
    fn semigroups() {
        assert!(detect_semigroup(&fixtures::semilattice_zero()).unwrap());
        assert!(!detect_semigroup(&fixtures::single_arrow()).unwrap());
        assert!(detect_semigroup(&fixtures::singleton()).unwrap());
    }

    #[test]
    fn inverses() {
        let z2 = fixtures::z2();
        let inv = detect_inverse_semigroupoid(z2.table()).unwrap().unwrap();
        assert_eq!(inv, [0, 1]);
        assert_eq!(derive_plus_from_inverses(z2.table(), &inv).unwrap().as_slice(), [0, 0]);
        // Every element of a semilattice is its own unique pseudo-inverse.
        let s = fixtures::semilattice_zero();
        assert_eq!(detect_inverse_semigroupoid(s.table()).unwrap(), Some(vec![0, 1, 2]));
        assert_eq!(detect_inverse_semigroupoid(fixtures::singleton().table()).unwrap(), Some(vec![0]));
        assert_eq!(detect_inverse_semigroupoid(fixtures::single_arrow().table()).unwrap(), None);
    }

    #[test]
    fn right_inverses() {
        assert_eq!(has_right_inverses(&build_c(&fixtures::z2())), Ok(vec![0, 1]));
        assert!(has_right_inverses(&build_c(&fixtures::singleton())).is_ok());
        let s = fixtures::left_unital();
        assert_eq!(has_right_inverses(&build_c(&s)), Err(s.table().index_of("x").unwrap()));
    }
}

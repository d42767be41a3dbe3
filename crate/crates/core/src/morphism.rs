//! Restriction morphisms, premorphisms, inductive radiants and preradiants.
//!
//! Every checker tests each axiom on its own, so a map that fails a stronger
//! class is still examined axiom by axiom. Enumeration assigns images one
//! element at a time and drops a partial map as soon as some axiom instance
//! that only involves assigned elements fails.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::constellation::{CorestrictionTable, OrderedConstellation};
use crate::error::Error;
use crate::report::{Axiom, ValidationReport};
use crate::restriction::LeftRestrictionSemigroupoid;
use crate::table::Elem;

/// Default bound on `|target|^|source|` for enumeration.
pub const DEFAULT_MORPHISM_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureKind {
    Semigroupoid,
    Constellation,
}

/// Names a structure a map starts or ends at.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StructureRef {
    pub name: String,
    pub kind: StructureKind,
}

impl StructureRef {
    pub fn semigroupoid(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            kind: StructureKind::Semigroupoid,
        }
    }

    pub fn constellation(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            kind: StructureKind::Constellation,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Semigroupoid side to constellation side.
    C,
    /// Constellation side to semigroupoid side.
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MorphismKind {
    Restriction,
    Premorphism,
    InductiveRadiant,
    InductivePreradiant,
}

impl MorphismKind {
    pub fn source_kind(self) -> StructureKind {
        match self {
            MorphismKind::Restriction | MorphismKind::Premorphism => StructureKind::Semigroupoid,
            _ => StructureKind::Constellation,
        }
    }
}

/// A total function between two carriers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MorphismMap {
    pub source: StructureRef,
    pub target: StructureRef,
    map: Vec<Elem>,
}

impl MorphismMap {
    /// Checks that every image lies in a target of size `target_len`.
    pub fn new(source: StructureRef, target: StructureRef, map: Vec<Elem>, target_len: usize) -> Result<Self, Error> {
        if let Some(&bad) = map.iter().find(|&&y| y >= target_len) {
            return Err(Error::OutOfRange {
                elem: bad,
                len: target_len,
            });
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(on: StructureRef, n: usize) -> Self {
        Self {
            source: on.clone(),
            target: on,
            map: (0..n).collect(),
        }
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

fn rebase(r: &StructureRef, direction: Direction) -> StructureRef {
    let (wrap, unwrap, kind) = match direction {
        Direction::C => ("C(", "G(", StructureKind::Constellation),
        Direction::G => ("G(", "C(", StructureKind::Semigroupoid),
    };
    let name = match r.name.strip_prefix(unwrap).and_then(|s| s.strip_suffix(')')) {
        Some(inner) => String::from(inner),
        None => format!("{wrap}{})", r.name),
    };
    StructureRef { name, kind }
}

/// `Cφ` or `Gφ`: the same function between the transported structures.
///
/// `transport(transport(m, C), G) == m`.
pub fn transport(m: &MorphismMap, direction: Direction) -> MorphismMap {
    MorphismMap {
        source: rebase(&m.source, direction),
        target: rebase(&m.target, direction),
        map: m.map.clone(),
    }
}

/// `m2 ∘ m1`.
pub fn compose(m2: &MorphismMap, m1: &MorphismMap) -> Result<MorphismMap, Error> {
    if m1.target != m2.source {
        return Err(Error::Mismatch(format!(
            "target {} of the first map is not the source {} of the second",
            m1.target.name, m2.source.name
        )));
    }
    let map = m1
        .map
        .iter()
        .map(|&x| m2.map.get(x).copied().ok_or(Error::OutOfRange { elem: x, len: m2.len() }))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MorphismMap {
        source: m1.source.clone(),
        target: m2.target.clone(),
        map,
    })
}

fn shape(n: usize, m: usize, phi: &[Elem]) -> ValidationReport {
    let mut r = ValidationReport::new();
    if phi.len() != n {
        r.push(Axiom::MapShape, []);
    } else if let Some(x) = phi.iter().position(|&y| y >= m) {
        r.push(Axiom::MapShape, [x]);
    }
    r
}

fn total(phi: &[Elem]) -> Vec<Option<Elem>> {
    phi.iter().map(|&y| Some(y)).collect()
}

macro_rules! fail {
    ($r:ident, $first:expr, $ax:expr, $w:expr) => {{
        $r.push($ax, $w);
        if $first {
            return $r;
        }
    }};
}

fn rm_partial(s: &LeftRestrictionSemigroupoid, t: &LeftRestrictionSemigroupoid, phi: &[Option<Elem>], first: bool) -> ValidationReport {
    let mut r = ValidationReport::new();
    for (a, b, ab) in s.table().defined_triples() {
        if let (Some(fa), Some(fb), Some(fab)) = (phi[a], phi[b], phi[ab]) {
            if t.product(fa, fb) != Some(fab) {
                fail!(r, first, Axiom::Rm1, [a, b]);
            }
        }
    }
    for a in s.table().elements() {
        if let (Some(fa), Some(fap)) = (phi[a], phi[s.plus(a)]) {
            if fap != t.plus(fa) {
                fail!(r, first, Axiom::Rm2, [a]);
            }
        }
    }
    r
}

fn pm_partial(s: &LeftRestrictionSemigroupoid, t: &LeftRestrictionSemigroupoid, phi: &[Option<Elem>], first: bool) -> ValidationReport {
    let mut r = ValidationReport::new();
    for (a, b, ab) in s.table().defined_triples() {
        if let (Some(fa), Some(fb), Some(fab)) = (phi[a], phi[b], phi[ab]) {
            let lhs = t.product(fa, fb);
            let rhs = t.product(t.plus(fa), fab);
            if lhs.is_none() || lhs != rhs {
                fail!(r, first, Axiom::Pm1, [a, b]);
            }
        }
    }
    for a in s.table().elements() {
        if let (Some(fa), Some(fap)) = (phi[a], phi[s.plus(a)]) {
            if !t.le(t.plus(fa), fap) {
                fail!(r, first, Axiom::Pm2, [a]);
            }
        }
    }
    r
}

/// Precomputed corestrictions for the constellation-side checkers.
struct Pair<'a> {
    src: &'a OrderedConstellation,
    tgt: &'a OrderedConstellation,
    src_cores: CorestrictionTable,
    tgt_cores: CorestrictionTable,
}

impl<'a> Pair<'a> {
    fn new(src: &'a OrderedConstellation, tgt: &'a OrderedConstellation) -> Self {
        Self {
            src,
            tgt,
            src_cores: CorestrictionTable::new(src),
            tgt_cores: CorestrictionTable::new(tgt),
        }
    }

    /// Checks ir3 / ip3 and the corestriction axiom ir4 / ip4, which the two
    /// classes share.
    fn shared(&self, phi: &[Option<Elem>], first: bool, order_ax: Axiom, core_ax: Axiom, r: &mut ValidationReport) -> bool {
        let (s, t) = (self.src, self.tgt);
        for (x, y) in s.order().pairs() {
            if let (Some(fx), Some(fy)) = (phi[x], phi[y]) {
                if !t.le(fx, fy) {
                    r.push(order_ax, [x, y]);
                    if first {
                        return true;
                    }
                }
            }
        }
        for x in s.table().elements() {
            for e in s.projections() {
                let Some(xe) = self.src_cores.value(x, e) else {
                    continue;
                };
                if let (Some(fx), Some(fe), Some(fxe)) = (phi[x], phi[e], phi[xe]) {
                    if self.tgt_cores.value(fx, fe) != Some(fxe) {
                        r.push(core_ax, [x, e]);
                        if first {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    fn ir(&self, phi: &[Option<Elem>], first: bool) -> ValidationReport {
        let (s, t) = (self.src, self.tgt);
        let mut r = ValidationReport::new();
        for (x, y, xy) in s.table().defined_triples() {
            if let (Some(fx), Some(fy), Some(fxy)) = (phi[x], phi[y], phi[xy]) {
                if t.product(fx, fy) != Some(fxy) {
                    fail!(r, first, Axiom::Ir1, [x, y]);
                }
            }
        }
        for x in s.table().elements() {
            if let (Some(fx), Some(fxp)) = (phi[x], phi[s.plus(x)]) {
                if t.plus(fx) != fxp {
                    fail!(r, first, Axiom::Ir2, [x]);
                }
            }
        }
        if self.shared(phi, first, Axiom::Ir3, Axiom::Ir4, &mut r) {
            return r;
        }
        r
    }

    fn ip(&self, phi: &[Option<Elem>], first: bool) -> ValidationReport {
        let (s, t) = (self.src, self.tgt);
        let tc = &self.tgt_cores;
        let mut r = ValidationReport::new();
        for e in s.projections() {
            if let Some(fe) = phi[e] {
                if !t.is_projection(fe) {
                    fail!(r, first, Axiom::IpPlusImage, [e]);
                }
            }
        }
        for (x, y, xy) in s.table().defined_triples() {
            if let (Some(fx), Some(fy), Some(fxy)) = (phi[x], phi[y], phi[xy]) {
                let lhs = tc.pseudo_product(t, fx, fy);
                let rhs = tc.pseudo_product(t, t.plus(fx), fxy);
                if lhs.is_none() || lhs != rhs {
                    fail!(r, first, Axiom::Ip1, [x, y]);
                }
            }
        }
        for x in s.table().elements() {
            if let (Some(fx), Some(fxp)) = (phi[x], phi[s.plus(x)]) {
                if !t.le(t.plus(fx), fxp) {
                    fail!(r, first, Axiom::Ip2, [x]);
                }
            }
        }
        if self.shared(phi, first, Axiom::Ip3, Axiom::Ip4, &mut r) {
            return r;
        }
        for x in s.table().elements() {
            for e in s.projections() {
                if !s.le(e, s.plus(x)) {
                    continue;
                }
                let Ok(ex) = s.restrict(e, x) else {
                    continue;
                };
                if let (Some(fe), Some(fx), Some(fex)) = (phi[e], phi[x], phi[ex]) {
                    if tc.value(fe, t.plus(fx)) != Some(t.plus(fex)) {
                        fail!(r, first, Axiom::Ip5, [e, x]);
                    }
                }
            }
        }
        r
    }
}

/// rm1, rm2.
pub fn check_restriction_morphism(s: &LeftRestrictionSemigroupoid, t: &LeftRestrictionSemigroupoid, phi: &[Elem]) -> ValidationReport {
    let r = shape(s.len(), t.len(), phi);
    if !r.is_valid() {
        return r;
    }
    rm_partial(s, t, &total(phi), false)
}

/// pm1, pm2.
pub fn check_premorphism(s: &LeftRestrictionSemigroupoid, t: &LeftRestrictionSemigroupoid, phi: &[Elem]) -> ValidationReport {
    let r = shape(s.len(), t.len(), phi);
    if !r.is_valid() {
        return r;
    }
    pm_partial(s, t, &total(phi), false)
}

/// ir1 to ir4.
pub fn check_inductive_radiant(s: &OrderedConstellation, t: &OrderedConstellation, phi: &[Elem]) -> ValidationReport {
    let r = shape(s.len(), t.len(), phi);
    if !r.is_valid() {
        return r;
    }
    Pair::new(s, t).ir(&total(phi), false)
}

/// ip1 to ip5, and that projections go to projections (`ip-plus`).
///
/// A missing corestriction in ip5 counts as an ip5 failure.
pub fn check_inductive_preradiant(s: &OrderedConstellation, t: &OrderedConstellation, phi: &[Elem]) -> ValidationReport {
    let r = shape(s.len(), t.len(), phi);
    if !r.is_valid() {
        return r;
    }
    Pair::new(s, t).ip(&total(phi), false)
}

fn check_cap(n: usize, m: usize, cap: u128) -> Result<(), Error> {
    let requested = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if requested > cap {
        return Err(Error::CapExceeded { requested, cap });
    }
    Ok(())
}

/// Depth-first search over partial maps `0..n -> 0..m`, keeping those for
/// which `ok` holds at every prefix. Results come out in lexicographic order.
fn search(n: usize, m: usize, cap: u128, mut ok: impl FnMut(&[Option<Elem>]) -> bool) -> Result<Vec<Vec<Elem>>, Error> {
    check_cap(n, m, cap)?;
    let mut out = Vec::new();
    let mut phi: Vec<Option<Elem>> = vec![None; n];
    fn go(k: usize, m: usize, phi: &mut Vec<Option<Elem>>, ok: &mut dyn FnMut(&[Option<Elem>]) -> bool, out: &mut Vec<Vec<Elem>>) {
        if k == phi.len() {
            out.push(phi.iter().map(|v| v.unwrap()).collect());
            return;
        }
        for y in 0..m {
            phi[k] = Some(y);
            if ok(phi) {
                go(k + 1, m, phi, ok, out);
            }
        }
        phi[k] = None;
    }
    go(0, m, &mut phi, &mut ok, &mut out);
    Ok(out)
}

/// Every total map from an `n`-element carrier to an `m`-element one.
pub fn all_maps(n: usize, m: usize, cap: u128) -> Result<Vec<Vec<Elem>>, Error> {
    search(n, m, cap, |_| true)
}

pub fn restriction_morphisms(s: &LeftRestrictionSemigroupoid, t: &LeftRestrictionSemigroupoid, cap: u128) -> Result<Vec<Vec<Elem>>, Error> {
    search(s.len(), t.len(), cap, |phi| rm_partial(s, t, phi, true).is_valid())
}

pub fn premorphisms(s: &LeftRestrictionSemigroupoid, t: &LeftRestrictionSemigroupoid, cap: u128) -> Result<Vec<Vec<Elem>>, Error> {
    search(s.len(), t.len(), cap, |phi| pm_partial(s, t, phi, true).is_valid())
}

pub fn inductive_radiants(s: &OrderedConstellation, t: &OrderedConstellation, cap: u128) -> Result<Vec<Vec<Elem>>, Error> {
    let pair = Pair::new(s, t);
    search(s.len(), t.len(), cap, |phi| pair.ir(phi, true).is_valid())
}

pub fn inductive_preradiants(s: &OrderedConstellation, t: &OrderedConstellation, cap: u128) -> Result<Vec<Vec<Elem>>, Error> {
    let pair = Pair::new(s, t);
    search(s.len(), t.len(), cap, |phi| pair.ip(phi, true).is_valid())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::functor::build_c;

    fn idx(s: &LeftRestrictionSemigroupoid, l: &str) -> Elem {
        s.table().index_of(l).unwrap()
    }

    #[test]
    fn inclusion_into_semilattices() {
        // {e} -> T sending e to e
        let one = fixtures::singleton();
        let star = fixtures::semilattice();
        let ast = fixtures::semilattice_top();
        let phi = [idx(&star, "e")];
        assert!(check_restriction_morphism(&one, &star, &phi).is_valid());
        let r = check_restriction_morphism(&one, &ast, &phi);
        assert_eq!(r.axioms(), [Axiom::Rm2]);
    }

    #[test]
    fn singleton_into_star() {
        let maps = restriction_morphisms(&fixtures::singleton(), &fixtures::semilattice(), DEFAULT_MORPHISM_CAP).unwrap();
        assert_eq!(maps, [vec![0], vec![1]]);
    }

    #[test]
    fn identity_passes_everything() {
        for (name, s) in fixtures::extended() {
            let id: Vec<Elem> = s.table().elements().collect();
            assert!(check_restriction_morphism(&s, &s, &id).is_valid(), "{name}");
            assert!(check_premorphism(&s, &s, &id).is_valid(), "{name}");
            let c = build_c(&s);
            assert!(check_inductive_radiant(&c, &c, &id).is_valid(), "{name}");
            assert!(check_inductive_preradiant(&c, &c, &id).is_valid(), "{name}");
        }
    }

    #[test]
    fn into_singleton_only_one_map() {
        for (_, s) in fixtures::extended() {
            assert_eq!(all_maps(s.len(), 1, DEFAULT_MORPHISM_CAP).unwrap().len(), 1);
        }
    }

    #[test]
    fn pm2_mutation_on_left_unital() {
        // Identity, except x+ goes to y+: pm2 fails at x since x+ is not
        // below y+.
        let s = fixtures::left_unital();
        let mut phi: Vec<Elem> = s.table().elements().collect();
        phi[idx(&s, "x+")] = idx(&s, "y+");
        let r = check_premorphism(&s, &s, &phi);
        assert!(r.violations().iter().any(|v| v.axiom == Axiom::Pm2 && v.witness == [idx(&s, "x")]), "{r:?}");
    }

    #[test]
    fn bad_shapes() {
        let s = fixtures::single_arrow();
        assert_eq!(check_premorphism(&s, &s, &[0]).axioms(), [Axiom::MapShape]);
        assert_eq!(check_restriction_morphism(&s, &s, &[0, 5]).axioms(), [Axiom::MapShape]);
    }

    #[test]
    fn enumerated_sets_match_filtered_brute_force() {
        let s = fixtures::single_arrow();
        let t = fixtures::semilattice_top();
        let all = all_maps(s.len(), t.len(), DEFAULT_MORPHISM_CAP).unwrap();
        let brute: Vec<_> = all.iter().filter(|p| check_premorphism(&s, &t, p).is_valid()).cloned().collect();
        assert_eq!(premorphisms(&s, &t, DEFAULT_MORPHISM_CAP).unwrap(), brute);
        let (cs, ct) = (build_c(&s), build_c(&t));
        let brute: Vec<_> = all.iter().filter(|p| check_inductive_preradiant(&cs, &ct, p).is_valid()).cloned().collect();
        assert_eq!(inductive_preradiants(&cs, &ct, DEFAULT_MORPHISM_CAP).unwrap(), brute);
    }

    #[test]
    fn cap_is_enforced() {
        let s = fixtures::left_unital_tail();
        assert_eq!(
            all_maps(s.len(), s.len(), 1000),
            Err(Error::CapExceeded { requested: 823_543, cap: 1000 })
        );
    }

    #[test]
    fn transport_round_trip() {
        let m = MorphismMap::new(StructureRef::semigroupoid("a"), StructureRef::semigroupoid("b"), vec![0, 1], 2).unwrap();
        let c = transport(&m, Direction::C);
        assert_eq!(c.source, StructureRef::constellation("C(a)"));
        assert_eq!(transport(&c, Direction::G), m);
    }

    #[test]
    fn composition_checks_endpoints() {
        let a = StructureRef::semigroupoid("a");
        let b = StructureRef::semigroupoid("b");
        let f = MorphismMap::new(a.clone(), b.clone(), vec![1, 0], 2).unwrap();
        let id = MorphismMap::identity(b.clone(), 2);
        assert_eq!(compose(&id, &f).unwrap(), f);
        assert!(compose(&f, &f).is_err());
    }
}

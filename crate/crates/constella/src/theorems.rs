//! The theorem suite: nine checks, each computing both sides of
//! its claim independently over fixtures and enumerated censuses.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use constella_core::classify::{
    classify_constellation, classify_semigroupoid, derive_plus_from_inverses, detect_category,
    detect_inverse_semigroupoid, detect_semigroup, has_right_inverses, idempotents_commute, nd_lc_u_semigroupoid,
};
use constella_core::constellation::check_li_constellation;
use constella_core::enumerate::{enumerate_li_constellations, enumerate_lr_semigroupoids, DEFAULT_MAX_SIZE};
use constella_core::fixtures;
use constella_core::functor::{build_c, build_g, roundtrip_constellation, roundtrip_semigroupoid};
use constella_core::morphism::{
    check_inductive_preradiant, check_inductive_radiant, check_premorphism, check_restriction_morphism, compose,
    inductive_preradiants, inductive_radiants, premorphisms, restriction_morphisms, transport, Direction,
    MorphismMap, StructureRef, DEFAULT_MORPHISM_CAP,
};
use constella_core::restriction::{check_left_restriction, check_semigroupoid, idempotents};
use constella_core::szendrei::{expand_constellation, expand_semigroupoid, extend, generation_decomposition, iota, SzendreiElement};
use constella_core::{
    Corestriction, Elem, Error, LeftRestrictionSemigroupoid, OrderedConstellation, RestrictionStructure,
    ValidationReport,
};

/// Labelled census sizes for `n = 1, 2, 3, 4`. Left restriction semigroupoids
/// and li-constellations share them.
pub const CENSUS_COUNTS: [usize; 4] = [1, 9, 130, 3021];

/// The same censuses up to isomorphism.
pub const CENSUS_COUNTS_UP_TO_ISO: [usize; 4] = [1, 5, 25, 155];

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub morphism_cap: u128,
    pub max_size: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            morphism_cap: DEFAULT_MORPHISM_CAP,
            max_size: DEFAULT_MAX_SIZE,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {} {:<28} {} ({:.2?}) {}",
            self.id,
            self.title,
            if self.passed { "PASS" } else { "FAIL" },
            self.elapsed,
            self.detail
        )
    }
}

pub const TITLES: [&str; 9] = [
    "fixture validation",
    "classification verdicts",
    "round trip",
    "morphism correspondence",
    "szendrei coherence",
    "universal property",
    "classification equivalences",
    "census bijectivity",
    "mutation sensitivity",
];

/// Runs criterion `id` (1 to 9). `size` bounds the census for criteria 3, 7
/// and 8; criteria 4 and 6 use at most size 2.
pub fn run(id: u8, size: usize, limits: Limits) -> Outcome {
    let start = Instant::now();
    let result = match id {
        1 => fixture_validation(),
        2 => classification_verdicts(),
        3 => round_trip(size, limits),
        4 => morphism_correspondence(size.min(2), limits),
        5 => szendrei_coherence(),
        6 => universal_property(size.min(2), limits),
        7 => equivalences(size, limits),
        8 => census_bijectivity(size, limits),
        9 => mutation_sensitivity(),
        _ => Err(format!("no criterion {id}")),
    };
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome {
        id,
        title: TITLES.get(usize::from(id).wrapping_sub(1)).copied().unwrap_or("unknown"),
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

pub fn run_all(size: usize, limits: Limits) -> Vec<Outcome> {
    (1..=9).map(|id| run(id, size, limits)).collect()
}

type Check = Result<String, String>;

fn core<T>(r: Result<T, Error>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn lr_census(max_n: usize, limits: Limits) -> Result<Vec<LeftRestrictionSemigroupoid>, String> {
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(core(enumerate_lr_semigroupoids(n, limits.max_size), "lr census")?);
    }
    Ok(all)
}

fn li_census(max_n: usize, limits: Limits) -> Result<Vec<OrderedConstellation>, String> {
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(core(enumerate_li_constellations(n, limits.max_size), "li census")?);
    }
    Ok(all)
}

fn fixture_validation() -> Check {
    let all = fixtures::all();
    for (name, s) in &all {
        let mut r = check_semigroupoid(s.table());
        r.extend(check_left_restriction(s.table(), s.restriction()));
        ensure(r.is_valid(), || format!("{name} fails {:?}", r.axioms()))?;
        let c = check_li_constellation(&build_c(s));
        ensure(c.is_valid(), || format!("C({name}) fails {:?}", c.axioms()))?;
    }
    Ok(format!("{} fixtures and their C images", all.len()))
}

/// `(nd, lc, unitary)` as the worked examples state them.
pub const KNOWN_VERDICTS: [(&str, (bool, bool, bool)); 5] = [
    ("semilattice_zero", (true, false, false)),
    ("semilattice_zero_tail", (false, false, false)),
    ("single_arrow", (false, true, true)),
    ("left_unital", (true, true, false)),
    ("left_unital_tail", (false, true, false)),
];

fn classification_verdicts() -> Check {
    let all = fixtures::all();
    for (name, expected) in KNOWN_VERDICTS {
        let s = &all.iter().find(|(n, _)| *n == name).expect("fixture").1;
        let got = core(classify_semigroupoid(s), name)?.nd_lc_u();
        ensure(got == expected, || format!("{name}: (nd, lc, u) = {got:?}, expected {expected:?}"))?;
    }
    Ok(format!("{} examples", KNOWN_VERDICTS.len()))
}

fn round_trip(size: usize, limits: Limits) -> Check {
    let mut count = 0;
    for (name, s) in fixtures::extended() {
        ensure(core(roundtrip_semigroupoid(&s), name)?, || format!("G(C({name})) differs"))?;
        ensure(core(roundtrip_constellation(&build_c(&s)), name)?, || format!("C(G(C({name}))) differs"))?;
        count += 1;
    }
    for s in lr_census(size, limits)? {
        ensure(core(roundtrip_semigroupoid(&s), "census")?, || format!("G(C(S)) differs for {s:?}"))?;
        count += 1;
    }
    for t in li_census(size, limits)? {
        ensure(core(roundtrip_constellation(&t), "census")?, || format!("C(G(T)) differs for {t:?}"))?;
        count += 1;
    }
    Ok(format!("{count} structures"))
}

fn morphism_correspondence(size: usize, limits: Limits) -> Check {
    let cap = limits.morphism_cap;
    let census = lr_census(size, limits)?;
    let fixture_list: Vec<_> = fixtures::all().into_iter().map(|(_, s)| s).collect();
    let mut pairs = 0;
    let mut maps = 0;
    for group in [&census, &fixture_list] {
        let cs: Vec<_> = group.iter().map(build_c).collect();
        for (i, s) in group.iter().enumerate() {
            for (j, t) in group.iter().enumerate() {
                let rm = core(restriction_morphisms(s, t, cap), "rm")?;
                let ir = core(inductive_radiants(&cs[i], &cs[j], cap), "ir")?;
                ensure(rm == ir, || format!("rm and ir differ between {i} and {j}"))?;
                let pm = core(premorphisms(s, t, cap), "pm")?;
                let ip = core(inductive_preradiants(&cs[i], &cs[j], cap), "ip")?;
                ensure(pm == ip, || format!("pm and ip differ between {i} and {j}"))?;
                pairs += 1;
                maps += rm.len() + pm.len();
            }
            let id: Vec<Elem> = (0..s.len()).collect();
            ensure(
                check_restriction_morphism(s, s, &id).is_valid()
                    && check_premorphism(s, s, &id).is_valid()
                    && check_inductive_radiant(&cs[i], &cs[i], &id).is_valid()
                    && check_inductive_preradiant(&cs[i], &cs[i], &id).is_valid(),
                || format!("identity on {i} fails"),
            )?;
        }
    }
    let composites = compositions(&census, limits)?;
    Ok(format!("{pairs} pairs, {maps} maps, {composites} composites"))
}

/// Composites of composable restriction morphisms (and premorphisms) are again
/// in the class on both sides, and composing commutes with transport along C.
fn compositions(group: &[LeftRestrictionSemigroupoid], limits: Limits) -> Result<usize, String> {
    let cap = limits.morphism_cap;
    let cs: Vec<_> = group.iter().map(build_c).collect();
    let name = |i: usize| StructureRef::semigroupoid(format!("S{i}"));
    let mut rm = Vec::new();
    let mut pm = Vec::new();
    for (i, s) in group.iter().enumerate() {
        rm.push(Vec::new());
        pm.push(Vec::new());
        for t in group {
            rm[i].push(core(restriction_morphisms(s, t, cap), "rm")?);
            pm[i].push(core(premorphisms(s, t, cap), "pm")?);
        }
    }
    let mut count = 0;
    let n = group.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for (sets, strict) in [(&rm, true), (&pm, false)] {
                    for f in &sets[a][b] {
                        for g in &sets[b][c] {
                            let mf = core(MorphismMap::new(name(a), name(b), f.clone(), group[b].len()), "map")?;
                            let mg = core(MorphismMap::new(name(b), name(c), g.clone(), group[c].len()), "map")?;
                            let gf = core(compose(&mg, &mf), "compose")?;
                            let via_c = core(
                                compose(&transport(&mg, Direction::C), &transport(&mf, Direction::C)),
                                "compose",
                            )?;
                            ensure(via_c == transport(&gf, Direction::C), || "composition does not commute with C".into())?;
                            let (left, right) = if strict {
                                (
                                    check_restriction_morphism(&group[a], &group[c], gf.map()),
                                    check_inductive_radiant(&cs[a], &cs[c], via_c.map()),
                                )
                            } else {
                                (
                                    check_premorphism(&group[a], &group[c], gf.map()),
                                    check_inductive_preradiant(&cs[a], &cs[c], via_c.map()),
                                )
                            };
                            ensure(left.is_valid() && right.is_valid(), || {
                                format!("composite {:?} leaves the class ({a}, {b}, {c})", gf.map())
                            })?;
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(count)
}

fn szendrei_coherence() -> Check {
    let mut restrictions = 0;
    let mut corestrictions = 0;
    for (name, s) in fixtures::extended() {
        let sz_s = core(expand_semigroupoid(&s), name)?;
        let c = build_c(&s);
        let sz_c = core(expand_constellation(&c), name)?;
        ensure(build_c(&sz_s.structure) == sz_c.structure, || format!("C(Sz({name})) != Sz(C({name}))"))?;
        let sz = &sz_c.structure;
        let projections = sz.projections();
        for x in 0..sz.len() {
            let SzendreiElement { subset: a_set, anchor: a } = sz_c.element(x).clone();
            for &p in &projections {
                let SzendreiElement { subset: e_set, anchor: e } = sz_c.element(p).clone();
                if sz.le(p, sz.plus(x)) {
                    let r = core(c.restrict(e, a), name)?;
                    let expected = sz_c.index_of(&SzendreiElement::new(e_set.clone(), r));
                    let got = core(sz.restrict(p, x), name)?;
                    ensure(expected == Some(got), || format!("{name}: restriction of {x} to {p}"))?;
                    restrictions += 1;
                }
                let got = core(sz.corestrict(x, p), name)?;
                let expected = match core(c.corestrict(a, e), name)? {
                    Corestriction::Value(v) => {
                        let vp = c.plus(v);
                        let mut set = Vec::new();
                        for &y in &a_set {
                            set.push(core(c.restrict(vp, y), name)?);
                        }
                        for &y in &e_set {
                            set.push(c.product(v, y).ok_or_else(|| format!("{name}: {v} * {y} undefined"))?);
                        }
                        Some(SzendreiElement::new(set, v))
                    }
                    _ => None,
                };
                let ok = match (&got, &expected) {
                    (Corestriction::Value(g), Some(el)) => sz_c.element(*g) == el,
                    (Corestriction::Value(_), None) => false,
                    (_, Some(_)) => false,
                    (_, None) => true,
                };
                ensure(ok, || format!("{name}: corestriction of {x} to {p}: {got:?} vs {expected:?}"))?;
                corestrictions += 1;
            }
        }
    }
    Ok(format!("{restrictions} restrictions, {corestrictions} corestrictions"))
}

fn universal_property(size: usize, limits: Limits) -> Check {
    let cap = limits.morphism_cap;
    let census = li_census(size, limits)?;
    let mut preradiants = 0;
    let mut radiants = 0;
    for t in &census {
        let sz = core(expand_constellation(t), "Sz")?;
        let io = core(iota(t.restriction(), &sz), "iota")?;
        for target in &census {
            let all_radiants = core(inductive_radiants(&sz.structure, target, cap), "ir")?;
            for phi in core(inductive_preradiants(t, target, cap), "ip")? {
                let ext = core(extend(&phi, target, &sz), "extend")?;
                let r = check_inductive_radiant(&sz.structure, target, &ext);
                ensure(r.is_valid(), || format!("extension of {phi:?} fails {:?}", r.axioms()))?;
                let back: Vec<Elem> = io.iter().map(|&i| ext[i]).collect();
                ensure(back == phi, || format!("extension of {phi:?} restricts to {back:?}"))?;
                for (el, &image) in ext.iter().enumerate() {
                    let term = generation_decomposition(t.restriction(), sz.element(el));
                    let v = core(term.eval_with(target, &|x| phi[x]), "witness")?;
                    ensure(v == image, || format!("witness for {el} gives {v}, extension {image}"))?;
                }
                let through: Vec<_> = all_radiants
                    .iter()
                    .filter(|psi| io.iter().map(|&i| psi[i]).eq(phi.iter().copied()))
                    .collect();
                ensure(through == [&ext], || format!("{} radiants restrict to {phi:?}", through.len()))?;
                preradiants += 1;
            }
            for psi in &all_radiants {
                let restricted: Vec<Elem> = io.iter().map(|&i| psi[i]).collect();
                let r = check_inductive_preradiant(t, target, &restricted);
                ensure(r.is_valid(), || format!("radiant {psi:?} restricts to a non-preradiant"))?;
                radiants += 1;
            }
        }
    }
    Ok(format!("{preradiants} preradiants, {radiants} radiants"))
}

fn projections_form_meet_semilattice(t: &OrderedConstellation) -> bool {
    let p = t.projections();
    p.iter().all(|&e| p.iter().all(|&f| t.order().meet_within(e, f, &p).is_some()))
}

fn equivalences(size: usize, limits: Limits) -> Check {
    let mut structures: Vec<_> = fixtures::extended().into_iter().map(|(_, s)| s).collect();
    structures.extend(lr_census(size, limits)?);
    let mut categories = 0;
    let mut semigroups = 0;
    let mut inverse = 0;
    for s in &structures {
        let c = build_c(s);
        let rep = core(classify_constellation(&c), "classify")?;
        let direct = nd_lc_u_semigroupoid(s);
        ensure(direct == rep.nd_lc_u(), || format!("nd/lc/u {direct:?} vs {:?} for {s:?}", rep.nd_lc_u()))?;

        let category = detect_category(s);
        ensure(category.is_some() == (rep.nd && rep.unitary), || format!("category verdict for {s:?}"))?;
        if rep.nd && rep.unitary {
            let g = core(build_g(&c), "G")?;
            ensure(detect_category(&g).is_some(), || format!("G(C(S)) has no identities for {s:?}"))?;
            categories += 1;
        }

        let n = s.len();
        let total = s.table().defined_count() == n * n;
        let meets = rep.nd && projections_form_meet_semilattice(&c);
        let projections = c.projections();
        let mut corestrictions = true;
        for x in 0..n {
            for &e in &projections {
                corestrictions &= core(c.corestrict(x, e), "corestrict")?.exists();
            }
        }
        ensure(total == meets && meets == corestrictions, || {
            format!("semigroup conditions {total} {meets} {corestrictions} for {s:?}")
        })?;
        ensure(core(detect_semigroup(s), "semigroup")? == total, || format!("detect_semigroup for {s:?}"))?;
        semigroups += usize::from(total);

        let inverses = core(detect_inverse_semigroupoid(s.table()), "inverse")?;
        let lhs = match &inverses {
            Some(inv) => core(derive_plus_from_inverses(s.table(), inv), "derived plus")? == *s.restriction(),
            None => false,
        };
        let right = has_right_inverses(&c).is_ok();
        ensure(lhs == right, || format!("inverse {lhs} vs right inverses {right} for {s:?}"))?;
        if right {
            let g = core(build_g(&c), "G")?;
            let idem: BTreeSet<Elem> = idempotents(g.table()).into_iter().collect();
            let proj: BTreeSet<Elem> = g.projections().into_iter().collect();
            ensure(idempotents_commute(g.table()) && idem == proj, || format!("idempotents of G(T) for {s:?}"))?;
            ensure(rep.nd && rep.unitary || !rep.lc, || format!("right inverses and lc without nd and u for {s:?}"))?;
            inverse += 1;
        }
    }
    Ok(format!(
        "{} structures, {categories} categories, {semigroups} semigroups, {inverse} with right inverses",
        structures.len()
    ))
}

fn census_bijectivity(size: usize, limits: Limits) -> Check {
    let mut counts = Vec::new();
    for n in 1..=size {
        let lr = core(enumerate_lr_semigroupoids(n, limits.max_size), "lr census")?;
        let li = core(enumerate_li_constellations(n, limits.max_size), "li census")?;
        ensure(lr.len() == li.len(), || format!("n = {n}: {} lr vs {} li", lr.len(), li.len()))?;
        if let Some(&frozen) = CENSUS_COUNTS.get(n - 1) {
            ensure(lr.len() == frozen, || format!("n = {n}: {} structures, frozen count {frozen}", lr.len()))?;
        }
        let images: BTreeSet<OrderedConstellation> = lr.iter().map(build_c).collect();
        let targets: BTreeSet<OrderedConstellation> = li.into_iter().collect();
        ensure(images.len() == lr.len(), || format!("n = {n}: C is not injective"))?;
        ensure(images == targets, || format!("n = {n}: C images differ from the li census"))?;
        counts.push(lr.len().to_string());
    }
    Ok(format!("counts {}", counts.join(", ")))
}

/// Axioms that single-entry mutations must be able to expose, with the
/// families for morphism classes.
pub const MUTATION_TARGETS: [&str; 21] = [
    "lr1", "lr2", "lr3", "lr4", "c1", "c2", "c3", "c4", "wo1", "wo2", "wo3", "wo4", "wo5", "wo6", "wo7", "wo8", "wo9",
    "rm", "pm", "ir", "ip",
];

/// Every axiom id and family named by some single-entry mutation of a
/// fixture: one table cell, one plus entry, one order pair, or one value of
/// the identity map.
pub fn mutation_hits() -> BTreeSet<&'static str> {
    let mut hit = BTreeSet::new();
    let mut note = |r: ValidationReport| {
        for ax in r.axioms() {
            hit.insert(ax.id());
            hit.insert(ax.family());
        }
    };
    for (_, s) in fixtures::extended() {
        let n = s.len();
        let values = || std::iter::once(None).chain((0..n).map(Some));
        let replace = |p: &RestrictionStructure, a: Elem, v: Elem| {
            let mut p = p.as_slice().to_vec();
            p[a] = v;
            RestrictionStructure::new(p, n).expect("in range")
        };
        for a in 0..n {
            for b in 0..n {
                for v in values().filter(|&v| v != s.product(a, b)) {
                    let mut t = s.table().clone();
                    t.set(a, b, v);
                    let mut r = check_semigroupoid(&t);
                    r.extend(check_left_restriction(&t, s.restriction()));
                    note(r);
                }
            }
            for v in (0..n).filter(|&v| v != s.plus(a)) {
                note(check_left_restriction(s.table(), &replace(s.restriction(), a, v)));
            }
        }
        let c = build_c(&s);
        let (tab, plus, ord) = c.clone().into_parts();
        let li = |t, p, o| check_li_constellation(&OrderedConstellation::new(t, p, o).expect("same size"));
        for a in 0..n {
            for b in 0..n {
                for v in values().filter(|&v| v != tab.get(a, b)) {
                    let mut t = tab.clone();
                    t.set(a, b, v);
                    note(li(t, plus.clone(), ord.clone()));
                }
                if a != b {
                    let mut o = ord.clone();
                    o.set(a, b, !o.le(a, b));
                    note(li(tab.clone(), plus.clone(), o));
                }
            }
            for v in (0..n).filter(|&v| v != plus.get(a)) {
                note(li(tab.clone(), replace(&plus, a, v), ord.clone()));
            }
        }
        for a in 0..n {
            for v in (0..n).filter(|&v| v != a) {
                let mut phi: Vec<Elem> = (0..n).collect();
                phi[a] = v;
                note(check_restriction_morphism(&s, &s, &phi));
                note(check_premorphism(&s, &s, &phi));
                note(check_inductive_radiant(&c, &c, &phi));
                note(check_inductive_preradiant(&c, &c, &phi));
            }
        }
    }
    hit
}

fn mutation_sensitivity() -> Check {
    let hit = mutation_hits();
    let missing: Vec<_> = MUTATION_TARGETS.iter().filter(|t| !hit.contains(*t)).collect();
    ensure(missing.is_empty(), || format!("never rejected: {missing:?}"))?;
    Ok(format!("{} targets, {} ids named", MUTATION_TARGETS.len(), hit.len()))
}

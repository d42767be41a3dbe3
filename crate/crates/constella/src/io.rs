//! Text formats for structures and morphisms.
//!
//! A structure file is line oriented. `#` starts a comment and `;` separates
//! statements on one line, so a whole structure fits on a single line.
//!
//! ```text
//! kind semigroupoid
//! elements e x
//! plus e e
//! plus x e
//! comp e e e
//! comp e x x
//! ```
//!
//! Constellation files may add `order a b` lines (`a <= b`); the parser takes
//! the reflexive-transitive closure.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use constella_core::constellation::check_li_constellation;
use constella_core::restriction::{check_left_restriction, check_semigroupoid};
use constella_core::table::is_valid_id;
use constella_core::{
    Elem, LeftRestrictionSemigroupoid, OrderRelation, OrderedConstellation, PartialTable, RestrictionStructure,
    ValidationReport,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Semigroupoid,
    Constellation,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Semigroupoid => "semigroupoid",
            Kind::Constellation => "constellation",
        }
    }
}

/// A parsed structure that has not been checked against any axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub kind: Kind,
    pub table: PartialTable,
    pub plus: RestrictionStructure,
    /// Present exactly for constellations. Always a partial order.
    pub order: Option<OrderRelation>,
}

/// A structure that satisfies its axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Semigroupoid(LeftRestrictionSemigroupoid),
    Constellation(OrderedConstellation),
}

impl Structure {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::Semigroupoid(_) => Kind::Semigroupoid,
            Structure::Constellation(_) => Kind::Constellation,
        }
    }

    pub fn table(&self) -> &PartialTable {
        match self {
            Structure::Semigroupoid(s) => s.table(),
            Structure::Constellation(t) => t.table(),
        }
    }
}

impl Document {
    /// Every axiom violation for the declared kind.
    pub fn validate(&self) -> ValidationReport {
        match &self.order {
            None => {
                let mut r = check_semigroupoid(&self.table);
                r.extend(check_left_restriction(&self.table, &self.plus));
                r
            }
            Some(order) => check_li_constellation(&self.constellation_unchecked(order)),
        }
    }

    fn constellation_unchecked(&self, order: &OrderRelation) -> OrderedConstellation {
        OrderedConstellation::new(self.table.clone(), self.plus.clone(), order.clone()).expect("parser sizes agree")
    }

    pub fn into_structure(self) -> Result<Structure, ValidationReport> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(report);
        }
        Ok(match &self.order {
            None => Structure::Semigroupoid(
                LeftRestrictionSemigroupoid::new(self.table, self.plus).expect("validated"),
            ),
            Some(order) => Structure::Constellation(self.constellation_unchecked(order)),
        })
    }
}

impl From<&Structure> for Document {
    fn from(s: &Structure) -> Self {
        match s {
            Structure::Semigroupoid(s) => Document::from(s),
            Structure::Constellation(t) => Document::from(t),
        }
    }
}

impl From<&LeftRestrictionSemigroupoid> for Document {
    fn from(s: &LeftRestrictionSemigroupoid) -> Self {
        Document {
            kind: Kind::Semigroupoid,
            table: s.table().clone(),
            plus: s.restriction().clone(),
            order: None,
        }
    }
}

impl From<&OrderedConstellation> for Document {
    fn from(t: &OrderedConstellation) -> Self {
        Document {
            kind: Kind::Constellation,
            table: t.table().clone(),
            plus: t.restriction().clone(),
            order: Some(t.order().clone()),
        }
    }
}

/// Splits `text` into numbered, comment-free, non-empty statements.
fn statements(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().flat_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        line.split(';')
            .map(|s| s.split_whitespace().collect::<Vec<_>>())
            .filter(|w| !w.is_empty())
            .map(move |w| (i + 1, w))
            .collect::<Vec<_>>()
    })
}

fn arity(line: usize, words: &[&str], n: usize) -> Result<(), ParseError> {
    if words.len() != n + 1 {
        return err(line, format!("`{}` takes {n} argument(s), found {}", words[0], words.len() - 1));
    }
    Ok(())
}

pub fn parse_structure(text: &str) -> Result<Document, ParseError> {
    let mut stmts = statements(text);
    let kind = match stmts.next() {
        Some((line, w)) if w[0] == "kind" => {
            arity(line, &w, 1)?;
            match w[1] {
                "semigroupoid" => Kind::Semigroupoid,
                "constellation" => Kind::Constellation,
                other => return err(line, format!("unknown kind `{other}`")),
            }
        }
        Some((line, _)) => return err(line, "expected `kind semigroupoid` or `kind constellation`"),
        None => return err(1, "empty file"),
    };
    let mut table: Option<PartialTable> = None;
    let mut plus: Vec<Option<Elem>> = Vec::new();
    let mut order_pairs: Vec<(usize, Elem, Elem)> = Vec::new();
    let mut last_line = 1;
    for (line, w) in stmts {
        last_line = line;
        if w[0] == "elements" {
            if table.is_some() {
                return err(line, "second `elements` line");
            }
            let labels = &w[1..];
            if labels.is_empty() {
                return err(line, "empty elements list");
            }
            for (i, l) in labels.iter().enumerate() {
                if !is_valid_id(l) {
                    return err(line, format!("invalid element id `{l}`"));
                }
                if labels[..i].contains(l) {
                    return err(line, format!("duplicate element `{l}`"));
                }
            }
            plus = vec![None; labels.len()];
            table = Some(PartialTable::new(labels.iter().copied()).expect("ids checked"));
            continue;
        }
        let Some(t) = table.as_mut() else {
            return err(line, format!("`{}` before `elements`", w[0]));
        };
        let elem = |label: &str| t.index_of(label).ok_or_else(|| ParseError {
            line,
            message: format!("unknown element `{label}`"),
        });
        match w[0] {
            "plus" => {
                arity(line, &w, 2)?;
                let (a, b) = (elem(w[1])?, elem(w[2])?);
                if plus[a].is_some() {
                    return err(line, format!("duplicate plus line for `{}`", w[1]));
                }
                plus[a] = Some(b);
            }
            "comp" => {
                arity(line, &w, 3)?;
                let (a, b, c) = (elem(w[1])?, elem(w[2])?, elem(w[3])?);
                if t.is_defined(a, b) {
                    return err(line, format!("duplicate comp line for `{} {}`", w[1], w[2]));
                }
                t.set(a, b, Some(c));
            }
            "order" => {
                if kind == Kind::Semigroupoid {
                    return err(line, "order lines are not allowed for a semigroupoid");
                }
                arity(line, &w, 2)?;
                order_pairs.push((line, elem(w[1])?, elem(w[2])?));
            }
            "kind" => return err(line, "second `kind` line"),
            other => return err(line, format!("unknown statement `{other}`")),
        }
    }
    let Some(table) = table else {
        return err(last_line, "missing `elements` line");
    };
    let n = table.len();
    let mut full = Vec::with_capacity(n);
    for (i, p) in plus.iter().enumerate() {
        match p {
            Some(p) => full.push(*p),
            None => return err(last_line, format!("missing plus line for `{}`", table.label(i))),
        }
    }
    let plus = RestrictionStructure::new(full, n).expect("indices in range");
    let order = match kind {
        Kind::Semigroupoid => None,
        Kind::Constellation => {
            let mut rel = OrderRelation::discrete(n);
            for &(line, a, b) in &order_pairs {
                if a != b && rel.le(b, a) {
                    return err(
                        line,
                        format!(
                            "order is not a partial order: `{}` and `{}` lie on a cycle",
                            table.label(a),
                            table.label(b)
                        ),
                    );
                }
                rel.set(a, b, true);
                rel = rel.closure();
            }
            Some(rel)
        }
    };
    Ok(Document {
        kind,
        table,
        plus,
        order,
    })
}

/// Canonical text: elements, plus and comp lines in label order, and only the
/// covering pairs of the order.
pub fn serialize(doc: &Document) -> String {
    let t = &doc.table;
    let label = |e: Elem| t.label(e);
    let mut sorted: Vec<Elem> = t.elements().collect();
    sorted.sort_by_key(|&e| label(e));
    let mut out = String::new();
    writeln!(out, "kind {}", doc.kind.name()).unwrap();
    let names: Vec<&str> = sorted.iter().map(|&e| label(e)).collect();
    writeln!(out, "elements {}", names.join(" ")).unwrap();
    for &e in &sorted {
        writeln!(out, "plus {} {}", label(e), label(doc.plus.get(e))).unwrap();
    }
    let comps: BTreeSet<(&str, &str, &str)> = t
        .defined_triples()
        .map(|(a, b, c)| (label(a), label(b), label(c)))
        .collect();
    for (a, b, c) in comps {
        writeln!(out, "comp {a} {b} {c}").unwrap();
    }
    if let Some(order) = &doc.order {
        let covers: BTreeSet<(&str, &str)> = order.covers().into_iter().map(|(a, b)| (label(a), label(b))).collect();
        for (a, b) in covers {
            writeln!(out, "order {a} {b}").unwrap();
        }
    }
    out
}

pub fn serialize_structure(s: &Structure) -> String {
    serialize(&Document::from(s))
}

/// The canonical text on one line, statements joined by `; `.
pub fn single_line(text: &str) -> String {
    text.lines().collect::<Vec<_>>().join("; ")
}

/// A morphism file: paths of source and target and one `map a b` per source
/// element, still in terms of labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismDocument {
    pub source: String,
    pub target: String,
    /// `(line, source label, target label)`.
    pub pairs: Vec<(usize, String, String)>,
}

pub fn parse_morphism(text: &str) -> Result<MorphismDocument, ParseError> {
    let mut source = None;
    let mut target = None;
    let mut pairs = Vec::new();
    let mut last_line = 1;
    for (line, w) in statements(text) {
        last_line = line;
        match w[0] {
            "source" | "target" => {
                arity(line, &w, 1)?;
                let slot = if w[0] == "source" { &mut source } else { &mut target };
                if slot.is_some() {
                    return err(line, format!("second `{}` line", w[0]));
                }
                *slot = Some(w[1].to_string());
            }
            "map" => {
                arity(line, &w, 2)?;
                pairs.push((line, w[1].to_string(), w[2].to_string()));
            }
            other => return err(line, format!("unknown statement `{other}`")),
        }
    }
    let Some(source) = source else {
        return err(last_line, "missing `source` line");
    };
    let Some(target) = target else {
        return err(last_line, "missing `target` line");
    };
    Ok(MorphismDocument { source, target, pairs })
}

impl MorphismDocument {
    /// Resolves labels against the two carriers. Every source element must be
    /// mapped exactly once.
    pub fn resolve(&self, source: &PartialTable, target: &PartialTable) -> Result<Vec<Elem>, ParseError> {
        let mut map = vec![None; source.len()];
        for (line, a, b) in &self.pairs {
            let Some(ia) = source.index_of(a) else {
                return err(*line, format!("unknown source element `{a}`"));
            };
            let Some(ib) = target.index_of(b) else {
                return err(*line, format!("unknown target element `{b}`"));
            };
            if map[ia].is_some() {
                return err(*line, format!("duplicate map line for `{a}`"));
            }
            map[ia] = Some(ib);
        }
        let last = self.pairs.last().map_or(1, |p| p.0);
        map.into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| ParseError {
                line: last,
                message: format!("no map line for `{}`", source.label(i)),
            }))
            .collect()
    }
}

/// Morphism file text, `map` lines in source label order.
pub fn serialize_morphism(source: &str, target: &str, from: &PartialTable, to: &PartialTable, map: &[Elem]) -> String {
    let mut out = format!("source {source}\ntarget {target}\n");
    let mut lines: Vec<(&str, &str)> = from.elements().map(|a| (from.label(a), to.label(map[a]))).collect();
    lines.sort();
    for (a, b) in lines {
        writeln!(out, "map {a} {b}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use constella_core::fixtures;
    use constella_core::functor::build_c;

    #[test]
    fn singleton_has_four_lines() {
        let text = serialize_structure(&Structure::Semigroupoid(fixtures::singleton()));
        assert_eq!(text, "kind semigroupoid\nelements e\nplus e e\ncomp e e e\n");
    }

    #[test]
    fn c_of_semilattice_zero_emits_covers() {
        let text = serialize_structure(&Structure::Constellation(build_c(&fixtures::semilattice_zero())));
        let orders: Vec<&str> = text.lines().filter(|l| l.starts_with("order")).collect();
        assert_eq!(orders, ["order 0 e", "order 0 f"]);
    }

    #[test]
    fn fixtures_round_trip() {
        for (name, s) in fixtures::extended() {
            for st in [Structure::Semigroupoid(s.clone()), Structure::Constellation(build_c(&s))] {
                let text = serialize_structure(&st);
                let doc = parse_structure(&text).unwrap();
                assert_eq!(serialize(&doc), text, "{name}");
                let back = doc.into_structure().unwrap();
                assert_eq!(back.table().defined_count(), st.table().defined_count(), "{name}");
                assert_eq!(parse_structure(&single_line(&text)).unwrap(), parse_structure(&text).unwrap());
            }
        }
    }

    #[test]
    fn parse_errors_carry_lines() {
        let cases = [
            ("kind semigroupoid\nelements\n", 2, "empty elements"),
            ("kind semigroupoid\nelements a\nplus a a\ncomp a a a\ncomp a a a\n", 5, "duplicate comp"),
            ("kind semigroupoid\nelements a\nplus a b\n", 3, "unknown element"),
            ("kind semigroupoid\nelements a\nplus a a\norder a a\n", 4, "not allowed"),
            ("kind constellation\nelements a b\nplus a a\nplus b b\norder a b\n# c\norder b a\n", 7, "partial order"),
            ("kind semigroupoid\nelements a b\nplus a a\n", 3, "missing plus"),
            ("elements a\n", 1, "expected `kind"),
            ("kind monoid\n", 1, "unknown kind"),
            ("kind semigroupoid\nelements a a\n", 2, "duplicate element"),
            ("kind semigroupoid\nelements a-b\n", 2, "invalid element id"),
        ];
        for (text, line, needle) in cases {
            let e = parse_structure(text).unwrap_err();
            assert_eq!(e.line, line, "{text}");
            assert!(e.message.contains(needle), "{e}");
        }
    }

    #[test]
    fn comments_and_separators() {
        let doc = parse_structure("# header\nkind semigroupoid # trailing\nelements e; plus e e; comp e e e\n").unwrap();
        assert_eq!(doc.table.defined_count(), 1);
        assert!(doc.into_structure().is_ok());
    }

    #[test]
    fn invalid_structure_parses_then_fails_validation() {
        let doc = parse_structure("kind semigroupoid\nelements e\nplus e e\n").unwrap();
        let report = doc.into_structure().unwrap_err();
        assert_eq!(report.axioms().iter().map(|a| a.id()).collect::<Vec<_>>(), ["lr1"]);
    }

    #[test]
    fn morphism_files() {
        let s = fixtures::semilattice();
        let text = serialize_morphism("a.sgpd", "b.sgpd", s.table(), s.table(), &[1, 1]);
        assert_eq!(text, "source a.sgpd\ntarget b.sgpd\nmap e f\nmap f f\n");
        let m = parse_morphism(&text).unwrap();
        assert_eq!(m.resolve(s.table(), s.table()).unwrap(), [1, 1]);
        let short = parse_morphism("source a; target b; map e e").unwrap();
        assert_eq!(short.resolve(s.table(), s.table()).unwrap_err().message, "no map line for `f`");
        assert_eq!(parse_morphism("source a\nmap e e\n").unwrap_err().message, "missing `target` line");
    }
}

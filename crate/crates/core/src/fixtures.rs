//! Small named structures used throughout the tests and by the CLI.
//!
//! Each constructor panics if its table fails the axioms.

use alloc::vec;
use alloc::vec::Vec;

use crate::restriction::LeftRestrictionSemigroupoid;
use crate::table::PartialTable;

fn build(labels: &[&str], comp: &[(&str, &str, &str)], plus: &[(&str, &str)]) -> LeftRestrictionSemigroupoid {
    let table = PartialTable::from_triples(labels, comp).expect("fixture table");
    let mut p = vec![usize::MAX; labels.len()];
    for &(s, sp) in plus {
        p[table.index_of(s).expect("fixture label")] = table.index_of(sp).expect("fixture label");
    }
    LeftRestrictionSemigroupoid::from_parts(table, p).expect("fixture satisfies the axioms")
}

/// `{e}` with `ee = e` and `e^+ = e`.
pub fn singleton() -> LeftRestrictionSemigroupoid {
    build(&["e"], &[("e", "e", "e")], &[("e", "e")])
}

const SEMILATTICE_2: [(&str, &str, &str); 4] = [
    ("e", "e", "e"),
    ("f", "f", "f"),
    ("e", "f", "e"),
    ("f", "e", "e"),
];

/// Two-element semilattice `e < f` with `s^+ = s`.
pub fn semilattice() -> LeftRestrictionSemigroupoid {
    build(&["e", "f"], &SEMILATTICE_2, &[("e", "e"), ("f", "f")])
}

/// The same semilattice with `e^+ = f^+ = f`.
pub fn semilattice_top() -> LeftRestrictionSemigroupoid {
    build(&["e", "f"], &SEMILATTICE_2, &[("e", "f"), ("f", "f")])
}

const SEMILATTICE_ZERO: [(&str, &str, &str); 9] = [
    ("e", "e", "e"),
    ("f", "f", "f"),
    ("0", "0", "0"),
    ("e", "f", "0"),
    ("f", "e", "0"),
    ("0", "e", "0"),
    ("e", "0", "0"),
    ("f", "0", "0"),
    ("0", "f", "0"),
];

/// `{e, f, 0}`: a semilattice with zero, everything composable, `x^+ = x`.
pub fn semilattice_zero() -> LeftRestrictionSemigroupoid {
    build(&["e", "f", "0"], &SEMILATTICE_ZERO, &[("e", "e"), ("f", "f"), ("0", "0")])
}

/// [`semilattice_zero`] extended by `s` with `es = fs = 0s = s` and `s^+ = 0`.
pub fn semilattice_zero_tail() -> LeftRestrictionSemigroupoid {
    let mut comp: Vec<(&str, &str, &str)> = SEMILATTICE_ZERO.to_vec();
    comp.extend([("e", "s", "s"), ("f", "s", "s"), ("0", "s", "s")]);
    build(
        &["e", "f", "0", "s"],
        &comp,
        &[("e", "e"), ("f", "f"), ("0", "0"), ("s", "0")],
    )
}

/// `{x+, x}` with only `x+ x+ = x+` and `x+ x = x`.
pub fn single_arrow() -> LeftRestrictionSemigroupoid {
    build(
        &["x+", "x"],
        &[("x+", "x+", "x+"), ("x+", "x", "x")],
        &[("x+", "x+"), ("x", "x+")],
    )
}

const LEFT_UNITAL: [(&str, &str, &str); 11] = [
    ("e", "e", "e"),
    ("x", "e", "y"),
    ("y", "e", "y"),
    ("x+", "x", "x"),
    ("x+", "y", "y"),
    ("x+", "x+", "x+"),
    ("x+", "y+", "y+"),
    ("y+", "x", "y"),
    ("y+", "y", "y"),
    ("y+", "x+", "y+"),
    ("y+", "y+", "y+"),
];

const LEFT_UNITAL_PLUS: [(&str, &str); 5] = [
    ("e", "e"),
    ("x", "x+"),
    ("y", "y+"),
    ("x+", "x+"),
    ("y+", "y+"),
];

/// Five elements `e, x, y, x+, y+`; `x+` and `e` are left identities but `e`
/// has no identity on its left.
pub fn left_unital() -> LeftRestrictionSemigroupoid {
    build(&["e", "x", "y", "x+", "y+"], &LEFT_UNITAL, &LEFT_UNITAL_PLUS)
}

/// [`left_unital`] extended by `s` with `es = s`, `s^+ = e`.
///
/// Associativity forces `xs` and `ys` to exist as soon as `es` does (`xe` and
/// `es` are composable, and `xe = y`), so the extension also carries
/// `xs = ys = x+xs = y+xs`, a new element labelled `xs` with `xs^+ = y+` and
/// nothing composable on its right.
pub fn left_unital_tail() -> LeftRestrictionSemigroupoid {
    let mut comp: Vec<(&str, &str, &str)> = LEFT_UNITAL.to_vec();
    comp.extend([
        ("e", "s", "s"),
        ("x", "s", "xs"),
        ("y", "s", "xs"),
        ("x+", "xs", "xs"),
        ("y+", "xs", "xs"),
    ]);
    let mut plus = LEFT_UNITAL_PLUS.to_vec();
    plus.extend([("s", "e"), ("xs", "y+")]);
    build(&["e", "x", "y", "x+", "y+", "s", "xs"], &comp, &plus)
}

/// The cyclic group of order two as a one-object groupoid, `s^+ = 1`.
pub fn z2() -> LeftRestrictionSemigroupoid {
    build(
        &["1", "g"],
        &[("1", "1", "1"), ("1", "g", "g"), ("g", "1", "g"), ("g", "g", "1")],
        &[("1", "1"), ("g", "1")],
    )
}

/// Two objects and only their identity arrows.
pub fn discrete_category() -> LeftRestrictionSemigroupoid {
    build(
        &["1a", "1b"],
        &[("1a", "1a", "1a"), ("1b", "1b", "1b")],
        &[("1a", "1a"), ("1b", "1b")],
    )
}

/// The seven standard worked examples.
pub fn all() -> Vec<(&'static str, LeftRestrictionSemigroupoid)> {
    vec![
        ("semilattice", semilattice()),
        ("semilattice_top", semilattice_top()),
        ("semilattice_zero", semilattice_zero()),
        ("semilattice_zero_tail", semilattice_zero_tail()),
        ("single_arrow", single_arrow()),
        ("left_unital", left_unital()),
        ("left_unital_tail", left_unital_tail()),
    ]
}

/// [`all`] plus the singleton, `Z_2` and the two-object discrete category.
pub fn extended() -> Vec<(&'static str, LeftRestrictionSemigroupoid)> {
    let mut v = all();
    v.extend([
        ("singleton", singleton()),
        ("z2", z2()),
        ("discrete_category", discrete_category()),
    ]);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::restriction::check_semigroupoid;

    #[test]
    fn literal_left_unital_tail_is_not_associative() {
        // Only adding es = s leaves (x, e, s) triggering s1 without xs defined.
        let mut comp: Vec<(&str, &str, &str)> = LEFT_UNITAL.to_vec();
        comp.push(("e", "s", "s"));
        let t = PartialTable::from_triples(&["e", "x", "y", "x+", "y+", "s"], &comp).unwrap();
        let r = check_semigroupoid(&t);
        assert!(r.violations().iter().any(|v| v.witness == [1, 0, 5]));
    }

    #[test]
    fn all_fixtures_build() {
        assert_eq!(extended().len(), 10);
    }
}

//! The constructions `C` (semigroupoid to constellation) and `G`
//! (constellation to semigroupoid).
//!
//! Both keep the carrier and its labels, so `G(C(S)) == S` and
//! `C(G(T)) == T` are literal equalities.

use crate::constellation::{CorestrictionTable, OrderedConstellation};
use crate::error::Error;
use crate::restriction::LeftRestrictionSemigroupoid;
use crate::table::PartialTable;

/// `C(S)`: `s • t` is defined when `s t^+` is defined and equals `s`, and then
/// `s • t = st`. The plus map is unchanged and the order is the natural one.
pub fn build_c(s: &LeftRestrictionSemigroupoid) -> OrderedConstellation {
    let src = s.table();
    let mut table = src.clone();
    for a in src.elements() {
        for b in src.elements() {
            let keep = src.get(a, s.plus(b)) == Some(a);
            table.set(a, b, if keep { src.get(a, b) } else { None });
        }
    }
    OrderedConstellation::new(table, s.restriction().clone(), s.order().clone())
        .expect("same carrier")
}

/// The composition table of `G(T)`, without validating anything.
pub fn pseudo_product_table(t: &OrderedConstellation) -> PartialTable {
    let cores = CorestrictionTable::new(t);
    let mut table = t.table().clone();
    for x in t.table().elements() {
        for y in t.table().elements() {
            table.set(x, y, cores.pseudo_product(t, x, y));
        }
    }
    table
}

/// `G(T)`: the same carrier and plus map, with `x ⊗ y = (x|y^+) y` defined
/// whenever `x|y^+` exists.
///
/// Fails with [`Error::Invalid`] when the result is not a left restriction
/// semigroupoid, which cannot happen for a valid li-constellation.
pub fn build_g(t: &OrderedConstellation) -> Result<LeftRestrictionSemigroupoid, Error> {
    LeftRestrictionSemigroupoid::new(pseudo_product_table(t), t.restriction().clone())
}

/// Does `G(C(S))` equal `S`?
pub fn roundtrip_semigroupoid(s: &LeftRestrictionSemigroupoid) -> Result<bool, Error> {
    Ok(build_g(&build_c(s))? == *s)
}

/// Does `C(G(T))` equal `T`?
pub fn roundtrip_constellation(t: &OrderedConstellation) -> Result<bool, Error> {
    Ok(build_c(&build_g(t)?) == *t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constellation::check_li_constellation;
    use crate::fixtures;
    use alloc::vec::Vec;

    fn defined_labels(t: &PartialTable) -> Vec<(&str, &str)> {
        t.defined_triples().map(|(a, b, _)| (t.label(a), t.label(b))).collect()
    }

    #[test]
    fn c_of_single_arrow_keeps_everything() {
        let s = fixtures::single_arrow();
        let c = build_c(&s);
        assert_eq!(c.table(), s.table());
        assert_eq!(defined_labels(c.table()), [("x+", "x+"), ("x+", "x")]);
    }

    #[test]
    fn c_of_semilattice_zero() {
        let c = build_c(&fixtures::semilattice_zero());
        let mut got = defined_labels(c.table());
        got.sort();
        assert_eq!(got, [("0", "0"), ("0", "e"), ("0", "f"), ("e", "e"), ("f", "f")]);
    }

    #[test]
    fn singleton_is_fixed() {
        let s = fixtures::singleton();
        let c = build_c(&s);
        assert_eq!(c.table(), s.table());
        assert_eq!(build_g(&c).unwrap(), s);
    }

    #[test]
    fn g_recovers_fixtures() {
        for (name, s) in fixtures::extended() {
            let c = build_c(&s);
            assert!(check_li_constellation(&c).is_valid(), "{name}");
            assert_eq!(build_g(&c).unwrap(), s, "{name}");
            assert!(roundtrip_semigroupoid(&s).unwrap());
            assert!(roundtrip_constellation(&c).unwrap());
        }
    }

    #[test]
    fn g_of_semilattice_zero_is_total() {
        let g = build_g(&build_c(&fixtures::semilattice_zero())).unwrap();
        assert_eq!(g.table().defined_count(), 9);
    }
}

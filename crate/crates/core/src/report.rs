//! Axiom identifiers and violation reports.

use alloc::vec::Vec;
use core::fmt;

use crate::table::Elem;

/// Every axiom a checker can report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// Semigroupoid associativity, triggered by `(s,t)` and `(t,r)` composable.
    S1,
    /// Triggered by `(s,t)` and `(st,r)` composable.
    S2,
    /// Triggered by `(t,r)` and `(s,tr)` composable.
    S3,
    Lr1,
    Lr2,
    Lr3,
    Lr4,
    C1,
    C2,
    C3,
    C4,
    /// The order relation is not reflexive, antisymmetric and transitive.
    PartialOrder,
    Wo1,
    Wo2,
    Wo3,
    Wo4,
    Wo5,
    Wo6,
    Wo7,
    Wo8,
    Wo9,
    /// A map is not total or leaves the target carrier.
    MapShape,
    Rm1,
    Rm2,
    Pm1,
    Pm2,
    Ir1,
    Ir2,
    Ir3,
    Ir4,
    Ip1,
    Ip2,
    Ip3,
    Ip4,
    Ip5,
    /// A preradiant sends a projection outside the target's projections.
    IpPlusImage,
}

impl Axiom {
    pub const fn id(self) -> &'static str {
        use Axiom::*;
        match self {
            S1 => "s1",
            S2 => "s2",
            S3 => "s3",
            Lr1 => "lr1",
            Lr2 => "lr2",
            Lr3 => "lr3",
            Lr4 => "lr4",
            C1 => "c1",
            C2 => "c2",
            C3 => "c3",
            C4 => "c4",
            PartialOrder => "order",
            Wo1 => "wo1",
            Wo2 => "wo2",
            Wo3 => "wo3",
            Wo4 => "wo4",
            Wo5 => "wo5",
            Wo6 => "wo6",
            Wo7 => "wo7",
            Wo8 => "wo8",
            Wo9 => "wo9",
            MapShape => "map",
            Rm1 => "rm1",
            Rm2 => "rm2",
            Pm1 => "pm1",
            Pm2 => "pm2",
            Ir1 => "ir1",
            Ir2 => "ir2",
            Ir3 => "ir3",
            Ir4 => "ir4",
            Ip1 => "ip1",
            Ip2 => "ip2",
            Ip3 => "ip3",
            Ip4 => "ip4",
            Ip5 => "ip5",
            IpPlusImage => "ip-plus",
        }
    }

    /// The axiom family, e.g. `"rm"` for both `rm1` and `rm2`.
    pub fn family(self) -> &'static str {
        let id = self.id();
        let end = id
            .find(|c: char| c.is_ascii_digit() || c == '-')
            .unwrap_or(id.len());
        &id[..end]
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One failed instance of an axiom, with the tuple that witnesses it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<Elem>,
}

/// The outcome of an axiom checker: every violation found, in discovery order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn push(&mut self, axiom: Axiom, witness: impl Into<Vec<Elem>>) {
        self.violations.push(Violation {
            axiom,
            witness: witness.into(),
        });
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    /// Does any violation name `axiom`?
    pub fn mentions(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    /// Does any violation belong to the family `family` (e.g. `"wo"`)?
    pub fn mentions_family(&self, family: &str) -> bool {
        self.violations.iter().any(|v| v.axiom.family() == family)
    }

    /// Distinct axioms named by the report, in `Axiom` order.
    pub fn axioms(&self) -> Vec<Axiom> {
        let mut a: Vec<Axiom> = self.violations.iter().map(|v| v.axiom).collect();
        a.sort_unstable();
        a.dedup();
        a
    }

    pub fn into_result(self) -> Result<(), ValidationReport> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(self)
        }
    }
}

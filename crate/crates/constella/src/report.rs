//! JSON reports. Keys appear in declaration order, so output is byte stable.

use std::collections::BTreeMap;

use serde::Serialize;

use constella_core::classify::{ClassificationReport, Predicate};
use constella_core::{PartialTable, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolationOut {
    pub axiom: String,
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationOut {
    pub nd: bool,
    pub lc: bool,
    pub unitary: bool,
    pub is_category: bool,
    pub is_semigroup: bool,
    pub is_inverse_semigroupoid: bool,
    pub has_right_inverses: bool,
    pub witnesses: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub valid: bool,
    pub violations: Vec<ViolationOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationOut>,
    pub counts: BTreeMap<String, u64>,
}

fn labels(t: &PartialTable, elems: &[usize]) -> Vec<String> {
    elems.iter().map(|&e| t.label(e).to_string()).collect()
}

/// Violation list with witnesses written as labels of `witness_table`.
pub fn violations(report: &ValidationReport, witness_table: &PartialTable) -> Vec<ViolationOut> {
    report
        .violations()
        .iter()
        .map(|v| ViolationOut {
            axiom: v.axiom.id().to_string(),
            witness: labels(witness_table, &v.witness),
        })
        .collect()
}

pub fn classification(c: &ClassificationReport, t: &PartialTable) -> ClassificationOut {
    let mut witnesses = BTreeMap::new();
    for p in [
        Predicate::Nd,
        Predicate::Lc,
        Predicate::Unitary,
        Predicate::Category,
        Predicate::Semigroup,
        Predicate::InverseSemigroupoid,
        Predicate::RightInverses,
    ] {
        if let Some(w) = c.witness(p) {
            witnesses.insert(p.id().to_string(), labels(t, w));
        }
    }
    ClassificationOut {
        nd: c.nd,
        lc: c.lc,
        unitary: c.unitary,
        is_category: c.is_category,
        is_semigroup: c.is_semigroup,
        is_inverse_semigroupoid: c.is_inverse_semigroupoid,
        has_right_inverses: c.has_right_inverses,
        witnesses,
    }
}

impl Report {
    pub fn new(report: &ValidationReport, t: &PartialTable) -> Self {
        Report {
            valid: report.is_valid(),
            violations: violations(report, t),
            classification: None,
            counts: BTreeMap::new(),
        }
    }

    pub fn count(mut self, key: &str, value: u64) -> Self {
        self.counts.insert(key.to_string(), value);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data") + "\n"
    }
}

use alloc::string::String;
use alloc::vec::Vec;

use crate::report::ValidationReport;
use crate::table::Elem;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("carrier must contain at least one element")]
    EmptyCarrier,
    #[error("invalid element id {0:?}: ids must match [A-Za-z0-9_+']+")]
    InvalidLabel(String),
    #[error("duplicate element id {0:?}")]
    DuplicateLabel(String),
    #[error("element index {elem} out of range for carrier of size {len}")]
    OutOfRange { elem: Elem, len: usize },
    #[error("expected {expected} entries, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("relation is not a partial order")]
    InvalidOrder,
    #[error("element {0} is not in the image of +")]
    NotProjection(Elem),
    #[error("restriction of {x} to {e} is not applicable: {e} is not below {x}^+")]
    RestrictionNotApplicable { e: Elem, x: Elem },
    #[error("restriction is not unique: candidates {candidates:?}")]
    NonUnique { candidates: Vec<Elem> },
    #[error("set {candidates:?} has no maximum")]
    NoMaximum { candidates: Vec<Elem> },
    #[error("product {0} * {1} is undefined")]
    UndefinedProduct(Elem, Elem),
    #[error("meet of {0} and {1} is undefined")]
    MeetUndefined(Elem, Elem),
    #[error("structure fails its axioms ({} violations)", .0.violations().len())]
    Invalid(ValidationReport),
    #[error("morphism endpoints do not match: {0}")]
    Mismatch(String),
    #[error("search space of {requested} exceeds the cap {cap}")]
    CapExceeded { requested: u128, cap: u128 },
    #[error("independent characterisations disagree: {0}")]
    Disagreement(&'static str),
}

//! Finite left restriction semigroupoids and locally inductive constellations.
//!
//! Structures are small partial algebras given by explicit composition tables.
//! Elements are indices into a labelled carrier; every composable pair is stored
//! explicitly, so an undefined product is `None` rather than a sentinel element.
//!
//! The crate is `no_std` and only needs `alloc`. Text formats, reports and the
//! command-line front-end live in the `constella` crate.
//!
//! Module map:
//!
//! * [`table`], [`restriction`]: composition tables, semigroupoid and left
//!   restriction axioms, the natural partial order, identities.
//! * [`constellation`]: left constellations with an order, restriction and
//!   corestriction, the locally inductive axioms.
//! * [`functor`]: the constructions `C` and `G` between the two worlds.
//! * [`morphism`]: restriction morphisms, premorphisms, inductive radiants and
//!   preradiants, plus brute-force enumeration of maps.
//! * [`szendrei`]: Szendrei expansions, the embedding `iota` and the universal
//!   extension of a preradiant.
//! * [`classify`]: non-degenerate / locally complete / unitary constellations,
//!   categories, semigroups and inverse semigroupoids.
//! * [`enumerate`]: exhaustive censuses of small structures and isomorphism
//!   testing.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod classify;
pub mod constellation;
pub mod enumerate;
mod error;
pub mod fixtures;
pub mod functor;
pub mod morphism;
pub mod order;
pub mod report;
pub mod restriction;
pub mod szendrei;
pub mod table;

pub use constellation::{Corestriction, OrderedConstellation};
pub use error::Error;
pub use order::OrderRelation;
pub use report::{Axiom, ValidationReport, Violation};
pub use restriction::{IdentityKind, LeftRestrictionSemigroupoid, RestrictionStructure};
pub use table::{Elem, PartialTable};

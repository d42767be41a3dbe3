//! File formats, JSON reports, the theorem suite and the command line for
//! left restriction semigroupoids and li-constellations.

pub mod cli;
pub mod io;
pub mod report;
pub mod theorems;

pub use io::{parse_morphism, parse_structure, serialize, serialize_structure, Document, Kind, ParseError, Structure};

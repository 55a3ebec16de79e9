//! Exhaustive, isomorphism-free enumeration of 3-polytopal graphs of radius
//! one, with degree-sequence analysis on top.

pub mod canon;
pub mod catalog;
pub mod chord;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod outerplanar;
pub mod sequences;
pub mod shard;
pub mod structure;
pub mod tables;

pub use canon::{canonical_code, canonical_form, CanonicalCode};
pub use catalog::{Catalog, Coverage, PolytopeRecord};
pub use chord::ChordDiagram;
pub use error::{Error, Result};
pub use graph::{DegreeSequence, Graph};

//! Polyhedral graphs containing a vertex of every degree `3..=n`.
//!
//! Everything here works on [`EmbeddedGraph`], a simple graph carried
//! together with a rotation system. Constructions never renumber existing
//! vertices, so an earlier graph in a chain is always a prefix of a later one.

#![no_std]

extern crate alloc;

pub mod bounds;
pub mod builders;
pub mod canon;
pub mod connectivity;
pub mod enumerator;
mod error;
pub mod gadgets;
pub mod graph;
pub mod planarity;
pub mod spectra;
pub mod transform;

mod data;

pub use error::Error;
pub use graph::{DegreeSequence, EmbeddedGraph, Face};
pub use transform::ConstructionTrace;

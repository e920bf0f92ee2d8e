//! Berge-F containment, Berge saturation checking, and the saturated
//! hypergraph constructions for Berge cliques and related pattern graphs.

pub mod berge;
pub mod cli;
pub mod combin;
pub mod constructions;
pub mod error;
pub mod hypergraph;
pub mod invariants;
pub mod matching;
pub mod oracle;
pub mod saturation;
pub mod witness;

pub use berge::{contains_berge, creates_new_berge, find_berge_witness, BergeIndex};
pub use error::{Error, Result};
pub use hypergraph::{Graph, Hypergraph};
pub use witness::{BergeWitness, SearchConstraints};

//! Multigraph toolkit for the Γ₃ Hamilton-connectedness search: line graphs
//! and their preimages, a multiplicity-aware pattern matcher, the extension
//! search that generates the family of exceptional preimages, and
//! verifiable hamiltonian-path certificates.

pub mod closure;
pub mod conditions;
pub mod error;
pub mod format;
pub mod hamilton;
pub mod linegraph;
pub mod multigraph;
pub mod patterns;
pub mod search;
pub mod wagner;

pub use error::{GraphError, Result};
pub use multigraph::{pair, CanonicalForm, EdgeClasses, Multigraph, Pair};

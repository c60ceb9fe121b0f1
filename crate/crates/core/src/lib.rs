//! Signless-Laplacian spectral radius (the Q-index) of graphs that avoid a
//! complete bipartite subgraph K_{t,s+1}.
//!
//! - [`graph`]: bitset graphs on at most 62 vertices, graph6 and edge-list codecs
//! - [`spectral`]: q(G) and λ(G) by power iteration, with a Jacobi oracle
//! - [`forbidden`]: K_{t,s+1} detection by codegree counting
//! - [`bounds`]: closed-form extremal bounds and the proof-step ledger
//! - [`constructions`]: the joins K_{t−1} ∨ H with H s-regular
//! - [`search`]: exhaustive and annealing searches for Q-index maximizers
//! - [`report`]: the command surface behind the `qx` binary

pub mod bounds;
pub mod constructions;
mod error;
pub mod forbidden;
pub mod graph;
pub mod report;
pub mod search;
pub mod spectral;

pub use error::{Error, Result};
pub use forbidden::ForbiddenPattern;
pub use graph::{Graph, VertexSet};

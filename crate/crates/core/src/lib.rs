//! k-core peeling with stashes.
//!
//! Peeling repeatedly removes vertices of degree below `k` from a
//! `d`-uniform hypergraph; a *stash* is a set of vertices or edges removed up
//! front so that peeling empties the graph. This crate provides the peeling
//! engine, exact and greedy minimum-stash solvers, the cyclomatic-number
//! algorithm for 2-edge-stashes on standard graphs, and executable gadget
//! constructions for the reductions VERTEX-COVER → k-VERTEX-STASH and
//! k-VERTEX-STASH → k-EDGE-STASH, each with a property checker.

pub mod error;
pub mod gadgets;
pub mod hypergraph;
pub mod peeling;
pub mod random;
pub mod reductions;
pub mod solvers;
pub mod text;

pub use error::{Error, Result};
pub use hypergraph::{EdgeId, Hypergraph, VertexId};
pub use peeling::{is_k_peelable, k_core, k_core_after, k_core_with_order, PeelOrder, PeelTrace};
pub use solvers::{Stash, StashKind, StashResult};

//! Minimum and heuristic stash solvers.

mod cover;
mod cyclomatic;
mod exact;
mod greedy;

use std::collections::BTreeSet;
use std::fmt;

pub use cover::{is_vertex_cover, min_vertex_cover_exact};
pub use cyclomatic::{two_edge_stash_standard, two_edge_stash_with_order, CyclomaticCertificate, UnionFind};
pub use exact::{min_edge_stash_exact, min_vertex_stash_exact, DEFAULT_SIZE_CAP};
pub use greedy::{greedy_stash, TieBreak};

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::peeling::PeelState;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StashKind {
    Vertex,
    Edge,
}

impl fmt::Display for StashKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StashKind::Vertex => "vertex",
            StashKind::Edge => "edge",
        })
    }
}

/// A set of stashed vertices or stashed edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stash {
    Vertices(BTreeSet<VertexId>),
    Edges(BTreeSet<EdgeId>),
}

impl Stash {
    pub fn kind(&self) -> StashKind {
        match self {
            Stash::Vertices(_) => StashKind::Vertex,
            Stash::Edges(_) => StashKind::Edge,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Stash::Vertices(s) => s.len(),
            Stash::Edges(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// True if removing the stash from `h` leaves an empty k-core.
    pub fn is_valid_for(&self, h: &Hypergraph, k: usize) -> Result<bool> {
        let mut state = PeelState::new(h, k);
        match self {
            Stash::Vertices(vs) => {
                for &v in vs {
                    if !h.contains_vertex(v) {
                        return Err(Error::UnknownVertex(v));
                    }
                    state.stash_vertex(v);
                }
            }
            Stash::Edges(es) => {
                for &e in es {
                    if !h.contains_edge(e) {
                        return Err(Error::UnknownEdge(e));
                    }
                    state.stash_edge(e);
                }
            }
        }
        state.peel();
        Ok(state.core_is_empty())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StashResult {
    pub stash: Stash,
    pub optimal: bool,
    pub residual_core_empty: bool,
}

impl StashResult {
    pub fn kind(&self) -> StashKind {
        self.stash.kind()
    }

    pub fn size(&self) -> usize {
        self.stash.len()
    }
}

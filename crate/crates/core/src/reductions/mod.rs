//! Whole-instance reductions with certificate lifting.
//!
//! * VERTEX-COVER → k-VERTEX-STASH: every edge `(u, v)` becomes a `C_k(u, v)`.
//! * k-VERTEX-STASH → k-EDGE-STASH: every vertex `v` becomes a vertex gadget
//!   `P_k(v)`; every original edge becomes one neighboring edge joining the
//!   gadgets of its endpoints.
//!
//! Reductions are deterministic: the same input always yields the same
//! instance and the same ids.

mod audit;
mod mapfile;
mod vc;
mod vstash;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use audit::{audit_gadgets, audit_p1, extract_vertex_gadget, size_ratio, REDUCTION_SIZE_CONSTANT};
pub use mapfile::{parse_map, write_map};
pub use vc::{normalize_stash, reduce_vc_to_vertex_stash};
pub use vstash::{lift_edge_stash, push_vertex_stash, reduce_vertex_to_edge_stash};

use crate::hypergraph::{EdgeId, Hypergraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    VcToVs,
    VsToEs,
}

impl Direction {
    pub fn label(self) -> &'static str {
        match self {
            Direction::VcToVs => "vc",
            Direction::VsToEs => "vstash",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The source element a vertex or edge of the reduced instance belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Owner {
    Vertex(VertexId),
    Edge(EdgeId),
}

/// Where one original vertex lives in the reduced instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Site {
    /// The original vertex itself (`vc`) or the primary node of `P_k(v)`.
    pub primary: VertexId,
    /// Every reduced vertex owned by this original vertex, ascending.
    pub vertices: Vec<VertexId>,
    /// Internal edges of the gadget (empty for `vc`).
    pub internal_edges: Vec<EdgeId>,
    /// Attach vertex of each port, in incidence order of the original vertex.
    pub ports: Vec<VertexId>,
    /// The gadget's E* in reduced ids (empty for `vc`).
    pub estar: BTreeSet<EdgeId>,
}

#[derive(Clone, Debug)]
pub struct ReductionMap {
    pub direction: Direction,
    pub k: usize,
    pub d: usize,
    /// The instance that was reduced.
    pub source: Hypergraph,
    pub vertex_map: BTreeMap<VertexId, Site>,
    /// Reduced edges standing for each original edge: the edges of its
    /// `C_k` (`vc`) or its single neighboring edge (`vstash`).
    pub edge_map: BTreeMap<EdgeId, Vec<EdgeId>>,
    /// Lowest-id E* edge of each vertex gadget (`vstash` only).
    pub estar_pick: BTreeMap<VertexId, EdgeId>,
    /// Owner of every reduced vertex, indexed by vertex id.
    pub vertex_owner: Vec<Owner>,
    /// Owner of every reduced edge, indexed by edge id. Neighboring edges
    /// belong to their lowest-id endpoint.
    pub edge_owner: Vec<Owner>,
    pub parallel_edges: bool,
}

impl ReductionMap {
    fn new(direction: Direction, k: usize, d: usize, source: &Hypergraph) -> Self {
        ReductionMap {
            direction,
            k,
            d,
            source: source.clone(),
            vertex_map: BTreeMap::new(),
            edge_map: BTreeMap::new(),
            estar_pick: BTreeMap::new(),
            vertex_owner: Vec::new(),
            edge_owner: Vec::new(),
            parallel_edges: false,
        }
    }
}

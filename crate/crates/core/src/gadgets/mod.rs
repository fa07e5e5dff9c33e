//! Gadget constructions and their exhaustive property checkers.
//!
//! A [`Gadget`] is a hypergraph fragment plus the places where the host
//! graph attaches to it:
//!
//! * [`Port::Edge`] is a neighboring edge: it contains the listed internal
//!   vertices and is completed by `d - attach.len()` vertices outside the
//!   gadget. Neighboring edges are not part of `graph`.
//! * [`Port::Terminal`] is a vertex shared with the host (the `u` and `v`
//!   of a `C_k(u, v)`); the gadget edges incident to it are listed.
//!
//! Constructions for `k >= 3` are drafted on pairs and lifted to arity `d`
//! by appending the same `d - 2` dummy vertices to every internal edge.

mod blocks;
mod check;
mod ck;
mod tree;
mod vertex;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use blocks::{build_b_block, build_simple_stable_block, build_stable_block, STABLE_SIZE_CONSTANT};
pub use check::{
    check_b_block, check_ck_properties, check_gadget, check_stable_block, check_vertex_gadget, embed,
    negative_control, CheckResult, Embedding, GadgetReport, Witness, EXHAUSTIVE_PORT_LIMIT,
};
pub use ck::build_ck_gadget;
pub use tree::build_tree_stable_block;
pub use vertex::build_vertex_gadget;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::text::{join, serialize_annotated};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetKind {
    /// `C_k(u, v)`, the edge replacement of the vertex-cover reduction.
    Ck,
    TwoBlock,
    ThreeBlock,
    SimpleStable,
    Stable,
    /// Hyper-tree stable block for `k = 2`, `d >= 3`.
    TreeStable,
    /// `P_k(v)` / `P_2(v)`, the vertex replacement of the edge-stash reduction.
    Vertex,
}

impl GadgetKind {
    pub fn label(self) -> &'static str {
        match self {
            GadgetKind::Ck => "ck",
            GadgetKind::TwoBlock => "b2",
            GadgetKind::ThreeBlock => "b3",
            GadgetKind::SimpleStable => "simple-stable",
            GadgetKind::Stable => "stable",
            GadgetKind::TreeStable => "tree-stable",
            GadgetKind::Vertex => "vertex",
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Build parameters. `degree` is the gadget's number of neighboring edges:
/// `b` for b-blocks, `m` for stable blocks, `p` for tree blocks, `δ` for
/// vertex gadgets and 2 (the terminals) for `C_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GadgetParams {
    pub k: usize,
    pub d: usize,
    pub degree: usize,
}

impl fmt::Display for GadgetParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={},d={},deg={}", self.k, self.d, self.degree)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Port {
    Edge { attach: Vec<VertexId> },
    Terminal { vertex: VertexId, edges: Vec<EdgeId> },
}

impl Port {
    /// Number of outside vertices that complete a neighboring edge.
    pub fn external_slots(&self, d: usize) -> usize {
        match self {
            Port::Edge { attach } => d - attach.len(),
            Port::Terminal { .. } => 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Gadget {
    pub kind: GadgetKind,
    pub params: GadgetParams,
    pub graph: Hypergraph,
    pub ports: Vec<Port>,
    /// Designated internal edges whose stashing peels the whole gadget.
    pub estar: BTreeSet<EdgeId>,
    /// Named vertex groups (`primary`, `central`, `root`, `dummy`, ...).
    pub roles: BTreeMap<String, Vec<VertexId>>,
}

impl Gadget {
    pub fn terminals(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.ports.iter().filter_map(|p| match p {
            Port::Terminal { vertex, .. } => Some(*vertex),
            Port::Edge { .. } => None,
        })
    }

    /// Gadget vertices other than terminals.
    pub fn members(&self) -> Vec<VertexId> {
        let terminals: BTreeSet<VertexId> = self.terminals().collect();
        self.graph.vertices().filter(|v| !terminals.contains(v)).collect()
    }

    pub fn role(&self, name: &str) -> &[VertexId] {
        self.roles.get(name).map_or(&[], Vec::as_slice)
    }

    /// Structural invariants: ports reference live vertices, neighboring
    /// edges fit the arity, and every E* edge is an internal edge.
    pub fn validate(&self) -> Result<()> {
        let d = self.params.d;
        if self.graph.arity() != d {
            return Err(Error::ContractViolation(format!(
                "gadget arity {} differs from d = {d}",
                self.graph.arity()
            )));
        }
        for (i, port) in self.ports.iter().enumerate() {
            let (vertices, edges): (Vec<VertexId>, &[EdgeId]) = match port {
                Port::Edge { attach } => (attach.clone(), &[]),
                Port::Terminal { vertex, edges } => (vec![*vertex], edges),
            };
            if vertices.is_empty() || vertices.len() > d {
                return Err(Error::ContractViolation(format!("port {i} has {} vertices", vertices.len())));
            }
            if let Some(v) = vertices.iter().find(|&&v| !self.graph.contains_vertex(v)) {
                return Err(Error::ContractViolation(format!("port {i} references missing vertex {v}")));
            }
            if let Some(e) = edges.iter().find(|&&e| !self.graph.contains_edge(e)) {
                return Err(Error::ContractViolation(format!("port {i} lists missing edge {e}")));
            }
        }
        if let Some(e) = self.estar.iter().find(|&&e| !self.graph.contains_edge(e)) {
            return Err(Error::ContractViolation(format!("E* edge {e} is not internal")));
        }
        Ok(())
    }

    /// Standard text format with `# port` and `# estar` annotations.
    pub fn to_text(&self) -> String {
        let mut notes = vec![format!("gadget {} {}", self.kind, self.params)];
        for (i, port) in self.ports.iter().enumerate() {
            notes.push(match port {
                Port::Edge { attach } => format!(
                    "port {i} edge attach {} slots {}",
                    join(attach.iter()),
                    port.external_slots(self.params.d)
                ),
                Port::Terminal { vertex, edges } => {
                    format!("port {i} terminal {vertex} edges {}", join(edges.iter()))
                }
            });
        }
        notes.push(format!("estar {}", join(self.estar.iter())));
        for (name, vs) in &self.roles {
            notes.push(format!("role {name} {}", join(vs.iter())));
        }
        for note in &mut notes {
            note.truncate(note.trim_end().len());
        }
        serialize_annotated(&self.graph, &notes)
    }

    /// Drops an internal edge, keeping ports and E* consistent.
    pub(crate) fn without_edge(&self, e: EdgeId) -> Result<Gadget> {
        let mut g = self.clone();
        g.graph.remove_edge(e)?;
        g.estar.remove(&e);
        for port in &mut g.ports {
            if let Port::Terminal { edges, .. } = port {
                edges.retain(|&x| x != e);
            }
        }
        Ok(g)
    }
}

/// Scratch space for assembling a gadget before lifting to arity `d`.
#[derive(Default)]
pub(crate) struct Draft {
    vertices: usize,
    edges: Vec<Vec<VertexId>>,
    estar: Vec<usize>,
    ports: Vec<DraftPort>,
    roles: BTreeMap<String, Vec<VertexId>>,
}

pub(crate) enum DraftPort {
    Edge(Vec<VertexId>),
    Terminal(VertexId),
}

impl Draft {
    pub(crate) fn vertex(&mut self) -> VertexId {
        self.vertices += 1;
        VertexId::from(self.vertices - 1)
    }

    pub(crate) fn vertices(&mut self, n: usize) -> Vec<VertexId> {
        (0..n).map(|_| self.vertex()).collect()
    }

    /// Adds an internal edge and returns its index, which becomes its `EdgeId`.
    pub(crate) fn edge(&mut self, vs: &[VertexId]) -> usize {
        self.edges.push(vs.to_vec());
        self.edges.len() - 1
    }

    pub(crate) fn mark_estar(&mut self, edge: usize) {
        self.estar.push(edge);
    }

    pub(crate) fn port(&mut self, port: DraftPort) {
        self.ports.push(port);
    }

    pub(crate) fn role(&mut self, name: &str, vs: impl IntoIterator<Item = VertexId>) {
        self.roles.entry(name.to_string()).or_default().extend(vs);
    }

    /// Appends `d - 2` shared dummies to every pair edge when `d > 2`, then
    /// freezes the draft into a [`Gadget`].
    pub(crate) fn finish(mut self, kind: GadgetKind, params: GadgetParams) -> Gadget {
        let d = params.d;
        let needs_lift = d > 2 && self.edges.iter().any(|e| e.len() < d);
        if needs_lift {
            let dummies = self.vertices(d - 2);
            for e in &mut self.edges {
                if e.len() == 2 {
                    e.extend(&dummies);
                }
            }
            self.role("dummy", dummies);
        }
        let mut graph = Hypergraph::with_vertices(d, self.vertices).expect("d >= 2 checked by builders");
        for e in &self.edges {
            graph.add_edge(e).expect("draft edges are well formed");
        }
        let ports = self
            .ports
            .into_iter()
            .map(|p| match p {
                DraftPort::Edge(attach) => Port::Edge { attach },
                DraftPort::Terminal(vertex) => Port::Terminal {
                    vertex,
                    edges: graph.incident_edges(vertex).expect("live").to_vec(),
                },
            })
            .collect();
        for vs in self.roles.values_mut() {
            vs.sort_unstable();
            vs.dedup();
        }
        let gadget = Gadget {
            kind,
            params,
            graph,
            ports,
            estar: self.estar.into_iter().map(EdgeId::from).collect(),
            roles: self.roles,
        };
        debug_assert!(gadget.validate().is_ok(), "{:?}", gadget.validate());
        gadget
    }
}

pub(crate) fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Parameter(msg()))
    }
}

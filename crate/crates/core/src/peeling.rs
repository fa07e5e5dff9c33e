//! k-core peeling.
//!
//! Vertices of degree below `k` are removed together with their edges until
//! none remain. The surviving subgraph is the k-core, the unique maximal
//! subgraph of minimum degree at least `k`, whatever order vertices are peeled in.

use std::collections::{BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};

/// Worklist discipline for the peel.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PeelOrder {
    /// FIFO worklist seeded with under-degree vertices in ascending id order.
    #[default]
    Ascending,
    /// Pick the next vertex uniformly at random from the worklist.
    Seeded(u64),
}

/// Log of one peel.
///
/// Elements removed by a stash (see [`k_core_after`]) appear in neither the
/// peeled nor the core sets; everything else in the input is in exactly one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelTrace {
    pub k: usize,
    /// Vertices in removal order.
    pub peeled_vertices: Vec<VertexId>,
    pub peeled_edges: BTreeSet<EdgeId>,
    pub core_vertices: BTreeSet<VertexId>,
    pub core_edges: BTreeSet<EdgeId>,
}

impl PeelTrace {
    pub fn core_is_empty(&self) -> bool {
        self.core_vertices.is_empty()
    }

    /// Replays the trace against `h` with the given stash removed, checking
    /// that each peeled vertex had degree below `k` when it was removed, that
    /// the core has minimum degree `k`, and that peeled and core sets
    /// partition what is left of `h`.
    pub fn audit(
        &self,
        h: &Hypergraph,
        stash_vertices: &BTreeSet<VertexId>,
        stash_edges: &BTreeSet<EdgeId>,
    ) -> std::result::Result<(), String> {
        let mut g = h.clone();
        for &e in stash_edges {
            g.remove_edge(e).map_err(|e| e.to_string())?;
        }
        for &v in stash_vertices {
            g.remove_vertex(v).map_err(|e| e.to_string())?;
        }
        let start_vertices: BTreeSet<VertexId> = g.vertices().collect();
        let start_edges: BTreeSet<EdgeId> = g.edge_ids().collect();

        let mut removed_edges = BTreeSet::new();
        for &v in &self.peeled_vertices {
            let deg = g.degree(v).map_err(|_| format!("vertex {v} peeled twice or missing"))?;
            if deg >= self.k {
                return Err(format!("vertex {v} peeled with degree {deg} >= {}", self.k));
            }
            removed_edges.extend(g.remove_vertex(v).map_err(|e| e.to_string())?);
        }
        if removed_edges != self.peeled_edges {
            return Err("peeled edge set does not match replay".into());
        }
        let left_v: BTreeSet<VertexId> = g.vertices().collect();
        let left_e: BTreeSet<EdgeId> = g.edge_ids().collect();
        if left_v != self.core_vertices || left_e != self.core_edges {
            return Err("core does not match replay".into());
        }
        for &v in &left_v {
            let deg = g.degree(v).expect("live vertex");
            if deg < self.k {
                return Err(format!("core vertex {v} has degree {deg} < {}", self.k));
            }
        }
        let peeled: BTreeSet<VertexId> = self.peeled_vertices.iter().copied().collect();
        if peeled.len() + left_v.len() != start_vertices.len()
            || removed_edges.len() + left_e.len() != start_edges.len()
        {
            return Err("peeled and core sets do not partition the input".into());
        }
        Ok(())
    }
}

pub fn k_core(h: &Hypergraph, k: usize) -> PeelTrace {
    k_core_with_order(h, k, PeelOrder::Ascending)
}

pub fn k_core_with_order(h: &Hypergraph, k: usize, order: PeelOrder) -> PeelTrace {
    let mut state = PeelState::new(h, k);
    let mut log = PeelLog::default();
    state.peel_logged(order, &mut log);
    state.trace(log)
}

pub fn is_k_peelable(h: &Hypergraph, k: usize) -> bool {
    let mut state = PeelState::new(h, k);
    state.peel();
    state.core_is_empty()
}

/// The k-core of `h` after removing the stashed vertices and edges. `h` is untouched.
pub fn k_core_after(
    h: &Hypergraph,
    k: usize,
    stash_vertices: &BTreeSet<VertexId>,
    stash_edges: &BTreeSet<EdgeId>,
) -> Result<PeelTrace> {
    if let Some(&v) = stash_vertices.iter().find(|&&v| !h.contains_vertex(v)) {
        return Err(Error::UnknownVertex(v));
    }
    if let Some(&e) = stash_edges.iter().find(|&&e| !h.contains_edge(e)) {
        return Err(Error::UnknownEdge(e));
    }
    let mut state = PeelState::new(h, k);
    for &e in stash_edges {
        state.stash_edge(e);
    }
    for &v in stash_vertices {
        state.stash_vertex(v);
    }
    let mut log = PeelLog::default();
    state.peel_logged(PeelOrder::Ascending, &mut log);
    Ok(state.trace(log))
}

#[derive(Default)]
struct PeelLog {
    vertices: Vec<VertexId>,
    edges: BTreeSet<EdgeId>,
}

/// Mutable peel engine over a borrowed hypergraph.
///
/// Degrees are maintained incrementally; any vertex whose degree drops
/// below `k` is queued exactly once. Cloning a settled state and stashing
/// more elements re-peels only what the new removals affect.
#[derive(Clone, Debug)]
pub(crate) struct PeelState<'a> {
    graph: &'a Hypergraph,
    k: usize,
    vertex_alive: Vec<bool>,
    edge_alive: Vec<bool>,
    degree: Vec<u32>,
    pending: VecDeque<VertexId>,
    alive_vertices: usize,
    alive_edges: usize,
}

impl<'a> PeelState<'a> {
    pub(crate) fn new(graph: &'a Hypergraph, k: usize) -> Self {
        let mut vertex_alive = vec![false; graph.vertex_bound()];
        let mut degree = vec![0u32; graph.vertex_bound()];
        let mut pending = VecDeque::new();
        for v in graph.vertices() {
            vertex_alive[v.index()] = true;
            let deg = graph.degree(v).expect("live vertex");
            degree[v.index()] = deg as u32;
            if deg < k {
                pending.push_back(v);
            }
        }
        let mut edge_alive = vec![false; graph.edge_bound()];
        for e in graph.edge_ids() {
            edge_alive[e.index()] = true;
        }
        PeelState {
            graph,
            k,
            vertex_alive,
            edge_alive,
            degree,
            pending,
            alive_vertices: graph.vertex_count(),
            alive_edges: graph.edge_count(),
        }
    }

    pub(crate) fn core_is_empty(&self) -> bool {
        self.alive_vertices == 0
    }

    pub(crate) fn vertex_alive(&self, v: VertexId) -> bool {
        self.vertex_alive.get(v.index()).copied().unwrap_or(false)
    }

    pub(crate) fn edge_alive(&self, e: EdgeId) -> bool {
        self.edge_alive.get(e.index()).copied().unwrap_or(false)
    }

    pub(crate) fn degree(&self, v: VertexId) -> usize {
        self.degree[v.index()] as usize
    }

    pub(crate) fn alive_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertex_alive
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| VertexId::from(i))
    }

    pub(crate) fn alive_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edge_alive
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| EdgeId::from(i))
    }

    fn kill_edge(&mut self, e: EdgeId) {
        debug_assert!(self.edge_alive[e.index()]);
        self.edge_alive[e.index()] = false;
        self.alive_edges -= 1;
        for &w in self.graph.edge(e).expect("live edge") {
            if self.vertex_alive[w.index()] {
                let d = &mut self.degree[w.index()];
                *d -= 1;
                if *d as usize + 1 == self.k {
                    self.pending.push_back(w);
                }
            }
        }
    }

    /// Removes `v` and its live edges without logging them as peeled.
    pub(crate) fn stash_vertex(&mut self, v: VertexId) {
        if !self.vertex_alive(v) {
            return;
        }
        self.vertex_alive[v.index()] = false;
        self.alive_vertices -= 1;
        for &e in self.graph.incident_edges(v).expect("live vertex") {
            if self.edge_alive[e.index()] {
                self.kill_edge(e);
            }
        }
    }

    pub(crate) fn stash_edge(&mut self, e: EdgeId) {
        if self.edge_alive(e) {
            self.kill_edge(e);
        }
    }

    pub(crate) fn peel(&mut self) {
        while let Some(v) = self.pending.pop_front() {
            self.peel_vertex(v, None);
        }
    }

    fn peel_logged(&mut self, order: PeelOrder, log: &mut PeelLog) {
        match order {
            PeelOrder::Ascending => {
                while let Some(v) = self.pending.pop_front() {
                    self.peel_vertex(v, Some(log));
                }
            }
            PeelOrder::Seeded(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut work: Vec<VertexId> = self.pending.drain(..).collect();
                while !work.is_empty() {
                    let v = work.swap_remove(rng.gen_range(0..work.len()));
                    self.peel_vertex(v, Some(log));
                    work.extend(self.pending.drain(..));
                }
            }
        }
    }

    fn peel_vertex(&mut self, v: VertexId, mut log: Option<&mut PeelLog>) {
        if !self.vertex_alive[v.index()] || self.degree[v.index()] as usize >= self.k {
            return;
        }
        self.vertex_alive[v.index()] = false;
        self.alive_vertices -= 1;
        if let Some(log) = log.as_deref_mut() {
            log.vertices.push(v);
        }
        for &e in self.graph.incident_edges(v).expect("live vertex") {
            if self.edge_alive[e.index()] {
                self.kill_edge(e);
                if let Some(log) = log.as_deref_mut() {
                    log.edges.insert(e);
                }
            }
        }
    }

    fn trace(&self, log: PeelLog) -> PeelTrace {
        PeelTrace {
            k: self.k,
            peeled_vertices: log.vertices,
            peeled_edges: log.edges,
            core_vertices: self.alive_vertices().collect(),
            core_edges: self.alive_edges().collect(),
        }
    }
}

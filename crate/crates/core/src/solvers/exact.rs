//! Exact minimum stashes by cardinality-increasing search.
//!
//! Every element of a minimum stash lies in the k-core of the graph with the
//! other stash elements removed, so the search only branches on elements of
//! the current residual core, in increasing id order. Children reuse the
//! parent's settled peel state. The first stash found is the
//! lexicographically smallest minimum stash, independent of thread count.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::peeling::PeelState;
use crate::solvers::{Stash, StashKind, StashResult};

pub const DEFAULT_SIZE_CAP: usize = 6;

pub fn min_vertex_stash_exact(h: &Hypergraph, k: usize, size_cap: usize) -> Result<StashResult> {
    let ids = search(h, k, size_cap, StashKind::Vertex)?;
    Ok(StashResult {
        stash: Stash::Vertices(ids.into_iter().map(VertexId::from).collect()),
        optimal: true,
        residual_core_empty: true,
    })
}

pub fn min_edge_stash_exact(h: &Hypergraph, k: usize, size_cap: usize) -> Result<StashResult> {
    let ids = search(h, k, size_cap, StashKind::Edge)?;
    Ok(StashResult {
        stash: Stash::Edges(ids.into_iter().map(EdgeId::from).collect()),
        optimal: true,
        residual_core_empty: true,
    })
}

fn search(h: &Hypergraph, k: usize, cap: usize, kind: StashKind) -> Result<Vec<usize>> {
    let mut root = PeelState::new(h, k);
    root.peel();
    for target in 0..=cap {
        if let Some(found) = first_stash_of_size(&root, kind, target) {
            return Ok(found);
        }
    }
    Err(Error::CapExceeded { cap })
}

fn candidates(state: &PeelState<'_>, kind: StashKind, after: Option<usize>) -> Vec<usize> {
    let start = after.map_or(0, |a| a + 1);
    match kind {
        StashKind::Vertex => state.alive_vertices().map(VertexId::index).filter(|&i| i >= start).collect(),
        StashKind::Edge => state.alive_edges().map(EdgeId::index).filter(|&i| i >= start).collect(),
    }
}

fn first_stash_of_size(root: &PeelState<'_>, kind: StashKind, target: usize) -> Option<Vec<usize>> {
    if root.core_is_empty() {
        return Some(Vec::new());
    }
    if target == 0 {
        return None;
    }
    candidates(root, kind, None).into_par_iter().find_map_first(|c| {
        let mut state = root.clone();
        apply(&mut state, kind, c);
        let mut chosen = vec![c];
        dfs(&state, kind, target, &mut chosen).then_some(chosen)
    })
}

fn apply(state: &mut PeelState<'_>, kind: StashKind, id: usize) {
    match kind {
        StashKind::Vertex => state.stash_vertex(VertexId::from(id)),
        StashKind::Edge => state.stash_edge(EdgeId::from(id)),
    }
    state.peel();
}

fn dfs(state: &PeelState<'_>, kind: StashKind, target: usize, chosen: &mut Vec<usize>) -> bool {
    if state.core_is_empty() {
        return true;
    }
    if chosen.len() == target {
        return false;
    }
    for c in candidates(state, kind, chosen.last().copied()) {
        let mut next = state.clone();
        apply(&mut next, kind, c);
        chosen.push(c);
        if dfs(&next, kind, target, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::peeling::PeelState;
use crate::solvers::{Stash, StashKind, StashResult};

/// How [`greedy_stash`] picks the next element from the residual core.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    /// Largest core degree, lowest id on ties. For edges the score is the
    /// sum of the core degrees of the edge's vertices.
    #[default]
    MaxDegree,
    MinId,
    /// Uniform choice among core elements from a ChaCha8 stream.
    SeededRandom(u64),
}

/// Stashes one core element at a time until the k-core is empty.
pub fn greedy_stash(h: &Hypergraph, k: usize, kind: StashKind, tie_break: TieBreak) -> StashResult {
    let mut rng = match tie_break {
        TieBreak::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut state = PeelState::new(h, k);
    state.peel();
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    while !state.core_is_empty() {
        match kind {
            StashKind::Vertex => {
                let core: Vec<VertexId> = state.alive_vertices().collect();
                let pick = match (tie_break, rng.as_mut()) {
                    (TieBreak::SeededRandom(_), Some(rng)) => core[rng.gen_range(0..core.len())],
                    (TieBreak::MinId, _) => core[0],
                    _ => *core
                        .iter()
                        .max_by_key(|&&v| (state.degree(v), std::cmp::Reverse(v)))
                        .expect("non-empty core"),
                };
                vertices.insert(pick);
                state.stash_vertex(pick);
            }
            StashKind::Edge => {
                let core: Vec<EdgeId> = state.alive_edges().collect();
                let pick = match (tie_break, rng.as_mut()) {
                    (TieBreak::SeededRandom(_), Some(rng)) => core[rng.gen_range(0..core.len())],
                    (TieBreak::MinId, _) => core[0],
                    _ => {
                        let score = |e: EdgeId| -> usize {
                            h.edge(e).expect("live edge").iter().map(|&v| state.degree(v)).sum()
                        };
                        *core
                            .iter()
                            .max_by_key(|&&e| (score(e), std::cmp::Reverse(e)))
                            .expect("non-empty core")
                    }
                };
                edges.insert(pick);
                state.stash_edge(pick);
            }
        }
        state.peel();
    }
    let stash = match kind {
        StashKind::Vertex => Stash::Vertices(vertices),
        StashKind::Edge => Stash::Edges(edges),
    };
    StashResult {
        stash,
        optimal: false,
        residual_core_empty: true,
    }
}

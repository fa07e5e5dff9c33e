use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};

/// Smallest vertex cover of a standard graph, by bounded branching on the
/// first uncovered edge. Used as the reference oracle for reductions.
pub fn min_vertex_cover_exact(g: &Hypergraph, size_cap: usize) -> Result<BTreeSet<VertexId>> {
    if g.arity() != 2 {
        return Err(Error::InvalidArity {
            expected: 2,
            found: g.arity(),
        });
    }
    let edges: Vec<[VertexId; 2]> = g.edges().map(|(_, vs)| [vs[0], vs[1]]).collect();
    let mut chosen = vec![false; g.vertex_bound()];
    let mut picked = Vec::new();
    for budget in 0..=size_cap {
        if branch(&edges, 0, budget, &mut chosen, &mut picked) {
            return Ok(picked.into_iter().collect());
        }
    }
    Err(Error::CapExceeded { cap: size_cap })
}

fn branch(
    edges: &[[VertexId; 2]],
    from: usize,
    budget: usize,
    chosen: &mut [bool],
    picked: &mut Vec<VertexId>,
) -> bool {
    let Some(offset) = edges[from..]
        .iter()
        .position(|[a, b]| !chosen[a.index()] && !chosen[b.index()])
    else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    let at = from + offset;
    let [a, b] = edges[at];
    for v in [a.min(b), a.max(b)] {
        chosen[v.index()] = true;
        picked.push(v);
        if branch(edges, at + 1, budget - 1, chosen, picked) {
            return true;
        }
        picked.pop();
        chosen[v.index()] = false;
    }
    false
}

/// True if every live edge of `g` meets `cover`.
pub fn is_vertex_cover(g: &Hypergraph, cover: &BTreeSet<VertexId>) -> bool {
    g.edges().all(|(_, vs)| vs.iter().any(|v| cover.contains(v)))
}

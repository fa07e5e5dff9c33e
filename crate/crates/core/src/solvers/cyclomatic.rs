//! Minimum 2-edge-stash on standard graphs.
//!
//! A standard graph has an empty 2-core exactly when it is a forest, so the
//! minimum 2-edge-stash is a minimum feedback edge set, whose size is the
//! cyclomatic number `|E| - |V| + components`. Edges are inserted one at a
//! time into a union-find; any edge closing a cycle is set aside.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph};
use crate::solvers::{Stash, StashResult};

/// Disjoint sets with path compression and union by rank.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclomaticCertificate {
    /// Cyclomatic number.
    pub h: usize,
    pub components: usize,
    /// The cycle-closing edges set aside during insertion.
    pub removed_edges: BTreeSet<EdgeId>,
}

impl CyclomaticCertificate {
    pub fn into_stash_result(self) -> StashResult {
        StashResult {
            stash: Stash::Edges(self.removed_edges),
            optimal: true,
            residual_core_empty: true,
        }
    }
}

/// Inserts edges in ascending id order.
pub fn two_edge_stash_standard(g: &Hypergraph) -> Result<CyclomaticCertificate> {
    let order: Vec<EdgeId> = g.edge_ids().collect();
    two_edge_stash_with_order(g, &order)
}

/// Inserts edges in the given order, which must list every edge exactly once.
pub fn two_edge_stash_with_order(g: &Hypergraph, order: &[EdgeId]) -> Result<CyclomaticCertificate> {
    if g.arity() != 2 {
        return Err(Error::InvalidArity {
            expected: 2,
            found: g.arity(),
        });
    }
    if order.len() != g.edge_count() || order.iter().collect::<BTreeSet<_>>().len() != order.len() {
        return Err(Error::Parameter("insertion order must list every edge once".into()));
    }
    let mut sets = UnionFind::new(g.vertex_bound());
    let mut removed_edges = BTreeSet::new();
    let mut merges = 0;
    for &e in order {
        let vs = g.edge(e)?;
        if sets.union(vs[0].index(), vs[1].index()) {
            merges += 1;
        } else {
            removed_edges.insert(e);
        }
    }
    let components = g.vertex_count() - merges;
    let h = removed_edges.len();
    debug_assert_eq!(h + g.vertex_count(), g.edge_count() + components);
    Ok(CyclomaticCertificate {
        h,
        components,
        removed_edges,
    })
}

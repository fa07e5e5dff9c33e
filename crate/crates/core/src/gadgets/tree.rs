//! Stable block for `k = 2`, `d >= 3`.
//!
//! A `(d-1)`-ary hyper-tree where each node is joined to its `d - 1`
//! children by one edge. Each group of sibling leaves `v_1..v_{d-1}` gets
//! partners `w_1..w_{d-1}` and edges `(v_i, w_1, ..., w_{d-1})`. Every tree
//! vertex except the root has degree at least 2; the root has only the root
//! edge. Port `i` is the edge `(r, w_i, x_{i,1}, ..., x_{i,d-2})` with the
//! `x` vertices supplied from outside.

use crate::error::Result;
use crate::gadgets::{require, Draft, DraftPort, Gadget, GadgetKind, GadgetParams};
use crate::hypergraph::VertexId;

pub(crate) struct TreeParts {
    pub root: VertexId,
    /// Draft index of the root edge `e_r`.
    pub root_edge: usize,
    /// One `w` vertex per port, in port order.
    pub port_partners: Vec<VertexId>,
}

/// Builds the tree with at least `max(p, 1)` partner vertices; the first `p`
/// partners (creation order) receive ports, the rest keep only their
/// internal edges.
pub(crate) fn add_tree_stable(draft: &mut Draft, d: usize, p: usize) -> TreeParts {
    let fan = d - 1;
    let mut depth = 1;
    let mut leaves = fan;
    while leaves < p {
        leaves *= fan;
        depth += 1;
    }
    let root = draft.vertex();
    draft.role("root", [root]);
    let mut level = vec![root];
    let mut root_edge = None;
    for _ in 0..depth {
        let mut next = Vec::with_capacity(level.len() * fan);
        for &parent in &level {
            let children = draft.vertices(fan);
            let mut edge = vec![parent];
            edge.extend(&children);
            let e = draft.edge(&edge);
            root_edge.get_or_insert(e);
            next.extend(children);
        }
        level = next;
    }
    let mut partners = Vec::with_capacity(leaves);
    for group in level.chunks(fan) {
        let ws = draft.vertices(fan);
        for &leaf in group {
            let mut edge = vec![leaf];
            edge.extend(&ws);
            draft.edge(&edge);
        }
        partners.extend(ws);
    }
    draft.role("partner", partners.iter().copied());
    let root_edge = root_edge.expect("depth >= 1");
    partners.truncate(p);
    TreeParts {
        root,
        root_edge,
        port_partners: partners,
    }
}

pub fn build_tree_stable_block(p: usize, d: usize) -> Result<Gadget> {
    require(d >= 3, || {
        format!("the tree stable block needs d >= 3 (k = d = 2 is solved by the cyclomatic number), got d = {d}")
    })?;
    require(p >= 1, || "tree stable block needs p >= 1".to_string())?;
    let mut draft = Draft::default();
    let parts = add_tree_stable(&mut draft, d, p);
    draft.mark_estar(parts.root_edge);
    for &w in &parts.port_partners {
        draft.port(DraftPort::Edge(vec![parts.root, w]));
    }
    Ok(draft.finish(GadgetKind::TreeStable, GadgetParams { k: 2, d, degree: p }))
}

//! Vertex replacement gadgets for the edge-stash reduction.
//!
//! The gadget for a vertex of degree `δ` has one neighboring edge per
//! incident edge of the original vertex. Its primary node keeps a degree
//! equal to the number of surviving neighboring edges, so the gadget peels
//! exactly when fewer than `k` of them remain; stashing any E* edge peels
//! the stable block and with it the whole gadget.

use crate::error::{Error, Result};
use crate::gadgets::blocks::{add_simple_stable, add_stable, add_three_block};
use crate::gadgets::tree::add_tree_stable;
use crate::gadgets::{require, Draft, DraftPort, Gadget, GadgetKind, GadgetParams};

/// Dispatches on `(k, d)`: b-block construction for `k >= 3`, hyper-tree
/// construction for `k = 2`, `d >= 3`. `k = d = 2` is rejected.
pub fn build_vertex_gadget(delta: usize, k: usize, d: usize) -> Result<Gadget> {
    require(d >= 2, || format!("d must be at least 2, got {d}"))?;
    match k {
        0 | 1 => Err(Error::Parameter(format!("vertex gadgets need k >= 2, got {k}"))),
        2 if d == 2 => Err(Error::Unsupported {
            k,
            d,
            reason: "2-edge-stash on standard graphs is polynomial (cyclomatic number); no gadget exists".into(),
        }),
        2 => Ok(build_tree_vertex_gadget(delta, d)),
        _ => Ok(build_block_vertex_gadget(delta, k, d)),
    }
}

/// Primary node, one 3-block per incident edge and a stable block of degree
/// `δ`. Each 3-block's hubs take, in order, the edge to the primary node,
/// the edge to its stable-block port, and the neighboring edge.
fn build_block_vertex_gadget(delta: usize, k: usize, d: usize) -> Gadget {
    let mut draft = Draft::default();
    let primary = draft.vertex();
    draft.role("primary", [primary]);
    let stable = if delta == 0 {
        add_simple_stable(&mut draft, k, 0, false)
    } else {
        add_stable(&mut draft, k, delta, false)
    };
    for &e in &stable.estar {
        draft.mark_estar(e);
    }
    for &stable_port in &stable.ports {
        let [to_primary, to_stable, outward] = add_three_block(&mut draft, k);
        draft.edge(&[primary, to_primary]);
        draft.edge(&[to_stable, stable_port]);
        draft.role("connector", [outward]);
        draft.port(DraftPort::Edge(vec![outward]));
    }
    draft.finish(GadgetKind::Vertex, GadgetParams { k, d, degree: delta })
}

/// Primary vertex `v`, a tree stable block of degree `δ`, and per incident
/// edge `i` a vertex `t_i` with `d - 2` slot vertices `x_i`. Edges
/// `(v, t_i, x_i..)` and `(r, w_i, x_i..)` share the same `x_i`; the
/// neighboring edge of port `i` contains `t_i`.
fn build_tree_vertex_gadget(delta: usize, d: usize) -> Gadget {
    let mut draft = Draft::default();
    let primary = draft.vertex();
    draft.role("primary", [primary]);
    let tree = add_tree_stable(&mut draft, d, delta);
    draft.mark_estar(tree.root_edge);
    for &w in &tree.port_partners {
        let t = draft.vertex();
        let xs = draft.vertices(d - 2);
        let mut primary_edge = vec![primary, t];
        primary_edge.extend(&xs);
        draft.edge(&primary_edge);
        let mut tree_edge = vec![tree.root, w];
        tree_edge.extend(&xs);
        draft.edge(&tree_edge);
        draft.role("connector", [t]);
        draft.role("slot", xs);
        draft.port(DraftPort::Edge(vec![t]));
    }
    draft.finish(GadgetKind::Vertex, GadgetParams { k: 2, d, degree: delta })
}

//! b-blocks and stable blocks for `k >= 3`.
//!
//! A b-block is k-unpeelable with its `b` neighboring edges and peels
//! completely once any one of them is removed. A stable block of degree `m`
//! peels only when all `m` neighboring edges are gone, unless one of its E*
//! edges is stashed.

use crate::error::Result;
use crate::gadgets::{require, Draft, DraftPort, Gadget, GadgetKind, GadgetParams};
use crate::hypergraph::VertexId;

/// `|V(build_stable_block(m, k, d))| <= STABLE_SIZE_CONSTANT * m * k^2 + d`.
pub const STABLE_SIZE_CONSTANT: usize = 5;

/// Two hubs plus a `(k-1)`-clique; each hub is joined to the whole clique.
/// Returns the hubs; each expects one neighboring edge.
pub(crate) fn add_two_block(draft: &mut Draft, k: usize) -> [VertexId; 2] {
    let hubs = [draft.vertex(), draft.vertex()];
    let clique = draft.vertices(k - 1);
    for &h in &hubs {
        for &c in &clique {
            draft.edge(&[h, c]);
        }
    }
    add_clique(draft, &clique);
    draft.role("hub", hubs);
    hubs
}

/// Returns three hub slots, one per neighboring edge. For `k = 3` the block
/// is a single vertex and all three slots name it.
pub(crate) fn add_three_block(draft: &mut Draft, k: usize) -> [VertexId; 3] {
    match k {
        3 => {
            let x = draft.vertex();
            draft.role("hub", [x]);
            [x, x, x]
        }
        4 => add_three_block_k4(draft),
        _ => {
            // Layer 0: hubs, layer 1: k - 1 vertices, layer 2: (k-3)-clique.
            let hubs = [draft.vertex(), draft.vertex(), draft.vertex()];
            let layer1 = draft.vertices(k - 1);
            let layer2 = draft.vertices(k - 3);
            for &h in &hubs {
                for &a in &layer1 {
                    draft.edge(&[h, a]);
                }
            }
            for &a in &layer1 {
                for &b in &layer2 {
                    draft.edge(&[a, b]);
                }
            }
            add_clique(draft, &layer2);
            draft.role("hub", hubs);
            hubs
        }
    }
}

/// k = 4: three hubs, a middle layer `a, b, c` joined to every hub, and a
/// `K5` minus the edge `pq` below it with `a-p`, `b-q`, `c-r`.
///
/// With all neighboring edges present hubs and middle vertices have degree
/// exactly 4, `p`, `q`, `s`, `t` have 4 and `r` has 5. Losing a neighboring
/// edge peels its hub, then the middle layer (degree 3), then `p` and `q`
/// (degree 3), then the rest of the `K5`, then the other hubs.
fn add_three_block_k4(draft: &mut Draft) -> [VertexId; 3] {
    let hubs = [draft.vertex(), draft.vertex(), draft.vertex()];
    let middle = draft.vertices(3);
    let low = draft.vertices(5);
    for &h in &hubs {
        for &a in &middle {
            draft.edge(&[h, a]);
        }
    }
    for (i, &a) in middle.iter().enumerate() {
        draft.edge(&[a, low[i]]);
    }
    for (i, &x) in low.iter().enumerate() {
        for &y in &low[i + 1..] {
            if !(x == low[0] && y == low[1]) {
                draft.edge(&[x, y]);
            }
        }
    }
    draft.role("hub", hubs);
    hubs
}

fn add_clique(draft: &mut Draft, vs: &[VertexId]) {
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            draft.edge(&[a, b]);
        }
    }
}

pub fn build_b_block(b: usize, k: usize, d: usize) -> Result<Gadget> {
    require(k >= 3, || format!("b-blocks need k >= 3, got {k}"))?;
    require(d >= 2, || format!("d must be at least 2, got {d}"))?;
    let mut draft = Draft::default();
    let (kind, hubs) = match b {
        2 => (GadgetKind::TwoBlock, add_two_block(&mut draft, k).to_vec()),
        3 => (GadgetKind::ThreeBlock, add_three_block(&mut draft, k).to_vec()),
        _ => return Err(crate::Error::Parameter(format!("only 2- and 3-blocks are built, got b = {b}"))),
    };
    for h in hubs {
        draft.port(DraftPort::Edge(vec![h]));
    }
    Ok(draft.finish(kind, GadgetParams { k, d, degree: b }))
}

/// Handles returned while composing stable blocks.
pub(crate) struct StableParts {
    /// Attach vertex of each neighboring edge, in port order.
    pub ports: Vec<VertexId>,
    /// Draft edge indices of the root simple block's E*.
    pub estar: Vec<usize>,
    /// Hub reserved for an edge from a parent central vertex.
    pub uplink: Option<VertexId>,
}

/// Central vertex of degree `k - 1 + m` and a chain of `k - 1` b-blocks:
/// 2-blocks at both ends and 3-blocks between. Each block takes one edge
/// from the central vertex; consecutive blocks share a chain edge. With
/// `uplink`, the first block is a 3-block whose spare hub is returned.
pub(crate) fn add_simple_stable(draft: &mut Draft, k: usize, m: usize, uplink: bool) -> StableParts {
    let central = draft.vertex();
    draft.role("central", [central]);
    let n = k - 1;
    // Per block: (hub toward central, hub toward previous, hub toward next).
    let mut slots: Vec<(VertexId, Option<VertexId>, Option<VertexId>)> = Vec::with_capacity(n);
    let mut uplink_hub = None;
    for i in 0..n {
        let first = i == 0;
        let last = i == n - 1;
        if first && uplink {
            let [c, up, next] = add_three_block(draft, k);
            uplink_hub = Some(up);
            slots.push((c, None, Some(next)));
        } else if first {
            let [c, next] = add_two_block(draft, k);
            slots.push((c, None, Some(next)));
        } else if last {
            let [c, prev] = add_two_block(draft, k);
            slots.push((c, Some(prev), None));
        } else {
            let [c, prev, next] = add_three_block(draft, k);
            slots.push((c, Some(prev), Some(next)));
        }
    }
    let mut estar = Vec::new();
    for &(c, _, _) in &slots {
        estar.push(draft.edge(&[central, c]));
    }
    for pair in slots.windows(2) {
        let next = pair[0].2.expect("non-final block has a next hub");
        let prev = pair[1].1.expect("non-initial block has a previous hub");
        estar.push(draft.edge(&[next, prev]));
    }
    StableParts {
        ports: vec![central; m],
        estar,
        uplink: uplink_hub,
    }
}

/// Stable block of any degree: a simple block when `m <= k - 1`, otherwise a
/// `(k-1)`-ary tree of simple blocks of minimal depth. Children are filled
/// left to right to capacity; empty subtrees are not built. A parent's
/// central vertex is joined to each child's uplink hub.
pub(crate) fn add_stable(draft: &mut Draft, k: usize, m: usize, uplink: bool) -> StableParts {
    let arity = k - 1;
    if m <= arity {
        return add_simple_stable(draft, k, m, uplink);
    }
    let mut child_capacity = arity;
    while child_capacity * arity < m {
        child_capacity *= arity;
    }
    let children = m.div_ceil(child_capacity);
    let root = add_simple_stable(draft, k, children, uplink);
    let mut ports = Vec::with_capacity(m);
    let mut left = m;
    for &central in &root.ports {
        let share = left.min(child_capacity);
        left -= share;
        let child = add_stable(draft, k, share, true);
        draft.edge(&[central, child.uplink.expect("child built with uplink")]);
        ports.extend(child.ports);
    }
    debug_assert_eq!(left, 0);
    StableParts {
        ports,
        estar: root.estar,
        uplink: root.uplink,
    }
}

/// Simple stable block, `1 <= m <= k - 1`.
pub fn build_simple_stable_block(m: usize, k: usize, d: usize) -> Result<Gadget> {
    require(k >= 3, || format!("stable blocks need k >= 3, got {k}"))?;
    require(d >= 2, || format!("d must be at least 2, got {d}"))?;
    require((1..k).contains(&m), || format!("simple stable block needs 1 <= m <= k - 1, got m = {m}, k = {k}"))?;
    let mut draft = Draft::default();
    let parts = add_simple_stable(&mut draft, k, m, false);
    finish_stable(draft, parts, GadgetKind::SimpleStable, GadgetParams { k, d, degree: m })
}

pub fn build_stable_block(m: usize, k: usize, d: usize) -> Result<Gadget> {
    require(k >= 3, || format!("stable blocks need k >= 3, got {k}"))?;
    require(d >= 2, || format!("d must be at least 2, got {d}"))?;
    require(m >= 1, || "stable block needs m >= 1".to_string())?;
    let mut draft = Draft::default();
    let parts = add_stable(&mut draft, k, m, false);
    finish_stable(draft, parts, GadgetKind::Stable, GadgetParams { k, d, degree: m })
}

fn finish_stable(mut draft: Draft, parts: StableParts, kind: GadgetKind, params: GadgetParams) -> Result<Gadget> {
    for &e in &parts.estar {
        draft.mark_estar(e);
    }
    for v in parts.ports {
        draft.port(DraftPort::Edge(vec![v]));
    }
    Ok(draft.finish(kind, params))
}

/// Depth of the simple-block tree built for degree `m`.
#[cfg(test)]
fn stable_depth(m: usize, k: usize) -> usize {
    let arity = k - 1;
    let mut depth = 0;
    let mut capacity = arity;
    while capacity < m {
        capacity *= arity;
        depth += 1;
    }
    depth
}

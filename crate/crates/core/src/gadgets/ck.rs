use crate::error::Result;
use crate::gadgets::{require, Draft, DraftPort, Gadget, GadgetKind, GadgetParams};

/// `C_k(u, v)`: terminals `u`, `v` and internal vertices `1..=k`.
///
/// Every internal vertex is joined to both terminals. Vertices `1` and `k`
/// are joined to `2..k-1` (degree exactly `k`), the middle vertices to all
/// other internal vertices (degree `k + 1`). Removing either terminal drops
/// `1` and `k` to `k - 1`, after which the middle peels at `k - 2`.
/// For `d >= 3`, `d - 2` dummies join every edge.
///
/// Vertex ids: `u = 0`, `v = 1`, internal vertex `i` is `i + 1`.
pub fn build_ck_gadget(k: usize, d: usize) -> Result<Gadget> {
    require(k >= 2, || format!("C_k needs k >= 2, got {k}"))?;
    require(d >= 2, || format!("C_k needs d >= 2, got {d}"))?;
    let mut draft = Draft::default();
    let u = draft.vertex();
    let v = draft.vertex();
    let inner = draft.vertices(k);
    for &w in &inner {
        draft.edge(&[u, w]);
        draft.edge(&[v, w]);
    }
    let (first, last) = (inner[0], inner[k - 1]);
    let middle = &inner[1..k - 1];
    for &m in middle {
        draft.edge(&[first, m]);
        draft.edge(&[last, m]);
    }
    for (i, &a) in middle.iter().enumerate() {
        for &b in &middle[i + 1..] {
            draft.edge(&[a, b]);
        }
    }
    draft.port(DraftPort::Terminal(u));
    draft.port(DraftPort::Terminal(v));
    draft.role("terminal", [u, v]);
    draft.role("internal", inner);
    Ok(draft.finish(GadgetKind::Ck, GadgetParams { k, d, degree: 2 }))
}

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::gadgets::{check_vertex_gadget, Gadget, GadgetKind, GadgetParams, GadgetReport, Port};
use crate::hypergraph::{Hypergraph, VertexId};
use crate::reductions::{Direction, Owner, ReductionMap};

/// `|V(f(G))| <= REDUCTION_SIZE_CONSTANT * k * Σ_v max(deg(v), 1)` for
/// `k <= 6` and `d <= 4`.
///
/// A vertex of degree below `k` still gets a simple stable block of `k - 1`
/// b-blocks, so per-vertex size is `O(k * max(deg(v), k))` and the ratio
/// grows with `k` beyond this range.
pub const REDUCTION_SIZE_CONSTANT: usize = 12;

fn require_vstash(map: &ReductionMap) -> Result<()> {
    if map.direction == Direction::VsToEs {
        Ok(())
    } else {
        Err(Error::Parameter("gadget audits need a vstash reduction map".into()))
    }
}

/// Each gadget has exactly `deg_G(v)` neighboring edges, and the
/// neighboring edge of every original edge joins the gadgets of exactly its
/// endpoints through the expected attach vertices.
pub fn audit_p1(fg: &Hypergraph, map: &ReductionMap) -> Result<()> {
    require_vstash(map)?;
    let g = &map.source;
    let fail = |msg: String| Err(Error::ContractViolation(msg));
    let mut neighboring: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (e, vs) in fg.edges() {
        let owners: BTreeSet<Owner> = vs.iter().map(|v| map.vertex_owner[v.index()]).collect();
        if owners.len() > 1 {
            for owner in owners {
                if let Owner::Vertex(v) = owner {
                    *neighboring.entry(v).or_default() += 1;
                }
            }
        } else if map.edge_owner[e.index()] != *owners.first().expect("edges are nonempty") {
            return fail(format!("internal edge {e} is not owned by its gadget"));
        }
    }
    for v in g.vertices() {
        let site = &map.vertex_map[&v];
        let delta = g.degree(v)?;
        let found = neighboring.get(&v).copied().unwrap_or(0);
        if found != delta || site.ports.len() != delta {
            return fail(format!("gadget of {v} has {found} neighboring edges, degree is {delta}"));
        }
    }
    for (e, vs) in g.edges() {
        let [ne] = map.edge_map[&e][..] else {
            return fail(format!("original edge {e} maps to more than one edge"));
        };
        let expected: Vec<VertexId> = vs
            .iter()
            .map(|&v| {
                let pos = g.incident_edges(v)?.iter().position(|&x| x == e).expect("incident");
                Ok(map.vertex_map[&v].ports[pos])
            })
            .collect::<Result<_>>()?;
        if fg.edge(ne)? != expected.as_slice() {
            return fail(format!("neighboring edge {ne} does not join the ports of original edge {e}"));
        }
    }
    Ok(())
}

/// `P_k(v)` cut out of `f(G)` with its own dense ids, ports at the attach
/// vertices and E* carried over.
pub fn extract_vertex_gadget(fg: &Hypergraph, map: &ReductionMap, v: VertexId) -> Result<Gadget> {
    require_vstash(map)?;
    let site = map.vertex_map.get(&v).ok_or(Error::UnknownVertex(v))?;
    let local: BTreeMap<VertexId, VertexId> = site
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, VertexId::from(i)))
        .collect();
    let mut graph = Hypergraph::with_vertices(map.d, site.vertices.len())?;
    let mut estar = BTreeSet::new();
    for &e in &site.internal_edges {
        let vs: Vec<VertexId> = fg.edge(e)?.iter().map(|x| local[x]).collect();
        let new = graph.add_edge(&vs)?;
        if site.estar.contains(&e) {
            estar.insert(new);
        }
    }
    let ports = site
        .ports
        .iter()
        .map(|x| Port::Edge { attach: vec![local[x]] })
        .collect();
    let mut roles = BTreeMap::new();
    roles.insert("primary".to_string(), vec![local[&site.primary]]);
    Ok(Gadget {
        kind: GadgetKind::Vertex,
        params: GadgetParams {
            k: map.k,
            d: map.d,
            degree: site.ports.len(),
        },
        graph,
        ports,
        estar,
        roles,
    })
}

/// P2 and P3 for every vertex gadget of `f(G)`.
pub fn audit_gadgets(fg: &Hypergraph, map: &ReductionMap) -> Result<Vec<(VertexId, GadgetReport)>> {
    map.vertex_map
        .keys()
        .map(|&v| Ok((v, check_vertex_gadget(&extract_vertex_gadget(fg, map, v)?))))
        .collect()
}

/// `|V(f(G))| / (k * Σ_v max(deg(v), 1))`.
pub fn size_ratio(fg: &Hypergraph, map: &ReductionMap) -> Result<f64> {
    let g = &map.source;
    let mut weight = 0;
    for v in g.vertices() {
        weight += g.degree(v)?.max(1);
    }
    if weight == 0 {
        return Ok(0.0);
    }
    Ok(fg.vertex_count() as f64 / (map.k * weight) as f64)
}

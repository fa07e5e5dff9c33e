use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::gadgets::{build_vertex_gadget, Gadget, Port};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::reductions::{Direction, Owner, ReductionMap, Site};
use crate::solvers::Stash;

/// Builds `f(G)`: gadgets for the vertices in ascending order, gadget
/// internal edges first, then one neighboring edge per original edge.
///
/// The neighboring edge of `e` takes, from each endpoint `v`, the attach
/// vertex of the port at `e`'s position in `v`'s incidence list.
pub fn reduce_vertex_to_edge_stash(g: &Hypergraph, k: usize, d: usize) -> Result<(Hypergraph, ReductionMap)> {
    if g.arity() != d {
        return Err(Error::InvalidArity {
            expected: d,
            found: g.arity(),
        });
    }
    // Probe once so parameter errors surface even for graphs without vertices.
    build_vertex_gadget(0, k, d)?;
    let mut templates: BTreeMap<usize, Gadget> = BTreeMap::new();
    let mut map = ReductionMap::new(Direction::VsToEs, k, d, g);
    let mut out = Hypergraph::new(d)?;
    for v in g.vertices() {
        let delta = g.degree(v)?;
        if let Entry::Vacant(slot) = templates.entry(delta) {
            slot.insert(build_vertex_gadget(delta, k, d)?);
        }
        let gadget = &templates[&delta];
        let vertices = out.add_vertices(gadget.graph.vertex_count());
        map.vertex_owner.extend(vertices.iter().map(|_| Owner::Vertex(v)));
        let local = |x: VertexId| vertices[x.index()];
        let mut internal = Vec::with_capacity(gadget.graph.edge_count());
        let mut edge_image = BTreeMap::new();
        for (e, vs) in gadget.graph.edges() {
            let mapped: Vec<VertexId> = vs.iter().map(|&x| local(x)).collect();
            let new = out.add_edge(&mapped)?;
            map.edge_owner.push(Owner::Vertex(v));
            edge_image.insert(e, new);
            internal.push(new);
        }
        let ports = gadget
            .ports
            .iter()
            .map(|p| match p {
                Port::Edge { attach } if attach.len() == 1 => local(attach[0]),
                _ => unreachable!("vertex gadget ports attach at one vertex"),
            })
            .collect();
        let estar: BTreeSet<EdgeId> = gadget.estar.iter().map(|e| edge_image[e]).collect();
        let pick = *estar.first().expect("vertex gadgets have a nonempty E*");
        map.estar_pick.insert(v, pick);
        map.vertex_map.insert(
            v,
            Site {
                primary: local(gadget.role("primary")[0]),
                vertices,
                internal_edges: internal,
                ports,
                estar,
            },
        );
    }
    for (e, vs) in g.edges() {
        let mut edge = Vec::with_capacity(d);
        for &v in vs {
            let position = g
                .incident_edges(v)?
                .iter()
                .position(|&x| x == e)
                .expect("incidence is the inverse of edges");
            edge.push(map.vertex_map[&v].ports[position]);
        }
        let new = out.add_edge(&edge)?;
        let owner = *vs.iter().min().expect("edges are nonempty");
        map.edge_owner.push(Owner::Vertex(owner));
        map.edge_map.insert(e, vec![new]);
    }
    map.parallel_edges = out.has_parallel_edges();
    Ok((out, map))
}

fn require_vstash(map: &ReductionMap) -> Result<()> {
    if map.direction == Direction::VsToEs {
        Ok(())
    } else {
        Err(Error::Parameter("expected a vstash reduction map".into()))
    }
}

/// `S' = {e*_v : v ∈ S}`; both `S` and `S'` are validated.
pub fn push_vertex_stash(
    g: &Hypergraph,
    fg: &Hypergraph,
    map: &ReductionMap,
    s: &BTreeSet<VertexId>,
) -> Result<BTreeSet<EdgeId>> {
    require_vstash(map)?;
    if !Stash::Vertices(s.clone()).is_valid_for(g, map.k)? {
        return Err(Error::ContractViolation("input is not a k-vertex-stash of G".into()));
    }
    let pushed: BTreeSet<EdgeId> = s
        .iter()
        .map(|v| map.estar_pick.get(v).copied().ok_or(Error::UnknownVertex(*v)))
        .collect::<Result<_>>()?;
    if !Stash::Edges(pushed.clone()).is_valid_for(fg, map.k)? {
        return Err(Error::ContractViolation("pushed edge stash does not peel f(G)".into()));
    }
    Ok(pushed)
}

/// `P' = {owner(e) : e ∈ S'}` where neighboring edges belong to their
/// lowest-id endpoint. Both `S'` and `P'` are validated.
pub fn lift_edge_stash(fg: &Hypergraph, map: &ReductionMap, s: &BTreeSet<EdgeId>) -> Result<BTreeSet<VertexId>> {
    require_vstash(map)?;
    if !Stash::Edges(s.clone()).is_valid_for(fg, map.k)? {
        return Err(Error::ContractViolation("input is not a k-edge-stash of f(G)".into()));
    }
    let lifted: BTreeSet<VertexId> = s
        .iter()
        .map(|e| match map.edge_owner.get(e.index()) {
            Some(Owner::Vertex(v)) => Ok(*v),
            _ => Err(Error::UnknownEdge(*e)),
        })
        .collect::<Result<_>>()?;
    if !Stash::Vertices(lifted.clone()).is_valid_for(&map.source, map.k)? {
        return Err(Error::ContractViolation("lifted vertex stash does not peel G".into()));
    }
    Ok(lifted)
}

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::gadgets::build_ck_gadget;
use crate::hypergraph::{Hypergraph, VertexId};
use crate::reductions::{Direction, Owner, ReductionMap, Site};
use crate::solvers::Stash;

/// Replaces every edge `(u, v)` of the standard graph `g` by a fresh
/// `C_k(u, v)` lifted to arity `d`. The original vertices come first, in
/// ascending order, and keep no other edges.
pub fn reduce_vc_to_vertex_stash(g: &Hypergraph, k: usize, d: usize) -> Result<(Hypergraph, ReductionMap)> {
    if g.arity() != 2 {
        return Err(Error::InvalidArity {
            expected: 2,
            found: g.arity(),
        });
    }
    let template = build_ck_gadget(k, d)?;
    let mut map = ReductionMap::new(Direction::VcToVs, k, d, g);
    let mut out = Hypergraph::new(d)?;
    let mut image = vec![VertexId(u32::MAX); g.vertex_bound()];
    for v in g.vertices() {
        let new = out.add_vertex();
        image[v.index()] = new;
        map.vertex_owner.push(Owner::Vertex(v));
        map.vertex_map.insert(
            v,
            Site {
                primary: new,
                vertices: vec![new],
                internal_edges: Vec::new(),
                ports: Vec::new(),
                estar: BTreeSet::new(),
            },
        );
    }
    let inner_count = template.graph.vertex_count() - 2;
    for (e, vs) in g.edges() {
        let fresh = out.add_vertices(inner_count);
        map.vertex_owner.extend(fresh.iter().map(|_| Owner::Edge(e)));
        let local = |x: VertexId| match x.index() {
            0 => image[vs[0].index()],
            1 => image[vs[1].index()],
            i => fresh[i - 2],
        };
        let mut edges = Vec::with_capacity(template.graph.edge_count());
        for (_, tvs) in template.graph.edges() {
            let mapped: Vec<VertexId> = tvs.iter().map(|&x| local(x)).collect();
            edges.push(out.add_edge(&mapped)?);
            map.edge_owner.push(Owner::Edge(e));
        }
        map.edge_map.insert(e, edges);
    }
    map.parallel_edges = out.has_parallel_edges();
    Ok((out, map))
}

/// Moves every gadget-internal vertex of a vertex stash onto the first
/// endpoint `u` of its `C_k(u, v)`. The result contains only original
/// vertices (in reduced ids), is no larger, and is still a stash.
pub fn normalize_stash(h: &Hypergraph, map: &ReductionMap, s: &BTreeSet<VertexId>) -> Result<BTreeSet<VertexId>> {
    if map.direction != Direction::VcToVs {
        return Err(Error::Parameter("normalize_stash needs a vc reduction map".into()));
    }
    if !Stash::Vertices(s.clone()).is_valid_for(h, map.k)? {
        return Err(Error::ContractViolation("input is not a k-vertex-stash of the reduced instance".into()));
    }
    let mut out = BTreeSet::new();
    for &w in s {
        let owner = map
            .vertex_owner
            .get(w.index())
            .ok_or(Error::UnknownVertex(w))?;
        let original = match *owner {
            Owner::Vertex(v) => v,
            Owner::Edge(e) => map.source.edge(e)?[0],
        };
        out.insert(map.vertex_map[&original].primary);
    }
    if !Stash::Vertices(out.clone()).is_valid_for(h, map.k)? {
        return Err(Error::ContractViolation("normalized stash is not valid".into()));
    }
    Ok(out)
}

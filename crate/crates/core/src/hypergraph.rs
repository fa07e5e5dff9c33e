//! Uniform hypergraphs with stable identifiers.
//!
//! Every edge holds exactly `d` distinct vertices. Vertex and edge ids are
//! dense indices handed out in creation order; removing an element leaves a
//! tombstone so ids are never reassigned. Parallel edges (two edges over the
//! same vertex set) are allowed and count separately toward degree.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for VertexId {
    fn from(i: usize) -> Self {
        VertexId(u32::try_from(i).expect("vertex id overflow"))
    }
}

impl From<usize> for EdgeId {
    fn from(i: usize) -> Self {
        EdgeId(u32::try_from(i).expect("edge id overflow"))
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A `d`-uniform hypergraph.
///
/// Edges keep the vertex order they were created with (used only for
/// serialization); degree and equality semantics are set based.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    arity: usize,
    /// `None` marks a removed edge.
    edges: Vec<Option<Vec<VertexId>>>,
    /// Incident edge ids per vertex, ascending. `None` marks a removed vertex.
    incidence: Vec<Option<Vec<EdgeId>>>,
    live_vertices: usize,
    live_edges: usize,
}

impl Hypergraph {
    pub fn new(arity: usize) -> Result<Self> {
        if arity < 2 {
            return Err(Error::Parameter(format!("arity must be at least 2, got {arity}")));
        }
        Ok(Hypergraph {
            arity,
            edges: Vec::new(),
            incidence: Vec::new(),
            live_vertices: 0,
            live_edges: 0,
        })
    }

    /// A hypergraph on vertices `0..n` with no edges.
    pub fn with_vertices(arity: usize, n: usize) -> Result<Self> {
        let mut h = Hypergraph::new(arity)?;
        h.incidence = vec![Some(Vec::new()); n];
        h.live_vertices = n;
        Ok(h)
    }

    /// Builds a hypergraph on `0..n` from edge lists.
    pub fn from_edges<I, E>(arity: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        let mut h = Hypergraph::with_vertices(arity, n)?;
        for e in edges {
            let vs: Vec<VertexId> = e.as_ref().iter().map(|&v| VertexId::from(v)).collect();
            h.add_edge(&vs)?;
        }
        Ok(h)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let id = VertexId::from(self.incidence.len());
        self.incidence.push(Some(Vec::new()));
        self.live_vertices += 1;
        id
    }

    pub fn add_vertices(&mut self, count: usize) -> Vec<VertexId> {
        (0..count).map(|_| self.add_vertex()).collect()
    }

    /// Adds an edge over exactly `d` distinct live vertices.
    pub fn add_edge(&mut self, vertices: &[VertexId]) -> Result<EdgeId> {
        if vertices.len() != self.arity {
            return Err(Error::InvalidEdge(format!(
                "edge has {} vertices, hypergraph arity is {}",
                vertices.len(),
                self.arity
            )));
        }
        for (i, &v) in vertices.iter().enumerate() {
            if !self.contains_vertex(v) {
                return Err(Error::UnknownVertex(v));
            }
            if vertices[..i].contains(&v) {
                return Err(Error::InvalidEdge(format!("vertex {v} repeated within an edge")));
            }
        }
        let id = EdgeId::from(self.edges.len());
        for &v in vertices {
            self.incidence[v.index()]
                .as_mut()
                .expect("checked live above")
                .push(id);
        }
        self.edges.push(Some(vertices.to_vec()));
        self.live_edges += 1;
        Ok(id)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        matches!(self.incidence.get(v.index()), Some(Some(_)))
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        matches!(self.edges.get(e.index()), Some(Some(_)))
    }

    pub fn vertex_count(&self) -> usize {
        self.live_vertices
    }

    pub fn edge_count(&self) -> usize {
        self.live_edges
    }

    /// One past the largest vertex id ever allocated.
    pub fn vertex_bound(&self) -> usize {
        self.incidence.len()
    }

    /// One past the largest edge id ever allocated.
    pub fn edge_bound(&self) -> usize {
        self.edges.len()
    }

    /// True when no element was ever removed, so ids are exactly `0..n` and `0..m`.
    pub fn is_canonical(&self) -> bool {
        self.live_vertices == self.incidence.len() && self.live_edges == self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.incidence
            .iter()
            .enumerate()
            .filter(|(_, inc)| inc.is_some())
            .map(|(i, _)| VertexId::from(i))
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, &[VertexId])> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.as_deref().map(|vs| (EdgeId::from(i), vs)))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges().map(|(e, _)| e)
    }

    pub fn edge(&self, e: EdgeId) -> Result<&[VertexId]> {
        self.edges
            .get(e.index())
            .and_then(|x| x.as_deref())
            .ok_or(Error::UnknownEdge(e))
    }

    pub fn incident_edges(&self, v: VertexId) -> Result<&[EdgeId]> {
        self.incidence
            .get(v.index())
            .and_then(|x| x.as_deref())
            .ok_or(Error::UnknownVertex(v))
    }

    /// Number of edges containing `v`, parallel edges counted with multiplicity.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.incident_edges(v).map(<[EdgeId]>::len)
    }

    /// Removes `v` and every edge incident to it. Returns the removed edges.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<Vec<EdgeId>> {
        let incident = self.incident_edges(v)?.to_vec();
        for &e in &incident {
            self.remove_edge(e)?;
        }
        self.incidence[v.index()] = None;
        self.live_vertices -= 1;
        Ok(incident)
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Result<()> {
        let vertices = self
            .edges
            .get_mut(e.index())
            .and_then(Option::take)
            .ok_or(Error::UnknownEdge(e))?;
        for v in vertices {
            if let Some(Some(inc)) = self.incidence.get_mut(v.index()) {
                inc.retain(|&x| x != e);
            }
        }
        self.live_edges -= 1;
        Ok(())
    }

    /// True if two live edges span the same vertex set.
    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges().any(|(_, vs)| {
            let mut key = vs.to_vec();
            key.sort_unstable();
            !seen.insert(key)
        })
    }

    /// Full-rescan audit of the incidence index against the edge table.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let mut rebuilt: Vec<Option<Vec<EdgeId>>> = self
            .incidence
            .iter()
            .map(|x| x.as_ref().map(|_| Vec::new()))
            .collect();
        for (e, vs) in self.edges() {
            if vs.len() != self.arity {
                return Err(format!("edge {e} has {} vertices", vs.len()));
            }
            for (i, v) in vs.iter().enumerate() {
                if vs[..i].contains(v) {
                    return Err(format!("edge {e} repeats vertex {v}"));
                }
                match rebuilt.get_mut(v.index()) {
                    Some(Some(list)) => list.push(e),
                    _ => return Err(format!("edge {e} references missing vertex {v}")),
                }
            }
        }
        if rebuilt != self.incidence {
            return Err("incidence index disagrees with edge table".into());
        }
        let live_v = self.incidence.iter().filter(|x| x.is_some()).count();
        let live_e = self.edges.iter().filter(|x| x.is_some()).count();
        if live_v != self.live_vertices || live_e != self.live_edges {
            return Err("live counters out of sync".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Hypergraph {
        Hypergraph::from_edges(2, 3, [[0, 1], [1, 2], [2, 0]]).unwrap()
    }

    #[test]
    fn triangle_degrees() {
        let h = triangle();
        for v in h.vertices() {
            assert_eq!(h.degree(v).unwrap(), 2);
        }
    }

    #[test]
    fn isolated_vertex_has_degree_zero() {
        let h = Hypergraph::with_vertices(2, 1).unwrap();
        assert_eq!(h.degree(VertexId(0)).unwrap(), 0);
    }

    #[test]
    fn parallel_edges_count_separately() {
        let h = Hypergraph::from_edges(2, 2, [[0, 1], [1, 0]]).unwrap();
        assert_eq!(h.degree(VertexId(0)).unwrap(), 2);
        assert!(h.has_parallel_edges());
    }

    #[test]
    fn unknown_vertex_degree() {
        let h = triangle();
        assert_eq!(h.degree(VertexId(7)), Err(Error::UnknownVertex(VertexId(7))));
    }

    #[test]
    fn remove_vertex_from_triangle_leaves_path() {
        let mut h = triangle();
        let removed = h.remove_vertex(VertexId(0)).unwrap();
        assert_eq!(removed, vec![EdgeId(0), EdgeId(2)]);
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 1);
        assert!(h.contains_edge(EdgeId(1)));
        h.check_invariants().unwrap();
    }

    #[test]
    fn remove_edge_from_triangle() {
        let mut h = triangle();
        h.remove_edge(EdgeId(1)).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.degree(VertexId(1)).unwrap(), 1);
        h.check_invariants().unwrap();
        assert_eq!(h.remove_edge(EdgeId(1)), Err(Error::UnknownEdge(EdgeId(1))));
    }

    #[test]
    fn remove_vertex_of_three_uniform_edge() {
        let mut h = Hypergraph::from_edges(3, 3, [[0, 1, 2]]).unwrap();
        h.remove_vertex(VertexId(0)).unwrap();
        assert_eq!(h.vertices().collect::<Vec<_>>(), vec![VertexId(1), VertexId(2)]);
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn ids_are_not_reused() {
        let mut h = triangle();
        h.remove_vertex(VertexId(2)).unwrap();
        assert_eq!(h.add_vertex(), VertexId(3));
        assert!(!h.is_canonical());
    }

    #[test]
    fn rejects_bad_edges() {
        let mut h = Hypergraph::with_vertices(2, 2).unwrap();
        assert!(matches!(h.add_edge(&[VertexId(0), VertexId(0)]), Err(Error::InvalidEdge(_))));
        assert!(matches!(h.add_edge(&[VertexId(0)]), Err(Error::InvalidEdge(_))));
        assert_eq!(
            h.add_edge(&[VertexId(0), VertexId(5)]),
            Err(Error::UnknownVertex(VertexId(5)))
        );
        assert!(Hypergraph::new(1).is_err());
    }
}

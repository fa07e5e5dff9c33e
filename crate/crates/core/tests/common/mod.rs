//! Independent oracles: brute-force enumeration, naive fixpoint peeling
//! and small-graph generators.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stashpeel::{EdgeId, Hypergraph, VertexId};

/// The k-core as the largest vertex subset whose induced sub-hypergraph
/// has minimum degree `k`, found by enumerating every subset.
pub fn brute_core(h: &Hypergraph, k: usize) -> (BTreeSet<VertexId>, BTreeSet<EdgeId>) {
    let vertices: Vec<VertexId> = h.vertices().collect();
    let n = vertices.len();
    assert!(n <= 16, "subset enumeration is exponential");
    let mut best: (usize, u32) = (0, 0);
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size <= best.0 && mask != 0 {
            continue;
        }
        let inside = |v: VertexId| {
            let i = vertices.iter().position(|&x| x == v).unwrap();
            mask >> i & 1 == 1
        };
        let mut degree = vec![0usize; n];
        for (_, vs) in h.edges() {
            if vs.iter().all(|&v| inside(v)) {
                for &v in vs {
                    degree[vertices.iter().position(|&x| x == v).unwrap()] += 1;
                }
            }
        }
        if (0..n).filter(|&i| mask >> i & 1 == 1).all(|i| degree[i] >= k) {
            best = (size, mask);
        }
    }
    let core: BTreeSet<VertexId> = (0..n).filter(|&i| best.1 >> i & 1 == 1).map(|i| vertices[i]).collect();
    let edges = h
        .edges()
        .filter(|(_, vs)| vs.iter().all(|v| core.contains(v)))
        .map(|(e, _)| e)
        .collect();
    (core, edges)
}

/// Surviving vertices of repeated whole-graph scans that drop every vertex
/// of degree below `k`, after removing the given vertices and edges.
pub fn naive_core(
    h: &Hypergraph,
    k: usize,
    removed_vertices: &BTreeSet<VertexId>,
    removed_edges: &BTreeSet<EdgeId>,
) -> BTreeSet<VertexId> {
    let mut alive: BTreeSet<VertexId> = h.vertices().filter(|v| !removed_vertices.contains(v)).collect();
    loop {
        let edges: Vec<&[VertexId]> = h
            .edges()
            .filter(|(e, vs)| !removed_edges.contains(e) && vs.iter().all(|v| alive.contains(v)))
            .map(|(_, vs)| vs)
            .collect();
        let low: Vec<VertexId> = alive
            .iter()
            .copied()
            .filter(|v| edges.iter().filter(|vs| vs.contains(v)).count() < k)
            .collect();
        if low.is_empty() {
            return alive;
        }
        for v in low {
            alive.remove(&v);
        }
    }
}

fn subsets_of_size<T: Copy>(items: &[T], size: usize, f: &mut dyn FnMut(&[T]) -> bool) -> bool {
    fn go<T: Copy>(items: &[T], size: usize, start: usize, cur: &mut Vec<T>, f: &mut dyn FnMut(&[T]) -> bool) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        for i in start..items.len() {
            cur.push(items[i]);
            if go(items, size, i + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(items, size, 0, &mut Vec::new(), f)
}

/// Smallest vertex stash by unpruned enumeration of all subsets.
pub fn brute_min_vertex_stash(h: &Hypergraph, k: usize) -> usize {
    let vertices: Vec<VertexId> = h.vertices().collect();
    (0..=vertices.len())
        .find(|&s| {
            subsets_of_size(&vertices, s, &mut |sub| {
                naive_core(h, k, &sub.iter().copied().collect(), &BTreeSet::new()).is_empty()
            })
        })
        .unwrap()
}

/// Smallest edge stash by unpruned enumeration of all subsets.
pub fn brute_min_edge_stash(h: &Hypergraph, k: usize) -> usize {
    let edges: Vec<EdgeId> = h.edge_ids().collect();
    (0..=edges.len())
        .find(|&s| {
            subsets_of_size(&edges, s, &mut |sub| {
                naive_core(h, k, &BTreeSet::new(), &sub.iter().copied().collect()).is_empty()
            })
        })
        .unwrap()
}

/// Smallest vertex cover by enumeration.
pub fn brute_min_cover(g: &Hypergraph) -> usize {
    let vertices: Vec<VertexId> = g.vertices().collect();
    (0..=vertices.len())
        .find(|&s| {
            subsets_of_size(&vertices, s, &mut |sub| {
                g.edges().all(|(_, vs)| vs.iter().any(|v| sub.contains(v)))
            })
        })
        .unwrap()
}

/// Connected components by depth-first search over the incidence lists.
pub fn components(g: &Hypergraph) -> usize {
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for start in g.vertices() {
        if !seen.insert(start) {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &e in g.incident_edges(v).unwrap() {
                for &w in g.edge(e).unwrap() {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
        }
    }
    count
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One representative of every isomorphism class of simple graphs on
/// exactly `n` vertices (the class's smallest edge bitmask).
pub fn nonisomorphic_graphs(n: usize) -> Vec<Hypergraph> {
    let ps = pairs(n);
    let index = |a: usize, b: usize| ps.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let images: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|perm| ps.iter().map(|&(a, b)| index(perm[a], perm[b])).collect())
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << ps.len() {
        let canonical = images.iter().all(|img| {
            let permuted = (0..ps.len())
                .filter(|&i| mask >> i & 1 == 1)
                .fold(0u32, |acc, i| acc | 1 << img[i]);
            permuted >= mask
        });
        if canonical {
            let edges: Vec<[usize; 2]> = (0..ps.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| [ps[i].0, ps[i].1])
                .collect();
            out.push(Hypergraph::from_edges(2, n, edges).unwrap());
        }
    }
    out
}

/// Simple graph on `n` vertices with each pair present with probability `p`.
pub fn random_simple_graph(n: usize, p: f64, seed: u64) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<[usize; 2]> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).map(|(a, b)| [a, b]).collect();
    Hypergraph::from_edges(2, n, edges).unwrap()
}

/// d-uniform hypergraph on `n` vertices with `m` edges whose vertex sets
/// are pairwise distinct.
pub fn random_simple_hypergraph(n: usize, m: usize, d: usize, seed: u64) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut h = Hypergraph::with_vertices(d, n).unwrap();
    let mut attempts = 0;
    while h.edge_count() < m && attempts < 10_000 {
        attempts += 1;
        let mut vs: Vec<usize> = Vec::new();
        while vs.len() < d {
            let v = rng.gen_range(0..n);
            if !vs.contains(&v) {
                vs.push(v);
            }
        }
        let mut key = vs.clone();
        key.sort_unstable();
        if seen.insert(key) {
            let ids: Vec<VertexId> = vs.into_iter().map(VertexId::from).collect();
            h.add_edge(&ids).unwrap();
        }
    }
    h
}

pub fn is_connected(g: &Hypergraph) -> bool {
    g.vertex_count() == 0 || components(g) == 1
}

//! Seeded random instances: keys as edges, buckets as vertices.
//!
//! The stream is `ChaCha8Rng::seed_from_u64(seed)` (rand_chacha, 8 rounds,
//! seed expanded by rand_core's PCG32-based `seed_from_u64`). Each edge draws
//! vertices one at a time with [`uniform_below`] on successive `next_u64`
//! outputs, discarding repeats within the edge, until it has `d` distinct
//! vertices. Vertices are stored in draw order.

use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};

pub fn gen_random(n_vertices: usize, n_edges: usize, d: usize, seed: u64) -> Result<Hypergraph> {
    if d < 2 {
        return Err(Error::Parameter(format!("arity must be at least 2, got {d}")));
    }
    if n_vertices < d {
        return Err(Error::Parameter(format!(
            "need at least d = {d} vertices, got {n_vertices}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = Hypergraph::with_vertices(d, n_vertices)?;
    let mut edge = Vec::with_capacity(d);
    for _ in 0..n_edges {
        edge.clear();
        while edge.len() < d {
            let v = VertexId::from(uniform_below(&mut rng, n_vertices as u64) as usize);
            if !edge.contains(&v) {
                edge.push(v);
            }
        }
        h.add_edge(&edge)?;
    }
    Ok(h)
}

/// Uniform integer in `0..n` by rejection: draws `x = next_u64()` until
/// `x < 2^64 - (2^64 mod n)`, then returns `x mod n`.
pub fn uniform_below(rng: &mut impl RngCore, n: u64) -> u64 {
    assert!(n > 0);
    let rem = (u64::MAX % n + 1) % n;
    loop {
        let x = rng.next_u64();
        if rem == 0 || x < 0u64.wrapping_sub(rem) {
            return x % n;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::serialize;

    #[test]
    fn standard_graph_is_reproducible() {
        let a = gen_random(10, 5, 2, 1).unwrap();
        let b = gen_random(10, 5, 2, 1).unwrap();
        assert_eq!(a.edge_count(), 5);
        assert_eq!(serialize(&a), serialize(&b));
        assert_ne!(serialize(&a), serialize(&gen_random(10, 5, 2, 2).unwrap()));
    }

    #[test]
    fn three_uniform() {
        let h = gen_random(4, 3, 3, 0).unwrap();
        assert_eq!((h.arity(), h.edge_count(), h.vertex_count()), (3, 3, 4));
        h.check_invariants().unwrap();
    }

    #[test]
    fn too_few_vertices() {
        assert!(matches!(gen_random(2, 1, 3, 0), Err(Error::Parameter(_))));
    }

    #[test]
    fn uniform_below_covers_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut seen = [false; 7];
        for _ in 0..200 {
            seen[uniform_below(&mut rng, 7) as usize] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }
}

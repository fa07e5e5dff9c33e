mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::sample::subsequence;
use stashpeel::random::gen_random;
use stashpeel::solvers::{
    greedy_stash, min_edge_stash_exact, min_vertex_cover_exact, min_vertex_stash_exact, two_edge_stash_standard,
    two_edge_stash_with_order, TieBreak,
};
use stashpeel::text::{parse, serialize};
use stashpeel::{
    is_k_peelable, k_core, k_core_after, k_core_with_order, EdgeId, Hypergraph, PeelOrder, Stash, StashKind,
    VertexId,
};

use common::*;

fn hypergraph(max_n: usize, max_m: usize, arities: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Hypergraph> {
    arities
        .prop_flat_map(move |d| (Just(d), d..=max_n))
        .prop_flat_map(move |(d, n)| {
            let edge = subsequence((0..n).collect::<Vec<_>>(), d);
            (Just(d), Just(n), prop::collection::vec(edge, 0..=max_m))
        })
        .prop_map(|(d, n, edges)| Hypergraph::from_edges(d, n, edges).unwrap())
}

fn standard(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    hypergraph(max_n, max_m, 2..=2)
}

fn subgraph_of(a: &BTreeSet<VertexId>, b: &BTreeSet<VertexId>) -> bool {
    a.is_subset(b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn incidence_survives_removals(h in hypergraph(10, 16, 2..=4), picks in prop::collection::vec((any::<bool>(), any::<prop::sample::Index>()), 0..12)) {
        let mut h = h;
        for (vertex, idx) in picks {
            if vertex {
                let vs: Vec<VertexId> = h.vertices().collect();
                if vs.is_empty() { continue; }
                let v = vs[idx.index(vs.len())];
                let (before, deg) = (h.edge_count(), h.degree(v).unwrap());
                let removed = h.remove_vertex(v).unwrap();
                prop_assert_eq!(removed.len(), deg);
                prop_assert_eq!(h.edge_count(), before - deg);
                prop_assert!(!h.contains_vertex(v));
            } else {
                let es: Vec<EdgeId> = h.edge_ids().collect();
                if es.is_empty() { continue; }
                let before = h.vertex_count();
                h.remove_edge(es[idx.index(es.len())]).unwrap();
                prop_assert_eq!(h.vertex_count(), before);
            }
            prop_assert_eq!(h.check_invariants(), Ok(()));
        }
        let bound = h.vertex_bound();
        prop_assert_eq!(h.add_vertex().index(), bound);
    }

    #[test]
    fn text_round_trip(h in hypergraph(12, 16, 2..=4)) {
        let text = serialize(&h);
        let back = parse(&text).unwrap();
        prop_assert_eq!(serialize(&back), text);
        prop_assert_eq!(back.edges().map(|(e, vs)| (e, vs.to_vec())).collect::<Vec<_>>(),
                        h.edges().map(|(e, vs)| (e, vs.to_vec())).collect::<Vec<_>>());
    }

    #[test]
    fn core_matches_oracles(h in hypergraph(9, 14, 2..=3), k in 1usize..=4) {
        let trace = k_core(&h, k);
        let (core, edges) = brute_core(&h, k);
        prop_assert_eq!(&trace.core_vertices, &core);
        prop_assert_eq!(&trace.core_edges, &edges);
        prop_assert_eq!(naive_core(&h, k, &BTreeSet::new(), &BTreeSet::new()), core);
        prop_assert!(trace.audit(&h, &BTreeSet::new(), &BTreeSet::new()).is_ok());
        prop_assert_eq!(is_k_peelable(&h, k), trace.core_is_empty());
    }

    #[test]
    fn peel_order_does_not_matter(h in hypergraph(14, 24, 2..=3), k in 1usize..=4, seed in any::<u64>()) {
        let a = k_core(&h, k);
        let b = k_core_with_order(&h, k, PeelOrder::Seeded(seed));
        prop_assert_eq!(&a.core_vertices, &b.core_vertices);
        prop_assert_eq!(&a.core_edges, &b.core_edges);
        prop_assert!(b.audit(&h, &BTreeSet::new(), &BTreeSet::new()).is_ok());
    }

    #[test]
    fn core_is_monotone_and_idempotent(h in hypergraph(12, 20, 2..=3), k in 1usize..=3, idx in any::<prop::sample::Index>()) {
        let full = k_core(&h, k);
        let higher = k_core(&h, k + 1);
        prop_assert!(subgraph_of(&higher.core_vertices, &full.core_vertices));
        let mut core = h.clone();
        for &v in &full.peeled_vertices {
            core.remove_vertex(v).unwrap();
        }
        let again = k_core(&core, k);
        prop_assert!(again.peeled_vertices.is_empty());
        prop_assert_eq!(&again.core_vertices, &full.core_vertices);
        let es: Vec<EdgeId> = h.edge_ids().collect();
        if !es.is_empty() {
            let e = es[idx.index(es.len())];
            let after = k_core_after(&h, k, &BTreeSet::new(), &[e].into()).unwrap();
            prop_assert!(subgraph_of(&after.core_vertices, &full.core_vertices));
            let mut without = h.clone();
            without.remove_edge(e).unwrap();
            prop_assert_eq!(&k_core(&without, k).core_vertices, &after.core_vertices);
        }
        let vs: Vec<VertexId> = h.vertices().collect();
        if !vs.is_empty() {
            let v = vs[idx.index(vs.len())];
            let after = k_core_after(&h, k, &[v].into(), &BTreeSet::new()).unwrap();
            prop_assert!(subgraph_of(&after.core_vertices, &full.core_vertices));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn exact_solvers_match_unpruned_enumeration(h in hypergraph(8, 12, 2..=3), k in 2usize..=3) {
        let v = min_vertex_stash_exact(&h, k, 8).unwrap();
        prop_assert_eq!(v.size(), brute_min_vertex_stash(&h, k));
        prop_assert!(v.stash.is_valid_for(&h, k).unwrap());
        let e = min_edge_stash_exact(&h, k, 12).unwrap();
        prop_assert_eq!(e.size(), brute_min_edge_stash(&h, k));
        prop_assert!(e.stash.is_valid_for(&h, k).unwrap());
    }

    #[test]
    fn cyclomatic_number_is_the_minimum_two_edge_stash(g in standard(10, 14), perm_seed in any::<u64>()) {
        let cert = two_edge_stash_standard(&g).unwrap();
        prop_assert_eq!(cert.h, g.edge_count() + components(&g) - g.vertex_count());
        prop_assert_eq!(cert.h, min_edge_stash_exact(&g, 2, 14).unwrap().size());
        let mut order: Vec<EdgeId> = g.edge_ids().collect();
        let n = order.len();
        for i in (1..n).rev() {
            order.swap(i, (perm_seed.rotate_left(i as u32) as usize) % (i + 1));
        }
        let other = two_edge_stash_with_order(&g, &order).unwrap();
        prop_assert_eq!(other.h, cert.h);
        prop_assert!(Stash::Edges(other.removed_edges).is_valid_for(&g, 2).unwrap());
    }

    #[test]
    fn vertex_cover_is_the_one_vertex_stash(g in standard(9, 14)) {
        let cover = min_vertex_cover_exact(&g, 9).unwrap();
        prop_assert_eq!(cover.len(), brute_min_cover(&g));
        prop_assert_eq!(cover.len(), min_vertex_stash_exact(&g, 1, 9).unwrap().size());
    }

    #[test]
    fn greedy_dominates_exact(h in hypergraph(9, 14, 2..=3), k in 2usize..=3, seed in any::<u64>(), edge in any::<bool>()) {
        let kind = if edge { StashKind::Edge } else { StashKind::Vertex };
        for tie in [TieBreak::MaxDegree, TieBreak::MinId, TieBreak::SeededRandom(seed)] {
            let greedy = greedy_stash(&h, k, kind, tie);
            prop_assert!(greedy.stash.is_valid_for(&h, k).unwrap());
            let exact = match kind {
                StashKind::Vertex => min_vertex_stash_exact(&h, k, 9).unwrap(),
                StashKind::Edge => min_edge_stash_exact(&h, k, 14).unwrap(),
            };
            prop_assert!(greedy.size() >= exact.size());
            prop_assert_eq!(greedy.size() == 0, is_k_peelable(&h, k));
        }
    }
}

fn graph(n: usize, edges: &[[usize; 2]]) -> Hypergraph {
    Hypergraph::from_edges(2, n, edges).unwrap()
}

#[test]
fn k4_core_at_three_and_four() {
    let k4 = graph(4, &[[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
    assert_eq!(k_core(&k4, 3).core_vertices, brute_core(&k4, 3).0);
    assert_eq!(k_core(&k4, 3).core_vertices.len(), 4);
    assert!(brute_core(&k4, 4).0.is_empty());
    assert!(k_core(&k4, 4).core_is_empty());
}

#[test]
fn stashing_one_triangle_edge_leaves_the_other_triangle() {
    let two = graph(6, &[[0, 1], [1, 2], [2, 0], [3, 4], [4, 5], [5, 3]]);
    let stash: BTreeSet<EdgeId> = [EdgeId(0)].into();
    let expected = naive_core(&two, 2, &BTreeSet::new(), &stash);
    assert_eq!(expected, [3, 4, 5].map(VertexId).into());
    assert_eq!(k_core_after(&two, 2, &BTreeSet::new(), &stash).unwrap().core_vertices, expected);
}

#[test]
fn parallel_edges_count_toward_degree() {
    let h = graph(2, &[[0, 1], [0, 1]]);
    let rescan = h.edges().filter(|(_, vs)| vs.contains(&VertexId(0))).count();
    assert_eq!(h.degree(VertexId(0)).unwrap(), rescan);
    assert_eq!(rescan, 2);
}

#[test]
fn solver_examples_against_enumeration() {
    let tri = graph(3, &[[0, 1], [1, 2], [2, 0]]);
    let two = graph(6, &[[0, 1], [1, 2], [2, 0], [3, 4], [4, 5], [5, 3]]);
    let k4 = graph(4, &[[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
    assert_eq!(brute_min_vertex_stash(&tri, 2), 1);
    assert_eq!(min_vertex_stash_exact(&tri, 2, 6).unwrap().size(), 1);
    assert_eq!(brute_min_vertex_stash(&two, 2), 2);
    assert_eq!(min_vertex_stash_exact(&two, 2, 6).unwrap().size(), 2);
    assert_eq!(brute_min_edge_stash(&tri, 2), 1);
    assert_eq!(min_edge_stash_exact(&tri, 2, 6).unwrap().size(), 1);
    assert_eq!(brute_min_edge_stash(&k4, 2), 3);
    assert_eq!(min_edge_stash_exact(&k4, 2, 6).unwrap().size(), 3);
    assert_eq!(two_edge_stash_standard(&k4).unwrap().h, 6 - 4 + 1);
    assert_eq!(two_edge_stash_standard(&two).unwrap().h, min_edge_stash_exact(&two, 2, 6).unwrap().size());
    assert_eq!(brute_min_cover(&tri), 2);
    assert_eq!(min_vertex_cover_exact(&tri, 6).unwrap().len(), 2);
}

#[test]
fn greedy_on_seeded_random_graph() {
    let g = gen_random(10, 15, 2, 7).unwrap();
    for kind in [StashKind::Vertex, StashKind::Edge] {
        let greedy = greedy_stash(&g, 2, kind, TieBreak::default());
        let exact = match kind {
            StashKind::Vertex => min_vertex_stash_exact(&g, 2, 6).unwrap(),
            StashKind::Edge => min_edge_stash_exact(&g, 2, 15).unwrap(),
        };
        assert!(greedy.size() >= exact.size());
        assert!(greedy.stash.is_valid_for(&g, 2).unwrap());
    }
}

//! Property checkers that peel gadgets inside an anchor harness.
//!
//! The harness adds `d` anchor vertices joined by `k` parallel edges, so
//! every anchor keeps degree at least `k`. Each edge port becomes a
//! neighboring edge completed by anchors; each terminal gets `k` parallel
//! edges into the anchors. Removing a neighboring edge is modelled as
//! stashing it, removing a terminal as stashing the vertex. The gadget
//! counts as peeled when none of its non-terminal vertices is in the core.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gadgets::blocks::STABLE_SIZE_CONSTANT;
use crate::gadgets::{Gadget, GadgetKind, GadgetParams, Port};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::peeling::PeelState;

/// Largest port count whose subsets are enumerated exhaustively.
pub const EXHAUSTIVE_PORT_LIMIT: usize = 10;

const SAMPLED_SUBSETS: usize = 1024;

/// A gadget wired into the anchor harness with every port present.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub graph: Hypergraph,
    pub k: usize,
    /// Non-terminal gadget vertices (same ids as in the gadget).
    pub members: Vec<VertexId>,
    /// Harness edges realizing each port, by port index.
    pub port_edges: Vec<Vec<EdgeId>>,
    /// The shared vertex of each terminal port.
    pub port_terminals: Vec<Option<VertexId>>,
}

pub fn embed(g: &Gadget) -> Embedding {
    let d = g.params.d;
    let k = g.params.k.max(1);
    let mut graph = g.graph.clone();
    let anchors = graph.add_vertices(d);
    for _ in 0..k {
        graph.add_edge(&anchors).expect("anchor edge is well formed");
    }
    let mut port_edges = Vec::with_capacity(g.ports.len());
    let mut port_terminals = Vec::with_capacity(g.ports.len());
    for port in &g.ports {
        match port {
            Port::Edge { attach } => {
                let mut edge = attach.clone();
                edge.extend(&anchors[..d - attach.len()]);
                port_edges.push(vec![graph.add_edge(&edge).expect("port edge is well formed")]);
                port_terminals.push(None);
            }
            Port::Terminal { vertex, .. } => {
                let mut edge = vec![*vertex];
                edge.extend(&anchors[..d - 1]);
                let edges = (0..k)
                    .map(|_| graph.add_edge(&edge).expect("terminal edge is well formed"))
                    .collect();
                port_edges.push(edges);
                port_terminals.push(Some(*vertex));
            }
        }
    }
    Embedding {
        graph,
        k,
        members: g.members(),
        port_edges,
        port_terminals,
    }
}

impl Embedding {
    /// Members surviving in the k-core when only the `present` ports are
    /// kept and the internal edges in `stash` are removed.
    pub fn survivors(&self, present: &[bool], stash: &[EdgeId]) -> Vec<VertexId> {
        let mut state = PeelState::new(&self.graph, self.k);
        for (i, &keep) in present.iter().enumerate() {
            if keep {
                continue;
            }
            match self.port_terminals[i] {
                Some(v) => state.stash_vertex(v),
                None => self.port_edges[i].iter().for_each(|&e| state.stash_edge(e)),
            }
        }
        for &e in stash {
            state.stash_edge(e);
        }
        state.peel();
        self.members.iter().copied().filter(|&v| state.vertex_alive(v)).collect()
    }

    /// Degree of every member with all ports present.
    fn member_degrees(&self) -> impl Iterator<Item = (VertexId, usize)> + '_ {
        self.members
            .iter()
            .map(|&v| (v, self.graph.degree(v).expect("member is live")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    LowDegree {
        vertex: VertexId,
        degree: usize,
    },
    Configuration {
        /// Indices of the ports kept.
        present: Vec<usize>,
        stash: Vec<EdgeId>,
        /// Members left in the core (empty when the gadget peeled).
        survivors: Vec<VertexId>,
    },
    Size {
        vertices: usize,
        bound: usize,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list<T: fmt::Display>(xs: &[T]) -> String {
            xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        }
        match self {
            Witness::LowDegree { vertex, degree } => write!(f, "vertex={vertex} degree={degree}"),
            Witness::Configuration {
                present,
                stash,
                survivors,
            } => write!(
                f,
                "present=[{}] stash=[{}] survivors=[{}]",
                list(present),
                list(stash),
                list(survivors)
            ),
            Witness::Size { vertices, bound } => write!(f, "vertices={vertices} bound={bound}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Set exactly when the check failed.
    pub witness: Option<Witness>,
}

impl CheckResult {
    fn from_witness(name: &str, witness: Option<Witness>) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: witness.is_none(),
            witness,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GadgetReport {
    pub gadget: GadgetKind,
    pub params: GadgetParams,
    pub checks: Vec<CheckResult>,
    pub parallel_edges: bool,
}

impl GadgetReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// One `gadget\tparams\tcheck\tpass\twitness` line per check.
    pub fn tsv_rows(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| {
                let witness = c.witness.as_ref().map_or_else(|| "-".to_string(), ToString::to_string);
                format!(
                    "{}\t{}\t{}\t{}\t{}",
                    self.gadget,
                    self.params,
                    c.name,
                    if c.passed { "pass" } else { "fail" },
                    witness
                )
            })
            .collect()
    }

    fn new(g: &Gadget, checks: Vec<CheckResult>) -> Self {
        GadgetReport {
            gadget: g.kind,
            params: g.params,
            checks,
            parallel_edges: g.graph.has_parallel_edges(),
        }
    }
}

fn configuration(present: &[bool], stash: &[EdgeId], survivors: Vec<VertexId>) -> Witness {
    Witness::Configuration {
        present: present.iter().enumerate().filter(|(_, &p)| p).map(|(i, _)| i).collect(),
        stash: stash.to_vec(),
        survivors,
    }
}

/// Fails when some member has fewer than `k` incident edges with all ports present.
fn min_degree(emb: &Embedding) -> CheckResult {
    let witness = emb
        .member_degrees()
        .find(|&(_, deg)| deg < emb.k)
        .map(|(vertex, degree)| Witness::LowDegree { vertex, degree });
    CheckResult::from_witness("min-degree", witness)
}

fn expect_unpeelable(name: &str, emb: &Embedding, present: &[bool], stash: &[EdgeId]) -> CheckResult {
    let survivors = emb.survivors(present, stash);
    let witness = survivors.is_empty().then(|| configuration(present, stash, survivors));
    CheckResult::from_witness(name, witness)
}

fn expect_peeled(name: &str, emb: &Embedding, present: &[bool], stash: &[EdgeId]) -> CheckResult {
    let survivors = emb.survivors(present, stash);
    let witness = (!survivors.is_empty()).then(|| configuration(present, stash, survivors));
    CheckResult::from_witness(name, witness)
}

fn all_present(emb: &Embedding) -> Vec<bool> {
    vec![true; emb.port_edges.len()]
}

fn all_but(emb: &Embedding, i: usize) -> Vec<bool> {
    let mut present = all_present(emb);
    present[i] = false;
    present
}

/// Port subsets as masks: all `2^n` when `n <= EXHAUSTIVE_PORT_LIMIT`,
/// otherwise a seeded sample that always includes the extremes.
fn port_subsets(n: usize, seed: u64) -> Vec<Vec<bool>> {
    let mask = |bits: &dyn Fn(usize) -> bool| (0..n).map(bits).collect::<Vec<bool>>();
    if n <= EXHAUSTIVE_PORT_LIMIT {
        return (0u64..1 << n).map(|s| mask(&|i| s >> i & 1 == 1)).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![vec![false; n], vec![true; n]];
    out.extend((0..n).map(|j| mask(&|i| i == j)));
    while out.len() < SAMPLED_SUBSETS {
        out.push((0..n).map(|_| rng.gen_bool(0.5)).collect());
    }
    out
}

/// C_k: minimum degree, `k` edges at each terminal, peels without either
/// terminal, unpeelable with both.
pub fn check_ck_properties(g: &Gadget) -> GadgetReport {
    let emb = embed(g);
    let k = g.params.k;
    let mut checks = vec![min_degree(&emb)];
    let terminal_witness = g.ports.iter().find_map(|p| match p {
        Port::Terminal { vertex, edges } if edges.len() != k => Some(Witness::LowDegree {
            vertex: *vertex,
            degree: edges.len(),
        }),
        _ => None,
    });
    checks.push(CheckResult::from_witness("terminal-edges", terminal_witness));
    for (i, name) in ["peels-without-u", "peels-without-v"].into_iter().enumerate() {
        if i < emb.port_edges.len() {
            checks.push(expect_peeled(name, &emb, &all_but(&emb, i), &[]));
        }
    }
    checks.push(expect_unpeelable("unpeelable", &emb, &all_present(&emb), &[]));
    GadgetReport::new(g, checks)
}

/// b-block: unpeelable with every neighboring edge, peels without any one.
pub fn check_b_block(g: &Gadget) -> GadgetReport {
    let emb = embed(g);
    let mut checks = vec![
        min_degree(&emb),
        expect_unpeelable("unpeelable", &emb, &all_present(&emb), &[]),
    ];
    for i in 0..emb.port_edges.len() {
        checks.push(expect_peeled(&format!("peels-without-port-{i}"), &emb, &all_but(&emb, i), &[]));
    }
    GadgetReport::new(g, checks)
}

fn stable_size_bound(g: &Gadget) -> usize {
    let GadgetParams { k, d, degree } = g.params;
    let m = degree.max(1);
    match g.kind {
        GadgetKind::TreeStable => STABLE_SIZE_CONSTANT * m * d,
        _ => STABLE_SIZE_CONSTANT * m * k * k + d,
    }
}

/// Stable block: unpeelable with any nonempty set of neighboring edges,
/// peels with none, and peels once any E* edge is stashed.
pub fn check_stable_block(g: &Gadget) -> GadgetReport {
    let emb = embed(g);
    let n = emb.port_edges.len();
    let mut checks = vec![min_degree(&emb)];
    let witness = port_subsets(n, n as u64)
        .into_iter()
        .filter(|p| p.iter().any(|&x| x))
        .find_map(|present| {
            let survivors = emb.survivors(&present, &[]);
            survivors.is_empty().then(|| configuration(&present, &[], survivors))
        });
    checks.push(CheckResult::from_witness("unpeelable-with-any-port", witness));
    checks.push(expect_peeled("peels-without-ports", &emb, &vec![false; n], &[]));
    checks.push(estar_nonempty(g));
    checks.push(estar_peels(g, &emb));
    let vertices = g.graph.vertex_count();
    let bound = stable_size_bound(g);
    checks.push(CheckResult::from_witness(
        "size-bound",
        (vertices > bound).then_some(Witness::Size { vertices, bound }),
    ));
    GadgetReport::new(g, checks)
}

fn estar_nonempty(g: &Gadget) -> CheckResult {
    CheckResult::from_witness(
        "estar-nonempty",
        g.estar.is_empty().then(|| Witness::Configuration {
            present: Vec::new(),
            stash: Vec::new(),
            survivors: g.members(),
        }),
    )
}

fn estar_peels(g: &Gadget, emb: &Embedding) -> CheckResult {
    let present = all_present(emb);
    let witness = g.estar.iter().find_map(|&e| {
        let survivors = emb.survivors(&present, &[e]);
        (!survivors.is_empty()).then(|| configuration(&present, &[e], survivors))
    });
    CheckResult::from_witness("estar-peels", witness)
}

/// Vertex gadget: peels exactly when fewer than `k` neighboring edges
/// remain (every subset for `δ <= EXHAUSTIVE_PORT_LIMIT`), and stashing any
/// E* edge peels it with all neighboring edges present.
pub fn check_vertex_gadget(g: &Gadget) -> GadgetReport {
    let emb = embed(g);
    let k = g.params.k;
    let n = emb.port_edges.len();
    let witness = port_subsets(n, n as u64).into_iter().find_map(|present| {
        let kept = present.iter().filter(|&&p| p).count();
        let survivors = emb.survivors(&present, &[]);
        (survivors.is_empty() != (kept < k)).then(|| configuration(&present, &[], survivors))
    });
    let checks = vec![
        CheckResult::from_witness("peels-iff-fewer-than-k-ports", witness),
        estar_nonempty(g),
        estar_peels(g, &emb),
    ];
    GadgetReport::new(g, checks)
}

pub fn check_gadget(g: &Gadget) -> GadgetReport {
    match g.kind {
        GadgetKind::Ck => check_ck_properties(g),
        GadgetKind::TwoBlock | GadgetKind::ThreeBlock => check_b_block(g),
        GadgetKind::SimpleStable | GadgetKind::Stable | GadgetKind::TreeStable => check_stable_block(g),
        GadgetKind::Vertex => check_vertex_gadget(g),
    }
}

/// A one-edge mutation that the checkers must reject: among members of
/// minimum harness degree (lowest id first) that touch an internal edge,
/// delete the lowest-id such edge. A gadget without internal edges loses
/// its last port instead.
pub fn negative_control(g: &Gadget) -> Gadget {
    let emb = embed(g);
    let mut members: Vec<(usize, VertexId)> = emb.member_degrees().map(|(v, deg)| (deg, v)).collect();
    members.sort_unstable();
    let internal: BTreeSet<EdgeId> = g.graph.edge_ids().collect();
    let victim = members.iter().find_map(|&(_, v)| {
        g.graph
            .incident_edges(v)
            .expect("member is live")
            .iter()
            .copied()
            .filter(|e| internal.contains(e))
            .min()
    });
    match victim {
        Some(e) => g.without_edge(e).expect("edge is live"),
        None => {
            let mut mutated = g.clone();
            mutated.ports.pop();
            mutated
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{build_b_block, build_ck_gadget, build_stable_block, build_tree_stable_block, build_vertex_gadget};

    #[test]
    fn embedding_adds_anchor_and_port_edges() {
        let g = build_b_block(2, 3, 2).unwrap();
        let emb = embed(&g);
        assert_eq!(emb.graph.vertex_count(), g.graph.vertex_count() + 2);
        assert_eq!(emb.graph.edge_count(), g.graph.edge_count() + 3 + 2);
        assert_eq!(emb.members.len(), g.graph.vertex_count());
    }

    #[test]
    fn terminals_are_not_members() {
        let g = build_ck_gadget(3, 2).unwrap();
        let emb = embed(&g);
        assert_eq!(emb.members.len(), 3);
        assert_eq!(emb.port_edges[0].len(), 3);
    }

    #[test]
    fn small_gadgets_pass() {
        assert!(check_ck_properties(&build_ck_gadget(2, 2).unwrap()).passed());
        assert!(check_b_block(&build_b_block(3, 3, 2).unwrap()).passed());
        assert!(check_stable_block(&build_stable_block(2, 3, 2).unwrap()).passed());
        assert!(check_stable_block(&build_tree_stable_block(3, 3).unwrap()).passed());
        assert!(check_vertex_gadget(&build_vertex_gadget(4, 3, 2).unwrap()).passed());
    }

    #[test]
    fn negative_control_is_detected() {
        let g = build_ck_gadget(3, 2).unwrap();
        let bad = negative_control(&g);
        assert_eq!(bad.graph.edge_count(), g.graph.edge_count() - 1);
        let report = check_gadget(&bad);
        assert!(!report.passed());
        assert!(report.failures().all(|c| c.witness.is_some()));
    }

    #[test]
    fn single_node_control_drops_a_port() {
        let g = build_b_block(3, 3, 2).unwrap();
        let bad = negative_control(&g);
        assert_eq!(bad.ports.len(), 2);
        let report = check_b_block(&bad);
        assert!(!report.passed());
    }

    #[test]
    fn sampled_subsets_cover_extremes() {
        let s = port_subsets(12, 3);
        assert_eq!(s.len(), SAMPLED_SUBSETS);
        assert!(s.contains(&vec![true; 12]));
        assert_eq!(port_subsets(3, 0).len(), 8);
    }

    #[test]
    fn tsv_rows_have_five_columns() {
        let report = check_gadget(&negative_control(&build_b_block(2, 4, 2).unwrap()));
        for row in report.tsv_rows() {
            assert_eq!(row.split('\t').count(), 5);
        }
    }
}

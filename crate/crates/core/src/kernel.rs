//! Polynomial kernel for 𝓛-cluster editing.
//!
//! The pipeline drops components that already are cliques or ℓ-cliques,
//! rejects instances whose Q-quotient is too large to be fixed with `k`
//! edits, and shrinks big twin classes: a class of false twins is cut to
//! `k + 2` vertices and a class of true twins to `ℓ + k + 1`. What is left has
//! at most `2ℓk(k+2) + 2k(ℓ+k+1)` vertices.

use crate::graph::Graph;
use crate::md::{
    count_kinds, decompose, q_partition, quotient_graph, MdTree, NodeLabel, QKind, QuotientGraph,
};
use crate::recognition::classify_node;

/// `2ℓk(k+2) + 2k(ℓ+k+1)`.
pub fn kernel_bound(l: usize, k: usize) -> usize {
    2 * l * k * (k + 2) + 2 * k * (l + k + 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialReduction {
    pub graph: Graph,
    /// `vertex_map[i]` is the vertex of the input that became vertex `i`.
    pub vertex_map: Vec<usize>,
    /// Removed components, in input labels.
    pub removed: Vec<Vec<usize>>,
}

/// Drops every component that is a clique or an ℓ-clique. The remaining
/// vertices keep their relative order.
pub fn remove_trivial_components(g: &Graph, l: usize) -> TrivialReduction {
    reduce_with_tree(g, l).0
}

/// The reduction together with the decomposition tree of the reduced graph,
/// cut out of the input's tree instead of recomputed.
fn reduce_with_tree(g: &Graph, l: usize) -> (TrivialReduction, MdTree) {
    let tree = decompose(g);
    let mut keep = Vec::new();
    let mut kept_roots = Vec::new();
    let mut removed = Vec::new();
    for id in tree.component_roots() {
        let verts = &tree.node(id).vertices;
        if classify_node(&tree, id, l).is_allowed() {
            removed.push(verts.clone());
        } else {
            keep.extend_from_slice(verts);
            kept_roots.push(id);
        }
    }
    keep.sort_unstable();
    let mut relabel = vec![usize::MAX; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        relabel[v] = i;
    }
    let reduced_tree = tree.restrict_to_components(&kept_roots, &relabel);
    let reduction = TrivialReduction {
        graph: g.induced_subgraph(&keep),
        vertex_map: keep,
        removed,
    };
    (reduction, reduced_tree)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FilterOutcome {
    Pass,
    Reject(String),
}

/// Certifies no-instances by size: a graph without trivial components that
/// can be fixed with `k` edits has a Q-quotient of at most `(2ℓ+2)k`
/// vertices, at most `2ℓk` P-vertices and `2k` S-vertices, and at most `2k`
/// components.
pub fn quotient_size_filter(g: &Graph, l: usize, k: usize) -> FilterOutcome {
    let tree = decompose(g);
    let q = q_quotient_of(g, &tree);
    filter_quotient(&q, tree.component_roots().len(), l, k)
}

fn q_quotient_of(g: &Graph, tree: &MdTree) -> QuotientGraph {
    quotient_graph(g, &q_partition(tree)).expect("Q-partition parts are modules")
}

fn filter_quotient(q: &QuotientGraph, components: usize, l: usize, k: usize) -> FilterOutcome {
    let (_, p, s) = count_kinds(q);
    let checks = [
        (q.len(), (2 * l + 2) * k, "quotient bound (2ℓ+2)k exceeded"),
        (p, 2 * l * k, "P-vertex bound 2ℓk exceeded"),
        (s, 2 * k, "S-vertex bound 2k exceeded"),
        (components, 2 * k, "component bound 2k exceeded"),
    ];
    for (value, bound, reason) in checks {
        if value > bound {
            return FilterOutcome::Reject(format!("{reason}: {value} > {bound}"));
        }
    }
    FilterOutcome::Pass
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationEntry {
    pub kind: QKind,
    /// Members kept, input labels.
    pub kept: Vec<usize>,
    /// Members deleted, input labels.
    pub removed: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub graph: Graph,
    pub vertex_map: Vec<usize>,
    pub log: Vec<TruncationEntry>,
}

impl Truncation {
    pub fn vertices_removed(&self) -> usize {
        self.log.iter().map(|e| e.removed.len()).sum()
    }
}

/// Cuts every P-vertex of the Q-quotient down to `k + 2` members and every
/// S-vertex down to `ℓ + k + 1`, keeping the smallest labels.
pub fn truncate_modules(g: &Graph, l: usize, k: usize) -> Truncation {
    let tree = decompose(g);
    truncate_with(g, &q_quotient_of(g, &tree), l, k)
}

fn truncate_with(g: &Graph, q: &QuotientGraph, l: usize, k: usize) -> Truncation {
    let mut drop = vec![false; g.n()];
    let mut log = Vec::new();
    for part in &q.parts {
        let cap = match part.kind {
            QKind::U => continue,
            QKind::P => k + 2,
            QKind::S => l + k + 1,
        };
        if part.members.len() > cap {
            let (kept, removed) = part.members.split_at(cap);
            for &v in removed {
                drop[v] = true;
            }
            log.push(TruncationEntry {
                kind: part.kind,
                kept: kept.to_vec(),
                removed: removed.to_vec(),
            });
        }
    }
    let keep: Vec<usize> = (0..g.n()).filter(|&v| !drop[v]).collect();
    Truncation {
        graph: g.induced_subgraph(&keep),
        vertex_map: keep,
        log,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelStatus {
    Kernel(Graph),
    No(String),
    TriviallyYes,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KernelStats {
    pub components_removed: usize,
    pub vertices_truncated: usize,
    /// Vertices of the Q-quotient after trivial components are gone.
    pub quotient_size: usize,
    pub p_vertices: usize,
    pub s_vertices: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelResult {
    pub status: KernelStatus,
    /// Kernel vertex → input vertex. Empty unless the status is `Kernel`.
    pub vertex_map: Vec<usize>,
    pub stats: KernelStats,
}

/// Runs the full pipeline: trivial components, size filter, truncation.
pub fn kernelize(g: &Graph, l: usize, k: usize) -> KernelResult {
    assert!(l >= 2, "ℓ must be at least 2");
    let (reduced, tree) = reduce_with_tree(g, l);
    let mut stats = KernelStats {
        components_removed: reduced.removed.len(),
        ..KernelStats::default()
    };
    if reduced.graph.n() == 0 {
        return KernelResult {
            status: KernelStatus::TriviallyYes,
            vertex_map: Vec::new(),
            stats,
        };
    }

    let q = q_quotient_of(&reduced.graph, &tree);
    let (_, p, s) = count_kinds(&q);
    stats.quotient_size = q.len();
    stats.p_vertices = p;
    stats.s_vertices = s;
    if let FilterOutcome::Reject(reason) = filter_quotient(&q, tree.component_roots().len(), l, k) {
        return KernelResult {
            status: KernelStatus::No(reason),
            vertex_map: Vec::new(),
            stats,
        };
    }

    let cut = truncate_with(&reduced.graph, &q, l, k);
    stats.vertices_truncated = cut.vertices_removed();
    assert!(
        cut.graph.n() <= kernel_bound(l, k),
        "kernel has {} vertices, bound is {}",
        cut.graph.n(),
        kernel_bound(l, k)
    );
    let vertex_map = cut
        .vertex_map
        .iter()
        .map(|&v| reduced.vertex_map[v])
        .collect();
    KernelResult {
        status: KernelStatus::Kernel(cut.graph),
        vertex_map,
        stats,
    }
}

/// A quotient instance for the weighted versions of cluster and bicluster
/// editing. Every pair of quotient vertices carries weight `|M|·|M'|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedQuotientInstance {
    /// Members of each quotient vertex, ascending, ordered by smallest member.
    pub members: Vec<Vec<usize>>,
    /// Adjacency between quotient vertices.
    pub graph: Graph,
}

impl WeightedQuotientInstance {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn weight(&self, i: usize, j: usize) -> u64 {
        (self.members[i].len() * self.members[j].len()) as u64
    }

    /// Every unordered pair `(i, j, weight, is_edge)` with `i < j`.
    pub fn pair_weights(&self) -> Vec<(usize, usize, u64, bool)> {
        let n = self.len();
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                out.push((i, j, self.weight(i, j), self.graph.has_edge(i, j)));
            }
        }
        out
    }

    /// Expands an edited quotient back to a graph on the original vertices.
    pub fn expand(&self, quotient: &Graph, n: usize, internal_edges: bool) -> Graph {
        let mut edges = Vec::new();
        for m in &self.members {
            if internal_edges {
                for (a, &u) in m.iter().enumerate() {
                    edges.extend(m[a + 1..].iter().map(|&v| (u, v)));
                }
            }
        }
        for (i, j) in quotient.edges() {
            for &u in &self.members[i] {
                for &v in &self.members[j] {
                    edges.push((u.min(v), u.max(v)));
                }
            }
        }
        Graph::from_edges(n, edges).expect("quotient expansion is simple")
    }
}

/// Groups the leaf children of every series node (maximal sets of true
/// twins); all other vertices stay alone.
pub fn build_weighted_s_quotient(g: &Graph) -> WeightedQuotientInstance {
    weighted_quotient(g, NodeLabel::Series)
}

/// Groups the leaf children of every parallel node (maximal sets of false
/// twins); all other vertices stay alone.
pub fn build_weighted_p_quotient(g: &Graph) -> WeightedQuotientInstance {
    weighted_quotient(g, NodeLabel::Parallel)
}

fn weighted_quotient(g: &Graph, group: NodeLabel) -> WeightedQuotientInstance {
    let tree = decompose(g);
    let mut grouped = vec![false; g.n()];
    let mut parts = Vec::new();
    for (id, node) in tree.nodes().iter().enumerate() {
        if node.label == group {
            let leaves = tree.leaf_children(id);
            if !leaves.is_empty() {
                for &v in &leaves {
                    grouped[v] = true;
                }
                parts.push(leaves);
            }
        }
    }
    parts.extend((0..g.n()).filter(|&v| !grouped[v]).map(|v| vec![v]));
    parts.sort_by_key(|p| p[0]);
    let q = quotient_graph(g, &parts).expect("twin classes are modules");
    WeightedQuotientInstance {
        members: parts,
        graph: q.graph,
    }
}

//! Recognition of cliques, ℓ-cliques and mixed cluster graphs, and
//! extraction of forbidden induced subgraphs (P4, paw, K_{ℓ+2} − e).
//!
//! A graph is a disjoint union of cliques and ℓ-cliques exactly when it has
//! none of the three forbidden subgraphs. All searches walk the modular
//! decomposition tree instead of scanning vertex subsets:
//!
//! * a P4 exists iff the tree has a prime node, and one is found among
//!   representatives of that node's children;
//! * in a cograph, a paw sits in any component whose series root has a
//!   child containing an edge;
//! * otherwise every component is complete multipartite, and a K_{ℓ+2} − e
//!   exists iff a component has at least ℓ + 1 classes, one of them with two
//!   or more vertices.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::md::{decompose, MdTree, NodeLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WitnessKind {
    P4,
    Paw,
    KMinusE,
}

/// A forbidden induced subgraph.
///
/// Vertex order: P4 in path order `a b c d` with `a < d`; paw as the
/// triangle `x y z` followed by the pendant `w` attached at `x`; K_{ℓ+2} − e
/// as the missing pair `a b` followed by the remaining vertices ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
}

impl Witness {
    /// Checks that the listed vertices induce exactly the named graph in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        let mut distinct = vs.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != vs.len() || vs.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let e = |i: usize, j: usize| g.has_edge(vs[i], vs[j]);
        match self.kind {
            WitnessKind::P4 => {
                vs.len() == 4 && e(0, 1) && e(1, 2) && e(2, 3) && !e(0, 2) && !e(0, 3) && !e(1, 3)
            }
            WitnessKind::Paw => {
                vs.len() == 4 && e(0, 1) && e(0, 2) && e(1, 2) && e(0, 3) && !e(1, 3) && !e(2, 3)
            }
            WitnessKind::KMinusE => {
                vs.len() >= 4
                    && !e(0, 1)
                    && (0..vs.len())
                        .flat_map(|i| (i + 1..vs.len()).map(move |j| (i, j)))
                        .filter(|&p| p != (0, 1))
                        .all(|(i, j)| e(i, j))
            }
        }
    }

    /// Unordered vertex pairs of the witness, lexicographically sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        let mut out = Vec::with_capacity(vs.len() * (vs.len() - 1) / 2);
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                out.push((vs[i], vs[j]));
            }
        }
        out
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        match self.kind {
            WitnessKind::P4 => write!(f, "P4: {}", vs.join(" ")),
            WitnessKind::Paw => write!(f, "PAW: {} / {}", vs[..3].join(" "), vs[3]),
            WitnessKind::KMinusE => write!(f, "KME: {} | {}", vs[..2].join(" "), vs[2..].join(" ")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentClass {
    Clique(usize),
    /// Connected complete multipartite with 2..=ℓ classes; class sizes ascending.
    LClique(Vec<usize>),
    Other,
}

impl ComponentClass {
    pub fn is_allowed(&self) -> bool {
        !matches!(self, ComponentClass::Other)
    }
}

/// Classifies the connected component `comp` of `g`.
pub fn classify_component(g: &Graph, comp: &[usize], l: usize) -> Result<ComponentClass> {
    let mut verts = comp.to_vec();
    verts.sort_unstable();
    verts.dedup();
    if verts.is_empty() || verts.len() != comp.len() {
        return Err(Error::Invariant("component must be a non-empty set".into()));
    }
    if let Some(&v) = verts.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    let mut inside = vec![false; g.n()];
    for &v in &verts {
        inside[v] = true;
    }
    if verts
        .iter()
        .any(|&v| g.neighbors(v).iter().any(|&u| !inside[u]))
    {
        return Err(Error::Invariant(
            "vertex set is not closed under adjacency".into(),
        ));
    }
    let sub = g.induced_subgraph(&verts);
    if sub.connected_components().len() != 1 {
        return Err(Error::Invariant("vertex set is not connected".into()));
    }
    let tree = decompose(&sub);
    Ok(classify_node(&tree, 0, l))
}

/// Classifies the connected module at tree node `id`.
pub(crate) fn classify_node(tree: &MdTree, id: usize, l: usize) -> ComponentClass {
    let node = tree.node(id);
    match node.label {
        NodeLabel::Leaf(_) => ComponentClass::Clique(1),
        NodeLabel::Series => {
            let children: Vec<_> = node.children.iter().map(|&c| tree.node(c)).collect();
            if children.iter().all(|c| c.is_leaf()) {
                return ComponentClass::Clique(node.vertices.len());
            }
            // Each class must be edgeless: a leaf or a parallel node of leaves.
            let edgeless = children.iter().all(|c| {
                c.is_leaf()
                    || (c.label == NodeLabel::Parallel
                        && c.children.iter().all(|&g| tree.node(g).is_leaf()))
            });
            if edgeless && children.len() <= l {
                let mut sizes: Vec<usize> = children.iter().map(|c| c.vertices.len()).collect();
                sizes.sort_unstable();
                ComponentClass::LClique(sizes)
            } else {
                ComponentClass::Other
            }
        }
        NodeLabel::Prime => ComponentClass::Other,
        NodeLabel::Parallel => unreachable!("a component root is never parallel"),
    }
}

/// Class of every connected component, ordered by smallest vertex.
pub fn classify_components(tree: &MdTree, l: usize) -> Vec<(Vec<usize>, ComponentClass)> {
    tree.component_roots()
        .into_iter()
        .map(|id| (tree.node(id).vertices.clone(), classify_node(tree, id, l)))
        .collect()
}

/// True iff every component is a clique or an ℓ-clique.
pub fn is_l_cluster_graph(g: &Graph, l: usize) -> bool {
    let tree = decompose(g);
    tree.component_roots()
        .into_iter()
        .all(|id| classify_node(&tree, id, l).is_allowed())
}

/// Finds a forbidden induced subgraph, or `None` when `g` is an 𝓛-cluster
/// graph. P4s take priority over paws, paws over K_{ℓ+2} − e; within a kind
/// the search scans tree nodes and vertices in ascending order, so the
/// result is deterministic.
pub fn find_forbidden(g: &Graph, l: usize) -> Option<Witness> {
    let tree = decompose(g);
    find_forbidden_in(g, &tree, l)
}

pub fn find_forbidden_in(g: &Graph, tree: &MdTree, l: usize) -> Option<Witness> {
    if let Some(w) = find_p4(g, tree) {
        return Some(w);
    }
    let comps = tree.component_roots();
    for &c in &comps {
        if let Some(w) = find_paw(g, tree, c) {
            return Some(w);
        }
    }
    comps.iter().find_map(|&c| find_k_minus_e(tree, c, l))
}

/// Finds a forbidden induced subgraph whose vertex set contains both `a`
/// and `b`, so that toggling `ab` destroys it. Local search around the pair;
/// meant for small graphs.
pub fn find_forbidden_containing(g: &Graph, l: usize, a: usize, b: usize) -> Option<Witness> {
    let (a, b) = (a.min(b), a.max(b));
    let others: Vec<usize> = (0..g.n()).filter(|&v| v != a && v != b).collect();
    for (i, &x) in others.iter().enumerate() {
        for &y in &others[i + 1..] {
            for kind in [WitnessKind::P4, WitnessKind::Paw] {
                if let Some(w) = arrange_four(g, kind, [a, b, x, y]) {
                    return Some(w);
                }
            }
        }
    }
    let mut set = vec![a, b];
    let missing = usize::from(!g.has_edge(a, b));
    extend_k_minus_e(g, l + 2, &others, 0, &mut set, missing)
}

/// Orders four vertices as a witness of `kind` if they induce one.
fn arrange_four(g: &Graph, kind: WitnessKind, vs: [usize; 4]) -> Option<Witness> {
    let deg = |v: usize| vs.iter().filter(|&&u| u != v && g.has_edge(u, v)).count();
    let edges: usize = vs.iter().map(|&v| deg(v)).sum::<usize>() / 2;
    let mut sorted = vs;
    sorted.sort_unstable();
    match kind {
        WitnessKind::P4 if edges == 3 => {
            let ends: Vec<usize> = sorted.iter().copied().filter(|&v| deg(v) == 1).collect();
            if ends.len() != 2 {
                return None;
            }
            let next = |prev: usize, cur: usize| {
                *sorted
                    .iter()
                    .find(|&&u| u != prev && u != cur && g.has_edge(u, cur))
                    .unwrap()
            };
            let b = next(usize::MAX, ends[0]);
            let c = next(ends[0], b);
            Some(Witness {
                kind,
                vertices: vec![ends[0], b, c, ends[1]],
            })
        }
        WitnessKind::Paw if edges == 4 => {
            let centre = *sorted.iter().find(|&&v| deg(v) == 3)?;
            let pendant = *sorted.iter().find(|&&v| deg(v) == 1)?;
            let mut vertices = vec![centre];
            vertices.extend(
                sorted
                    .iter()
                    .copied()
                    .filter(|&v| v != centre && v != pendant),
            );
            vertices.push(pendant);
            Some(Witness { kind, vertices })
        }
        _ => None,
    }
}

fn extend_k_minus_e(
    g: &Graph,
    size: usize,
    others: &[usize],
    from: usize,
    set: &mut Vec<usize>,
    missing: usize,
) -> Option<Witness> {
    if set.len() == size {
        if missing != 1 {
            return None;
        }
        let mut vs = set.clone();
        vs.sort_unstable();
        let (x, y) = vs
            .iter()
            .enumerate()
            .flat_map(|(i, &x)| vs[i + 1..].iter().map(move |&y| (x, y)))
            .find(|&(x, y)| !g.has_edge(x, y))?;
        let mut vertices = vec![x, y];
        vertices.extend(vs.iter().copied().filter(|&v| v != x && v != y));
        return Some(Witness {
            kind: WitnessKind::KMinusE,
            vertices,
        });
    }
    for i in from..others.len() {
        if others.len() - i < size - set.len() {
            break;
        }
        let v = others[i];
        let extra = set.iter().filter(|&&u| !g.has_edge(u, v)).count();
        if missing + extra <= 1 {
            set.push(v);
            let found = extend_k_minus_e(g, size, others, i + 1, set, missing + extra);
            set.pop();
            if found.is_some() {
                return found;
            }
        }
    }
    None
}

fn find_p4(g: &Graph, tree: &MdTree) -> Option<Witness> {
    let (id, node) = tree
        .nodes()
        .iter()
        .enumerate()
        .find(|(_, n)| n.label == NodeLabel::Prime)?;
    // Smallest vertex of every child; the induced graph on them is the
    // (prime) quotient of the node.
    let reps: Vec<usize> = node
        .children
        .iter()
        .map(|&c| tree.node(c).vertices[0])
        .collect();
    let q = g.induced_subgraph(&reps);
    let path = p4_in_prime(&q).unwrap_or_else(|| panic!("prime node {id} has no P4"));
    let mut vs: Vec<usize> = path.iter().map(|&i| reps[i]).collect();
    if vs[0] > vs[3] {
        vs.reverse();
    }
    Some(Witness {
        kind: WitnessKind::P4,
        vertices: vs,
    })
}

/// Scans middle edges `bc` in ascending order for ends `a ∈ N(b) \ N[c]`,
/// `d ∈ N(c) \ N[b]` with `a`, `d` non-adjacent.
fn p4_in_prime(q: &Graph) -> Option<[usize; 4]> {
    for (b, c) in q.edges() {
        for (b, c) in [(b, c), (c, b)] {
            let ends_a: Vec<usize> = q
                .neighbors(b)
                .iter()
                .copied()
                .filter(|&a| a != c && !q.has_edge(a, c))
                .collect();
            if ends_a.is_empty() {
                continue;
            }
            for &d in q.neighbors(c) {
                if d == b || q.has_edge(d, b) {
                    continue;
                }
                if let Some(&a) = ends_a.iter().find(|&&a| !q.has_edge(a, d)) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Paw inside the cograph component rooted at `comp`: a series child `H_i`
/// holding an edge `ab`, a vertex `c` of `H_i` outside the component of `ab`
/// within `H_i`, and a vertex `d` of another child.
fn find_paw(g: &Graph, tree: &MdTree, comp: usize) -> Option<Witness> {
    let root = tree.node(comp);
    if root.label != NodeLabel::Series {
        return None;
    }
    for &hi in &root.children {
        let h = tree.node(hi);
        if h.label != NodeLabel::Parallel {
            continue;
        }
        let Some(inner) = h
            .children
            .iter()
            .map(|&c| tree.node(c))
            .find(|c| !c.is_leaf())
        else {
            continue;
        };
        let a = inner.vertices[0];
        let in_inner = |x: usize| inner.vertices.binary_search(&x).is_ok();
        let b = *g.neighbors(a).iter().find(|&&x| in_inner(x))?;
        let c = *h.vertices.iter().find(|&&x| !in_inner(x))?;
        let d = root
            .vertices
            .iter()
            .copied()
            .find(|x| h.vertices.binary_search(x).is_err())?;
        return Some(Witness {
            kind: WitnessKind::Paw,
            vertices: vec![d, a, b, c],
        });
    }
    None
}

fn find_k_minus_e(tree: &MdTree, comp: usize, l: usize) -> Option<Witness> {
    let root = tree.node(comp);
    if root.label != NodeLabel::Series || root.children.len() < l + 1 {
        return None;
    }
    let classes: Vec<&[usize]> = root
        .children
        .iter()
        .map(|&c| tree.node(c).vertices.as_slice())
        .collect();
    let big = classes.iter().position(|c| c.len() >= 2)?;
    let mut vertices = vec![classes[big][0], classes[big][1]];
    let mut rest: Vec<usize> = classes
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != big)
        .take(l)
        .map(|(_, c)| c[0])
        .collect();
    rest.sort_unstable();
    vertices.extend(rest);
    Some(Witness {
        kind: WitnessKind::KMinusE,
        vertices,
    })
}

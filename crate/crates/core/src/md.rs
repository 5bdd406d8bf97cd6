//! Modular decomposition tree, the Q-partition and the Q-quotient graph.
//!
//! The tree is built top-down. A vertex set that induces a disconnected graph
//! becomes a parallel node over its components, one whose complement is
//! disconnected becomes a series node over its co-components, and anything
//! else is prime. For a prime set we pick a vertex `v` of minimum degree,
//! refine the remaining vertices into the maximal modules avoiding `v`, and
//! use the "forcing" relation between those modules (a module `Y` forces `Y`
//! into every module that contains `v` and `X` when `Y` sees `X` and `v`
//! differently) to tell the top-level children apart from the parts that
//! nest inside the child holding `v`. The top-level parts form the unique
//! source component of the forcing digraph.
//!
//! Components and co-components are found in time linear in the size of the
//! induced subgraph, so each tree level costs `O(n + m)`; graphs whose trees
//! are shallow (the common case for cluster-like inputs) decompose in near
//! linear time.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeLabel {
    Parallel,
    Series,
    Prime,
    Leaf(usize),
}

impl NodeLabel {
    fn tag(&self) -> &'static str {
        match self {
            NodeLabel::Parallel => "P",
            NodeLabel::Series => "S",
            NodeLabel::Prime => "N",
            NodeLabel::Leaf(_) => "L",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdNode {
    pub label: NodeLabel,
    /// Child node ids, ordered by smallest contained vertex.
    pub children: Vec<usize>,
    /// Vertices of the module, ascending.
    pub vertices: Vec<usize>,
}

impl MdNode {
    pub fn is_leaf(&self) -> bool {
        matches!(self.label, NodeLabel::Leaf(_))
    }
}

/// Modular decomposition tree. Nodes are stored in preorder, so two trees of
/// the same graph compare equal field by field.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MdTree {
    nodes: Vec<MdNode>,
}

/// Nested, arena-free view of a tree; handy for comparing against other
/// constructions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum MdShape {
    Leaf(usize),
    Node(NodeLabel, Vec<MdShape>),
}

impl MdTree {
    pub fn root(&self) -> Option<usize> {
        (!self.nodes.is_empty()).then_some(0)
    }

    pub fn node(&self, id: usize) -> &MdNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[MdNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Vertices that are leaf children of `id`, ascending.
    pub fn leaf_children(&self, id: usize) -> Vec<usize> {
        self.nodes[id]
            .children
            .iter()
            .filter_map(|&c| match self.nodes[c].label {
                NodeLabel::Leaf(v) => Some(v),
                _ => None,
            })
            .collect()
    }

    pub fn has_prime_node(&self) -> bool {
        self.nodes.iter().any(|n| n.label == NodeLabel::Prime)
    }

    /// Node ids whose modules are the connected components of the graph,
    /// ordered by smallest vertex.
    pub fn component_roots(&self) -> Vec<usize> {
        match self.root() {
            None => Vec::new(),
            Some(r) if self.nodes[r].label == NodeLabel::Parallel => self.nodes[r].children.clone(),
            Some(r) => vec![r],
        }
    }

    /// Tree of the subgraph made of the components rooted at `roots`
    /// (ascending node ids from `component_roots`). `relabel` maps every
    /// kept vertex to its new label and must preserve their order.
    pub(crate) fn restrict_to_components(&self, roots: &[usize], relabel: &[usize]) -> MdTree {
        let mut nodes = Vec::new();
        if roots.len() > 1 {
            let mut vertices: Vec<usize> = roots
                .iter()
                .flat_map(|&r| self.nodes[r].vertices.iter().map(|&v| relabel[v]))
                .collect();
            vertices.sort_unstable();
            nodes.push(MdNode {
                label: NodeLabel::Parallel,
                children: Vec::with_capacity(roots.len()),
                vertices,
            });
        }
        let mut stack: Vec<(usize, Option<usize>)> = roots
            .iter()
            .rev()
            .map(|&r| (r, nodes.first().map(|_| 0)))
            .collect();
        while let Some((old, parent)) = stack.pop() {
            let id = nodes.len();
            if let Some(p) = parent {
                nodes[p].children.push(id);
            }
            let node = &self.nodes[old];
            nodes.push(MdNode {
                label: match node.label {
                    NodeLabel::Leaf(v) => NodeLabel::Leaf(relabel[v]),
                    l => l,
                },
                children: Vec::with_capacity(node.children.len()),
                vertices: node.vertices.iter().map(|&v| relabel[v]).collect(),
            });
            stack.extend(node.children.iter().rev().map(|&c| (c, Some(id))));
        }
        MdTree { nodes }
    }

    pub fn shape(&self) -> Option<MdShape> {
        fn go(t: &MdTree, id: usize) -> MdShape {
            let node = &t.nodes[id];
            match node.label {
                NodeLabel::Leaf(v) => MdShape::Leaf(v),
                l => MdShape::Node(l, node.children.iter().map(|&c| go(t, c)).collect()),
            }
        }
        self.root().map(|r| go(self, r))
    }

    /// Indented text form: one node per line, `label [members]`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(r) = self.root() {
            let mut stack = vec![(r, 0usize)];
            while let Some((id, depth)) = stack.pop() {
                let node = &self.nodes[id];
                let _ = writeln!(
                    out,
                    "{}{} [{}]",
                    "  ".repeat(depth),
                    node.label.tag(),
                    join(&node.vertices)
                );
                for &c in node.children.iter().rev() {
                    stack.push((c, depth + 1));
                }
            }
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph md_tree {\n");
        for (id, node) in self.nodes.iter().enumerate() {
            let label = match node.label {
                NodeLabel::Leaf(v) => v.to_string(),
                l => format!("{} [{}]", l.tag(), join(&node.vertices)),
            };
            let _ = writeln!(out, "  n{id} [label=\"{label}\"];");
        }
        for (id, node) in self.nodes.iter().enumerate() {
            for &c in &node.children {
                let _ = writeln!(out, "  n{id} -- n{c};");
            }
        }
        out.push_str("}\n");
        out
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Adjacency in compressed rows: the neighbours of `x` are
/// `nbr[start[x]..start[x + 1]]`.
struct Csr {
    start: Vec<u32>,
    nbr: Vec<u32>,
}

impl Csr {
    fn len(&self) -> usize {
        self.start.len() - 1
    }

    fn row(&self, x: usize) -> &[u32] {
        &self.nbr[self.start[x] as usize..self.start[x + 1] as usize]
    }

    fn degree(&self, x: usize) -> usize {
        (self.start[x + 1] - self.start[x]) as usize
    }
}

/// Induced subgraph with local ids; `verts[i]` is the global id of local `i`
/// and `verts` is ascending.
struct Sub {
    verts: Vec<usize>,
    adj: Csr,
}

impl Sub {
    /// Sub-subgraph on the ascending local ids `part`.
    fn restrict(&self, part: &[u32], scratch: &mut [u32]) -> Sub {
        for (i, &x) in part.iter().enumerate() {
            scratch[x as usize] = i as u32;
        }
        let mut start = Vec::with_capacity(part.len() + 1);
        let mut nbr = Vec::new();
        start.push(0);
        for &x in part {
            for &y in self.adj.row(x as usize) {
                let j = scratch[y as usize];
                if (j as usize) < part.len() && part[j as usize] == y {
                    nbr.push(j);
                }
            }
            start.push(nbr.len() as u32);
        }
        Sub {
            verts: part.iter().map(|&x| self.verts[x as usize]).collect(),
            adj: Csr { start, nbr },
        }
    }
}

/// Computes the modular decomposition tree of `g`.
pub fn decompose(g: &Graph) -> MdTree {
    let n = g.n();
    if n == 0 {
        return MdTree::default();
    }
    assert!(
        n < u32::MAX as usize,
        "graph too large for 32-bit vertex ids"
    );
    let mut start = Vec::with_capacity(n + 1);
    let mut nbr = Vec::with_capacity(2 * g.m());
    start.push(0);
    for v in 0..n {
        nbr.extend(g.neighbors(v).iter().map(|&u| u as u32));
        start.push(nbr.len() as u32);
    }
    let root = Sub {
        verts: (0..n).collect(),
        adj: Csr { start, nbr },
    };

    // Built in discovery order, renumbered into preorder at the end.
    let mut raw: Vec<MdNode> = Vec::new();
    let mut scratch = vec![u32::MAX; n];
    let mut stack: Vec<(Sub, Option<usize>)> = vec![(root, None)];
    while let Some((sub, parent)) = stack.pop() {
        let id = raw.len();
        if let Some(p) = parent {
            raw[p].children.push(id);
        }
        let (label, parts) = split(&sub);
        raw.push(MdNode {
            label,
            children: Vec::with_capacity(parts.len()),
            vertices: Vec::new(),
        });
        for part in parts {
            if let [x] = part[..] {
                let v = sub.verts[x as usize];
                let leaf = raw.len();
                raw[id].children.push(leaf);
                raw.push(MdNode {
                    label: NodeLabel::Leaf(v),
                    children: Vec::new(),
                    vertices: vec![v],
                });
            } else {
                stack.push((sub.restrict(&part, &mut scratch), Some(id)));
            }
        }
        raw[id].vertices = sub.verts;
    }

    // Canonical preorder with children sorted by smallest vertex.
    for i in 0..raw.len() {
        let mut ch = std::mem::take(&mut raw[i].children);
        ch.sort_by_key(|&c| raw[c].vertices[0]);
        raw[i].children = ch;
    }
    let mut order = Vec::with_capacity(raw.len());
    let mut dfs = vec![0usize];
    while let Some(id) = dfs.pop() {
        order.push(id);
        dfs.extend(raw[id].children.iter().rev());
    }
    let mut new_id = vec![0; raw.len()];
    for (i, &old) in order.iter().enumerate() {
        new_id[old] = i;
    }
    let mut slots: Vec<Option<MdNode>> = raw.into_iter().map(Some).collect();
    let nodes = order
        .iter()
        .map(|&old| {
            let mut node = slots[old].take().unwrap();
            for c in node.children.iter_mut() {
                *c = new_id[*c];
            }
            node
        })
        .collect();
    MdTree { nodes }
}

/// Label of the module `sub` and its maximal strong submodules (local ids,
/// each ascending).
fn split(sub: &Sub) -> (NodeLabel, Vec<Vec<u32>>) {
    let n = sub.verts.len();
    if n == 1 {
        return (NodeLabel::Leaf(sub.verts[0]), Vec::new());
    }
    let comps = components(&sub.adj);
    if comps.len() > 1 {
        return (NodeLabel::Parallel, comps);
    }
    let cocomps = co_components(&sub.adj);
    if cocomps.len() > 1 {
        return (NodeLabel::Series, cocomps);
    }
    (NodeLabel::Prime, prime_children(&sub.adj))
}

fn components(adj: &Csr) -> Vec<Vec<u32>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s as u32);
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &u in adj.row(v as usize) {
                if !seen[u as usize] {
                    seen[u as usize] = true;
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Connected components of the complement, in `O(n + m)`.
fn co_components(adj: &Csr) -> Vec<Vec<u32>> {
    let n = adj.len();
    let mut unvisited: Vec<u32> = (0..n as u32).rev().collect();
    let mut keep = Vec::with_capacity(n);
    let mut mark = vec![u32::MAX; n];
    let mut out = Vec::new();
    let mut queue = Vec::new();
    while let Some(s) = unvisited.pop() {
        let mut comp = vec![s];
        queue.push(s);
        while let Some(u) = queue.pop() {
            for &w in adj.row(u as usize) {
                mark[w as usize] = u;
            }
            keep.clear();
            for w in unvisited.drain(..) {
                if mark[w as usize] == u {
                    keep.push(w);
                } else {
                    comp.push(w);
                    queue.push(w);
                }
            }
            std::mem::swap(&mut unvisited, &mut keep);
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort_by_key(|c| c[0]);
    out
}

/// Children of a prime module given by its (connected, co-connected)
/// adjacency.
fn prime_children(adj: &Csr) -> Vec<Vec<u32>> {
    let n = adj.len();
    let v = (0..n).min_by_key(|&x| (adj.degree(x), x)).unwrap();
    let parts = maximal_modules_avoiding(adj, v);
    let p = parts.len();

    let mut part_of = vec![usize::MAX; n];
    for (i, part) in parts.iter().enumerate() {
        for &x in part {
            part_of[x as usize] = i;
        }
    }

    // Quotient adjacency through one representative per part.
    let mut stamp = vec![usize::MAX; p];
    let quot: Vec<Vec<usize>> = parts
        .iter()
        .enumerate()
        .map(|(i, part)| {
            let mut out = Vec::new();
            for &u in adj.row(part[0] as usize) {
                let q = part_of[u as usize];
                if q != usize::MAX && q != i && stamp[q] != i {
                    stamp[q] = i;
                    out.push(q);
                }
            }
            out
        })
        .collect();
    let mut near_v = vec![false; p];
    let mut v_parts: Vec<usize> = adj.row(v).iter().map(|&u| part_of[u as usize]).collect();
    for &q in &v_parts {
        near_v[q] = true;
    }
    v_parts.sort_unstable();
    v_parts.dedup();

    // X -> Y whenever Y is adjacent to exactly one of X and v.
    stamp.iter_mut().for_each(|s| *s = usize::MAX);
    let forcing: Vec<Vec<usize>> = (0..p)
        .map(|i| {
            let mut out = Vec::new();
            for &q in &quot[i] {
                stamp[q] = i;
                if !near_v[q] {
                    out.push(q);
                }
            }
            for &q in &v_parts {
                if q != i && stamp[q] != i {
                    out.push(q);
                }
            }
            out
        })
        .collect();

    let scc = strongly_connected(&forcing);
    let count = scc.iter().copied().max().map_or(0, |c| c + 1);
    let mut has_incoming = vec![false; count];
    for (x, outs) in forcing.iter().enumerate() {
        for &y in outs {
            if scc[x] != scc[y] {
                has_incoming[scc[y]] = true;
            }
        }
    }
    let sources: Vec<usize> = (0..count).filter(|&c| !has_incoming[c]).collect();
    debug_assert_eq!(
        sources.len(),
        1,
        "forcing digraph must have one source component"
    );
    let top = sources[0];

    let mut children = Vec::new();
    let mut holder = vec![v as u32];
    for (i, part) in parts.into_iter().enumerate() {
        if scc[i] == top {
            children.push(part);
        } else {
            holder.extend(part);
        }
    }
    holder.sort_unstable();
    children.push(holder);
    children.sort_by_key(|c| c[0]);
    debug_assert!(children.len() >= 4);
    children
}

/// Partition of `V \ {v}` into the maximal modules not containing `v`, by
/// vertex partition refinement.
fn maximal_modules_avoiding(adj: &Csr, v: usize) -> Vec<Vec<u32>> {
    let n = adj.len();
    const NONE: usize = usize::MAX;

    let mut is_nbr = vec![false; n];
    for &u in adj.row(v) {
        is_nbr[u as usize] = true;
    }
    let mut order: Vec<usize> = Vec::with_capacity(n - 1);
    order.extend((0..n).filter(|&x| x != v && is_nbr[x]));
    let cut = order.len();
    order.extend((0..n).filter(|&x| x != v && !is_nbr[x]));

    let mut pos = vec![NONE; n];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    let mut part_of = vec![NONE; n];
    // (start, end) ranges into `order`; `fill` tracks the marked prefix.
    let mut ranges: Vec<(usize, usize)> = Vec::new();
    for (s, e) in [(0, cut), (cut, order.len())] {
        if s < e {
            let id = ranges.len();
            ranges.push((s, e));
            for &x in &order[s..e] {
                part_of[x] = id;
            }
        }
    }
    let mut fill: Vec<usize> = ranges.iter().map(|r| r.0).collect();

    let mut queue: VecDeque<usize> = order.iter().copied().collect();
    let mut queued = vec![true; n];
    queued[v] = false;
    let mut touched = Vec::new();

    while let Some(w) = queue.pop_front() {
        queued[w] = false;
        let own = part_of[w];
        for &u in adj.row(w) {
            let u = u as usize;
            if u == v {
                continue;
            }
            let p = part_of[u];
            if p == own {
                continue;
            }
            if fill[p] == ranges[p].0 {
                touched.push(p);
            }
            let slot = fill[p];
            let other = order[slot];
            order.swap(slot, pos[u]);
            pos[other] = pos[u];
            pos[u] = slot;
            fill[p] += 1;
        }
        for p in touched.drain(..) {
            let (s, e) = ranges[p];
            let mid = fill[p];
            fill[p] = s;
            if mid == e {
                continue;
            }
            let q = ranges.len();
            ranges.push((s, mid));
            fill.push(s);
            ranges[p] = (mid, e);
            fill[p] = mid;
            for &x in &order[s..mid] {
                part_of[x] = q;
            }
            for &x in &order[s..e] {
                if !queued[x] {
                    queued[x] = true;
                    queue.push_back(x);
                }
            }
        }
    }

    let mut parts: Vec<Vec<u32>> = ranges
        .iter()
        .map(|&(s, e)| {
            let mut part: Vec<u32> = order[s..e].iter().map(|&x| x as u32).collect();
            part.sort_unstable();
            part
        })
        .collect();
    parts.sort_by_key(|p| p[0]);
    parts
}

/// Tarjan's algorithm, iterative. Returns the component id of every vertex.
fn strongly_connected(graph: &[Vec<usize>]) -> Vec<usize> {
    let n = graph.len();
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSET; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;
    let mut call: Vec<(usize, usize)> = Vec::new();

    for s in 0..n {
        if index[s] != UNSET {
            continue;
        }
        call.push((s, 0));
        index[s] = next_index;
        low[s] = next_index;
        next_index += 1;
        stack.push(s);
        on_stack[s] = true;
        while let Some(&mut (x, ref mut i)) = call.last_mut() {
            if *i < graph[x].len() {
                let y = graph[x][*i];
                *i += 1;
                if index[y] == UNSET {
                    index[y] = next_index;
                    low[y] = next_index;
                    next_index += 1;
                    stack.push(y);
                    on_stack[y] = true;
                    call.push((y, 0));
                } else if on_stack[y] {
                    low[x] = low[x].min(index[y]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[x]);
                }
                if low[x] == index[x] {
                    loop {
                        let y = stack.pop().unwrap();
                        on_stack[y] = false;
                        comp[y] = next_comp;
                        if y == x {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
    }
    comp
}

/// The Q-partition: all leaf children of a P or S node form one part, every
/// other vertex is a singleton. Parts are ascending and ordered by their
/// smallest vertex.
pub fn q_partition(t: &MdTree) -> Vec<Vec<usize>> {
    let mut parts = Vec::new();
    for (id, node) in t.nodes().iter().enumerate() {
        match node.label {
            NodeLabel::Leaf(v) if id == 0 => parts.push(vec![v]),
            NodeLabel::Leaf(_) => {}
            NodeLabel::Prime => parts.extend(t.leaf_children(id).into_iter().map(|v| vec![v])),
            NodeLabel::Parallel | NodeLabel::Series => {
                let leaves = t.leaf_children(id);
                if !leaves.is_empty() {
                    parts.push(leaves);
                }
            }
        }
    }
    parts.sort_by_key(|p| p[0]);
    parts
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QKind {
    /// A single vertex.
    U,
    /// Two or more pairwise non-adjacent twins.
    P,
    /// Two or more pairwise adjacent twins.
    S,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QVertex {
    pub kind: QKind,
    pub members: Vec<usize>,
}

/// Quotient of a graph by a congruence partition; vertex `i` of `graph` is
/// `parts[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    pub parts: Vec<QVertex>,
    pub graph: Graph,
}

impl QuotientGraph {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, part) in self.parts.iter().enumerate() {
            let nbrs: Vec<String> = self
                .graph
                .neighbors(i)
                .iter()
                .map(|j| j.to_string())
                .collect();
            let _ = writeln!(
                out,
                "{i} {:?} [{}] -> {}",
                part.kind,
                join(&part.members),
                nbrs.join(" ")
            );
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph quotient {\n");
        for (i, part) in self.parts.iter().enumerate() {
            let _ = writeln!(
                out,
                "  q{i} [label=\"{:?} [{}]\"];",
                part.kind,
                join(&part.members)
            );
        }
        for (a, b) in self.graph.edges() {
            let _ = writeln!(out, "  q{a} -- q{b};");
        }
        out.push_str("}\n");
        out
    }
}

/// Builds `G / parts`. Parts must partition `V(g)` into modules; a part of
/// two or more vertices must be independent (P-vertex) or a clique
/// (S-vertex).
pub fn quotient_graph(g: &Graph, parts: &[Vec<usize>]) -> Result<QuotientGraph> {
    let n = g.n();
    let mut part_of = vec![usize::MAX; n];
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::Invariant(format!("part {i} is empty")));
        }
        for &v in part {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if part_of[v] != usize::MAX {
                return Err(Error::Invariant(format!("vertex {v} lies in two parts")));
            }
            part_of[v] = i;
        }
    }
    if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
        return Err(Error::Invariant(format!("vertex {v} is in no part")));
    }

    let mut qverts = Vec::with_capacity(parts.len());
    for part in parts {
        if !g.is_module(part) {
            return Err(Error::Invariant(format!(
                "part [{}] is not a module",
                join(part)
            )));
        }
        let kind = if part.len() == 1 {
            QKind::U
        } else if g.is_independent(part) {
            QKind::P
        } else if g.is_clique(part) {
            QKind::S
        } else {
            return Err(Error::Invariant(format!(
                "part [{}] is neither independent nor a clique",
                join(part)
            )));
        };
        let mut members = part.clone();
        members.sort_unstable();
        qverts.push(QVertex { kind, members });
    }

    let mut stamp = vec![usize::MAX; parts.len()];
    let adj = qverts
        .iter()
        .enumerate()
        .map(|(i, q)| {
            let mut out = Vec::new();
            for &u in g.neighbors(q.members[0]) {
                let j = part_of[u];
                if j != i && stamp[j] != i {
                    stamp[j] = i;
                    out.push(j);
                }
            }
            out
        })
        .collect();
    Ok(QuotientGraph {
        parts: qverts,
        graph: Graph::from_adjacency(adj),
    })
}

/// `G_Q` straight from a graph.
pub fn q_quotient(g: &Graph) -> QuotientGraph {
    let tree = decompose(g);
    quotient_graph(g, &q_partition(&tree)).expect("Q-partition parts are modules")
}

/// `(|U|, |P|, |S|)`.
pub fn count_kinds(q: &QuotientGraph) -> (usize, usize, usize) {
    q.parts
        .iter()
        .fold((0, 0, 0), |(u, p, s), part| match part.kind {
            QKind::U => (u + 1, p, s),
            QKind::P => (u, p + 1, s),
            QKind::S => (u, p, s + 1),
        })
}

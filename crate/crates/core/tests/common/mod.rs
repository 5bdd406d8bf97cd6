//! Independent reference implementations used by the integration tests.
//! Everything here works on bitmask graphs (n <= 16) and shares no code path
//! with the library algorithms it checks.

#![allow(dead_code)]

use std::collections::HashSet;

use mced::md::{MdShape, NodeLabel};
use mced::Graph;
use rand::Rng;

/// Bitmask adjacency; `adj[v]` has bit `u` set iff `uv` is an edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bits {
    pub n: usize,
    pub adj: Vec<u32>,
}

impl Bits {
    pub fn from_graph(g: &Graph) -> Bits {
        assert!(g.n() <= 16);
        let mut adj = vec![0u32; g.n()];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Bits { n: g.n(), adj }
    }

    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u] >> v & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, edges).unwrap()
    }

    pub fn has(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn toggle(&mut self, u: usize, v: usize) {
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
    }

    fn full(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    pub fn is_module(&self, m: u32) -> bool {
        (0..self.n)
            .filter(|&w| m >> w & 1 == 0)
            .all(|w| self.adj[w] & m == 0 || self.adj[w] & m == m)
    }

    pub fn connected(&self, set: u32, complement: bool) -> bool {
        if set == 0 {
            return true;
        }
        let start = set.trailing_zeros() as usize;
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nbrs = if complement {
                !self.adj[v] & !(1 << v)
            } else {
                self.adj[v]
            } & set
                & !seen;
            seen |= nbrs;
            frontier |= nbrs;
        }
        seen == set
    }

    /// Brute-force modular decomposition: enumerate every module, keep the
    /// strong ones, and nest them by containment.
    pub fn md_shape(&self) -> Option<MdShape> {
        if self.n == 0 {
            return None;
        }
        let full = self.full();
        let modules: Vec<u32> = (1..=full).filter(|&m| self.is_module(m)).collect();
        let strong: Vec<u32> = modules
            .iter()
            .copied()
            .filter(|&a| {
                modules
                    .iter()
                    .all(|&b| a & b == 0 || a & b == a || a & b == b)
            })
            .collect();
        Some(self.shape_of(full, &strong))
    }

    fn shape_of(&self, x: u32, strong: &[u32]) -> MdShape {
        if x.count_ones() == 1 {
            return MdShape::Leaf(x.trailing_zeros() as usize);
        }
        let inside: Vec<u32> = strong
            .iter()
            .copied()
            .filter(|&s| s != x && s & x == s)
            .collect();
        let mut children: Vec<u32> = inside
            .iter()
            .copied()
            .filter(|&s| !inside.iter().any(|&t| t != s && t & s == s))
            .collect();
        children.sort_by_key(|c| c.trailing_zeros());
        let label = if !self.connected(x, false) {
            NodeLabel::Parallel
        } else if !self.connected(x, true) {
            NodeLabel::Series
        } else {
            NodeLabel::Prime
        };
        MdShape::Node(
            label,
            children.iter().map(|&c| self.shape_of(c, strong)).collect(),
        )
    }

    fn induces(&self, vs: &[usize], edges: usize) -> bool {
        let mut count = 0;
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                count += self.has(vs[i], vs[j]) as usize;
            }
        }
        count == edges
    }

    fn degree_in(&self, v: usize, vs: &[usize]) -> usize {
        vs.iter().filter(|&&u| u != v && self.has(u, v)).count()
    }

    /// Does `vs` (4 vertices) induce a P4?
    pub fn is_p4(&self, vs: &[usize]) -> bool {
        if !self.induces(vs, 3) {
            return false;
        }
        let mut degs: Vec<usize> = vs.iter().map(|&v| self.degree_in(v, vs)).collect();
        degs.sort();
        degs == [1, 1, 2, 2]
    }

    /// Does `vs` (4 vertices) induce a paw?
    pub fn is_paw(&self, vs: &[usize]) -> bool {
        if !self.induces(vs, 4) {
            return false;
        }
        let mut degs: Vec<usize> = vs.iter().map(|&v| self.degree_in(v, vs)).collect();
        degs.sort();
        degs == [1, 2, 2, 3]
    }

    /// Does `vs` induce a complete graph minus exactly one edge?
    pub fn is_k_minus_e(&self, vs: &[usize]) -> bool {
        let r = vs.len();
        self.induces(vs, r * (r - 1) / 2 - 1)
    }

    /// Naive scan of every 4-subset and (l+2)-subset for an induced P4, paw
    /// or K_{l+2} - e.
    pub fn has_forbidden(&self, l: usize) -> bool {
        let verts: Vec<usize> = (0..self.n).collect();
        for sub in subsets(&verts, 4) {
            if self.is_p4(&sub) || self.is_paw(&sub) {
                return true;
            }
        }
        let found = subsets(&verts, l + 2).any(|sub| self.is_k_minus_e(&sub));
        found
    }

    /// Components as bitmasks.
    pub fn components(&self) -> Vec<u32> {
        let mut rest = self.full();
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let mut seen = 1u32 << start;
            let mut frontier = seen;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let nbrs = self.adj[v] & !seen;
                seen |= nbrs;
                frontier |= nbrs;
            }
            out.push(seen);
            rest &= !seen;
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Canonical form: lexicographically smallest adjacency word over all
    /// vertex orders that sort degrees descending.
    pub fn canonical(&self) -> Vec<u32> {
        let n = self.n;
        let deg: Vec<u32> = self.adj.iter().map(|a| a.count_ones()).collect();
        let mut best: Option<Vec<u32>> = None;
        let mut perm = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.canon_rec(&deg, &mut perm, &mut used, &mut best);
        best.unwrap_or_default()
    }

    fn canon_rec(
        &self,
        deg: &[u32],
        perm: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut Option<Vec<u32>>,
    ) {
        let n = self.n;
        if perm.len() == n {
            let mut inv = vec![0; n];
            for (i, &v) in perm.iter().enumerate() {
                inv[v] = i;
            }
            let word: Vec<u32> = perm
                .iter()
                .map(|&v| {
                    let mut row = 0u32;
                    for (u, &iu) in inv.iter().enumerate() {
                        if self.adj[v] >> u & 1 == 1 {
                            row |= 1 << iu;
                        }
                    }
                    row
                })
                .collect();
            if best.as_ref().is_none_or(|b| word < *b) {
                *best = Some(word);
            }
            return;
        }
        let want = (0..n).filter(|&v| !used[v]).map(|v| deg[v]).max().unwrap();
        for v in 0..n {
            if !used[v] && deg[v] == want {
                used[v] = true;
                perm.push(v);
                self.canon_rec(deg, perm, used, best);
                perm.pop();
                used[v] = false;
            }
        }
    }
}

pub fn subsets(items: &[usize], k: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
    let n = items.len();
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out: Vec<usize> = idx.iter().map(|&i| items[i]).collect();
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let ps = pairs(n);
    let count = 1u64 << ps.len();
    (0..count).map(move |mask| {
        Graph::from_edges(
            n,
            ps.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p),
        )
        .unwrap()
    })
}

/// One representative of every isomorphism class on `n` vertices (n <= 7),
/// generated by extending the classes on `n - 1` vertices in every way.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let mut level: Vec<Bits> = vec![Bits {
        n: 0,
        adj: Vec::new(),
    }];
    for size in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nbrs in 0u32..(1 << (size - 1)) {
                let mut adj = g.adj.clone();
                for (u, a) in adj.iter_mut().enumerate() {
                    if nbrs >> u & 1 == 1 {
                        *a |= 1 << (size - 1);
                    }
                }
                adj.push(nbrs);
                let h = Bits { n: size, adj };
                if seen.insert(h.canonical()) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level.iter().map(|b| b.to_graph()).collect()
}

pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<(usize, usize)> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Random graph on `lo..=hi` vertices with a random edge density.
pub fn random_small_graph<R: Rng>(lo: usize, hi: usize, rng: &mut R) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let p = rng.gen_range(0.05..0.95);
    random_graph(n, p, rng)
}

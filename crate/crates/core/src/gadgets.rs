//! Instance generators: the blow-up gadget that turns cluster editing into
//! ℓ-clique editing, random graphs, and planted instances with a known
//! upper bound on the edit distance. Also an exact subset DP for optimum
//! editing costs on graphs of up to 16 vertices, used to check gadgets.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{DenseGraph, Target};

/// Name of the generator algorithm, recorded in instance headers.
pub const PRNG_NAME: &str = "chacha8";

/// Placement of gadget vertices: copy `p` (1-based) of source vertex `i` is
/// gadget vertex `i·ℓ + p − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetMap {
    pub l: usize,
    pub n: usize,
}

impl GadgetMap {
    pub fn forward(&self, i: usize, p: usize) -> usize {
        assert!(i < self.n && (1..=self.l).contains(&p));
        i * self.l + p - 1
    }

    pub fn backward(&self, v: usize) -> (usize, usize) {
        (v / self.l, v % self.l + 1)
    }
}

/// Replaces every vertex by an ℓ-clique and every edge `ij` by all pairs
/// between the two cliques whose copies differ. Copies with equal index stay
/// independent, so the result is ℓ-partite.
pub fn build_kl_gadget(g: &Graph, l: usize) -> Result<(Graph, GadgetMap)> {
    if l < 2 {
        return Err(Error::Invariant("ℓ must be at least 2".into()));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::Invariant(format!(
            "vertex {v} is an isolated component"
        )));
    }
    let map = GadgetMap { l, n: g.n() };
    let mut edges = Vec::new();
    for i in 0..g.n() {
        for p in 1..=l {
            for q in p + 1..=l {
                edges.push((map.forward(i, p), map.forward(i, q)));
            }
        }
    }
    for (i, j) in g.edges() {
        for p in 1..=l {
            for q in 1..=l {
                if p != q {
                    edges.push((map.forward(i, p), map.forward(j, q)));
                }
            }
        }
    }
    Ok((Graph::from_edges(g.n() * l, edges)?, map))
}

/// Largest graph `exact_optimum` accepts.
pub const EXACT_MAX_VERTICES: usize = 16;

/// Minimum number of edits turning `g` into a `target` graph, by dynamic
/// programming over vertex subsets: each block of the final partition is
/// priced as a clique or as a complete multipartite graph, and every edge
/// between blocks is deleted. Runs in `O(ℓ·3^n)`.
pub fn exact_optimum(g: &Graph, target: Target) -> Result<usize> {
    let n = g.n();
    if n > EXACT_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "{n} vertices, exact optimum supports at most {EXACT_MAX_VERTICES}"
        )));
    }
    let full = (1usize << n) - 1;
    let mut row = vec![0u32; n];
    for (u, v) in g.edges() {
        row[u] |= 1 << v;
        row[v] |= 1 << u;
    }
    // Edges inside every subset.
    let mut e = vec![0i64; full + 1];
    for s in 1..=full {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        e[s] = e[rest] + (row[v] as usize & rest).count_ones() as i64;
    }
    let pairs = |s: usize| {
        let c = s.count_ones() as i64;
        c * (c - 1) / 2
    };
    let classes = match target {
        Target::Cluster => None,
        Target::LCluster(l) | Target::KlCluster(l) => Some(l),
        Target::Bicluster => Some(2),
    };
    let allow_clique = matches!(target, Target::Cluster | Target::LCluster(_));

    // Cost of a class C inside a multipartite block, up to the block's
    // constant C(|B|,2) − e(B): 2e(C) − C(|C|,2).
    let multipartite = classes.map(|l| {
        let w: Vec<i64> = (0..=full).map(|s| 2 * e[s] - pairs(s)).collect();
        // best[j][s]: split s into at most j + 1 classes.
        let mut best = vec![w.clone()];
        for _ in 1..l {
            let prev = best.last().unwrap();
            let mut cur = prev.clone();
            for s in 1..=full {
                let low = s & s.wrapping_neg();
                let rest = s ^ low;
                let mut sub = rest;
                loop {
                    let c = sub | low;
                    if c != s {
                        cur[s] = cur[s].min(w[c] + prev[s ^ c]);
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & rest;
                }
            }
            best.push(cur);
        }
        (w, best)
    });

    // Internal cost of a block minus its own edges (those are counted once
    // in m and must not also be deleted as cut edges).
    let mut block = vec![i64::MAX; full + 1];
    for s in 1..=full {
        let base = pairs(s) - e[s];
        let mut cost = i64::MAX;
        if allow_clique || s.count_ones() == 1 {
            cost = base;
        }
        if let Some((w, best)) = &multipartite {
            if s.count_ones() >= 2 {
                // At least two non-empty classes keep the block connected.
                let low = s & s.wrapping_neg();
                let rest = s ^ low;
                let lower = &best[best.len() - 2];
                let mut sub = rest;
                loop {
                    let c = sub | low;
                    if c != s {
                        cost = cost.min(base + w[c] + lower[s ^ c]);
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & rest;
                }
            }
        }
        block[s] = if cost == i64::MAX {
            i64::MAX
        } else {
            cost - e[s]
        };
    }

    let mut f = vec![i64::MAX; full + 1];
    f[0] = 0;
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut sub = rest;
        loop {
            let b = sub | low;
            if block[b] != i64::MAX && f[s ^ b] != i64::MAX {
                f[s] = f[s].min(block[b] + f[s ^ b]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok((f[full] + g.m() as i64) as usize)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetCheck {
    pub opt_cluster: usize,
    pub opt_gadget: usize,
    pub ratio_ok: bool,
}

/// Compares the cluster editing optimum of `g` with the ℓ-clique editing
/// optimum of its gadget; they should differ by a factor of exactly ℓ(ℓ−1).
pub fn check_gadget_optimum(g: &Graph, l: usize) -> Result<GadgetCheck> {
    if g.n() * l > EXACT_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "gadget would have {} vertices, at most {EXACT_MAX_VERTICES} supported",
            g.n() * l
        )));
    }
    let (gadget, _) = build_kl_gadget(g, l)?;
    let opt_cluster = exact_optimum(g, Target::Cluster)?;
    let opt_gadget = exact_optimum(&gadget, Target::KlCluster(l))?;
    Ok(GadgetCheck {
        opt_cluster,
        opt_gadget,
        ratio_ok: opt_gadget == l * (l - 1) * opt_cluster,
    })
}

/// Every minimum edit set (as sorted pair lists) turning `g` into a
/// `target` graph, for optima up to `max_k`. Exhaustive; small graphs only.
pub fn minimum_solutions(
    g: &Graph,
    target: Target,
    max_k: usize,
) -> Result<Vec<Vec<(usize, usize)>>> {
    let n = g.n();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut dense = DenseGraph::from_graph(g)?;
    for size in 0..=max_k.min(pairs.len()) {
        let mut found = Vec::new();
        collect(
            &mut dense,
            &pairs,
            0,
            size,
            &mut Vec::new(),
            target,
            &mut found,
        );
        if !found.is_empty() {
            return Ok(found);
        }
    }
    Ok(Vec::new())
}

fn collect(
    g: &mut DenseGraph,
    pairs: &[(usize, usize)],
    from: usize,
    left: usize,
    chosen: &mut Vec<(usize, usize)>,
    target: Target,
    found: &mut Vec<Vec<(usize, usize)>>,
) {
    if left == 0 {
        if g.is_target(target) {
            found.push(chosen.clone());
        }
        return;
    }
    for i in from..=pairs.len() - left {
        let (u, v) = pairs[i];
        g.toggle(u, v);
        chosen.push((u, v));
        collect(g, pairs, i + 1, left - 1, chosen, target, found);
        chosen.pop();
        g.toggle(u, v);
    }
}

/// Erdős–Rényi graph `G(n, p)`, reproducible per seed. Uses geometric
/// skipping, so the cost is proportional to the number of edges.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Graph {
    assert!(
        (0.0..=1.0).contains(&p),
        "edge probability must lie in [0, 1]"
    );
    if p >= 1.0 {
        return Graph::complete(n);
    }
    let mut edges = Vec::new();
    if p > 0.0 && n >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let log_q = (1.0 - p).ln();
        let (mut u, mut v): (usize, i64) = (1, -1);
        while u < n {
            let r: f64 = rng.gen::<f64>();
            v += 1 + ((1.0 - r).ln() / log_q).floor() as i64;
            while u < n && v >= u as i64 {
                v -= u as i64;
                u += 1;
            }
            if u < n {
                edges.push((v as usize, u));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated pairs are distinct")
}

/// Planted instance: `sizes.len()` components, each a random clique or a
/// random complete r-partite graph (2 ≤ r ≤ ℓ), vertex labels shuffled, then
/// exactly `noise_edits` distinct random pairs toggled. The optimum is at
/// most `noise_edits`, which is returned alongside the graph.
pub fn gen_planted(
    num_clusters: usize,
    sizes: &[usize],
    l: usize,
    noise_edits: usize,
    seed: u64,
) -> Result<(Graph, usize)> {
    if sizes.len() != num_clusters {
        return Err(Error::Invariant(format!(
            "{num_clusters} clusters but {} sizes",
            sizes.len()
        )));
    }
    if sizes.contains(&0) {
        return Err(Error::Invariant("cluster sizes must be positive".into()));
    }
    if l < 2 {
        return Err(Error::Invariant("ℓ must be at least 2".into()));
    }
    let n: usize = sizes.iter().sum();
    let total_pairs = n * n.saturating_sub(1) / 2;
    if noise_edits > total_pairs {
        return Err(Error::Invariant(format!(
            "{noise_edits} noise edits but only {total_pairs} vertex pairs"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut rng);

    let mut edges = HashSet::new();
    let mut start = 0;
    for &s in sizes {
        let members = &label[start..start + s];
        start += s;
        let r = if s >= 2 && rng.gen_bool(0.5) {
            rng.gen_range(2..=l.min(s))
        } else {
            s
        };
        // Class of each member; every class gets at least one vertex.
        let mut class: Vec<usize> = (0..s)
            .map(|i| if i < r { i } else { rng.gen_range(0..r) })
            .collect();
        class.shuffle(&mut rng);
        for i in 0..s {
            for j in i + 1..s {
                if class[i] != class[j] {
                    let (a, b) = (members[i], members[j]);
                    edges.insert((a.min(b), a.max(b)));
                }
            }
        }
    }

    let mut toggled = HashSet::new();
    while toggled.len() < noise_edits {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            toggled.insert((a.min(b), a.max(b)));
        }
    }
    for p in toggled {
        if !edges.remove(&p) {
            edges.insert(p);
        }
    }
    let mut edges: Vec<(usize, usize)> = edges.into_iter().collect();
    edges.sort_unstable();
    Ok((Graph::from_edges(n, edges)?, noise_edits))
}

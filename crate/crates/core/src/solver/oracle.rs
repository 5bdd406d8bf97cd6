//! Brute-force ground truth. Enumerates edit sets by increasing size over a
//! bitmask copy of the graph and checks the result with its own structural
//! test, independent of the decomposition-based recognizer.

use crate::error::{Error, Result};
use crate::graph::{Edit, EditSet, Graph};
use crate::kernel::WeightedQuotientInstance;

/// Target graph class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// Every component a clique or a complete multipartite graph with at
    /// most ℓ classes.
    LCluster(usize),
    /// Every component a clique.
    Cluster,
    /// Every component complete bipartite or a single vertex.
    Bicluster,
    /// Every component complete multipartite with at most ℓ classes
    /// (single vertices included).
    KlCluster(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Refuse instances with more vertex pairs than this when `k > max_k`.
    pub max_pairs: usize,
    pub max_k: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_pairs: 28,
            max_k: 4,
        }
    }
}

/// Dense bitmask graph, n ≤ 64.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseGraph {
    adj: Vec<u64>,
}

impl DenseGraph {
    pub fn from_graph(g: &Graph) -> Result<DenseGraph> {
        if g.n() > 64 {
            return Err(Error::TooLarge(format!(
                "{} vertices, at most 64 supported",
                g.n()
            )));
        }
        let mut adj = vec![0u64; g.n()];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(DenseGraph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn toggle(&mut self, u: usize, v: usize) {
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
    }

    pub fn is_target(&self, target: Target) -> bool {
        let n = self.n();
        let mut rest: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.adj[v] & !comp;
                comp |= new;
                frontier |= new;
            }
            rest &= !comp;
            if !self.component_ok(comp, target) {
                return false;
            }
        }
        true
    }

    fn component_ok(&self, comp: u64, target: Target) -> bool {
        let size = comp.count_ones() as usize;
        let clique = bits(comp).all(|v| self.adj[v] & comp == comp & !(1 << v));
        // Class of v = vertices of the component not adjacent to v (v included).
        let classes = || {
            let mut seen = 0u64;
            let mut count = 0;
            for v in bits(comp) {
                if seen >> v & 1 == 1 {
                    continue;
                }
                let class = comp & !self.adj[v];
                let consistent =
                    bits(class).all(|u| comp & !self.adj[u] == class && self.adj[u] & class == 0);
                if !consistent {
                    return None;
                }
                seen |= class;
                count += 1;
            }
            Some(count)
        };
        match target {
            Target::Cluster => clique,
            Target::LCluster(l) => clique || classes().is_some_and(|c| c <= l),
            Target::KlCluster(l) => classes().is_some_and(|c| c <= l),
            Target::Bicluster => size == 1 || classes() == Some(2),
        }
    }
}

fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let v = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(v)
        }
    })
}

pub fn is_target_graph(g: &Graph, target: Target) -> Result<bool> {
    Ok(DenseGraph::from_graph(g)?.is_target(target))
}

/// Exhaustive 𝓛-cluster editing with the default limits.
pub fn brute_force_oracle(g: &Graph, l: usize, k: usize) -> Result<Option<EditSet>> {
    brute_force_oracle_with(g, Target::LCluster(l), k, OracleLimits::default())
}

/// Smallest edit set of size at most `k` that turns `g` into a `target`
/// graph, found by trying every set of vertex pairs in order of size.
pub fn brute_force_oracle_with(
    g: &Graph,
    target: Target,
    k: usize,
    limits: OracleLimits,
) -> Result<Option<EditSet>> {
    let n = g.n();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    if pairs.len() > limits.max_pairs && k > limits.max_k {
        return Err(Error::TooLarge(format!(
            "{} vertex pairs with k = {k} (limits: {} pairs or k <= {})",
            pairs.len(),
            limits.max_pairs,
            limits.max_k
        )));
    }
    let mut dense = DenseGraph::from_graph(g)?;
    let mut chosen = Vec::new();
    for size in 0..=k.min(pairs.len()) {
        if choose(&mut dense, &pairs, 0, size, &mut chosen, target) {
            let edits = chosen.iter().map(|&(u, v)| Edit::toggle(g, u, v));
            return Ok(Some(EditSet::from_edits(edits).expect("distinct pairs")));
        }
    }
    Ok(None)
}

fn choose(
    g: &mut DenseGraph,
    pairs: &[(usize, usize)],
    from: usize,
    left: usize,
    chosen: &mut Vec<(usize, usize)>,
    target: Target,
) -> bool {
    if left == 0 {
        return g.is_target(target);
    }
    for i in from..=pairs.len() - left {
        let (u, v) = pairs[i];
        g.toggle(u, v);
        chosen.push((u, v));
        if choose(g, pairs, i + 1, left - 1, chosen, target) {
            return true;
        }
        chosen.pop();
        g.toggle(u, v);
    }
    false
}

/// Minimum number of edits to reach `target`, searching sizes up to
/// `max_k`.
pub fn brute_force_optimum(g: &Graph, target: Target, max_k: usize) -> Result<Option<usize>> {
    let limits = OracleLimits {
        max_pairs: usize::MAX,
        max_k,
    };
    Ok(brute_force_oracle_with(g, target, max_k, limits)?.map(|f| f.len()))
}

/// Weighted editing on a quotient instance by brute force: is there a set of
/// quotient pairs with total weight at most `budget` whose toggling makes the
/// expanded graph a `target` graph? `internal_edges` says whether quotient
/// vertices stand for cliques (true) or independent sets (false).
pub fn weighted_brute_force(
    q: &WeightedQuotientInstance,
    n: usize,
    target: Target,
    budget: u64,
    internal_edges: bool,
) -> Result<bool> {
    let pairs = q.pair_weights();
    let mut quotient = q.graph.clone();
    weighted_rec(
        q,
        n,
        target,
        &pairs,
        0,
        budget,
        &mut quotient,
        internal_edges,
    )
}

#[allow(clippy::too_many_arguments)]
fn weighted_rec(
    q: &WeightedQuotientInstance,
    n: usize,
    target: Target,
    pairs: &[(usize, usize, u64, bool)],
    from: usize,
    budget: u64,
    quotient: &mut Graph,
    internal_edges: bool,
) -> Result<bool> {
    if is_target_graph(&q.expand(quotient, n, internal_edges), target)? {
        return Ok(true);
    }
    for (i, &(a, b, w, _)) in pairs.iter().enumerate().skip(from) {
        if w <= budget {
            quotient.toggle(a, b);
            let found = weighted_rec(
                q,
                n,
                target,
                pairs,
                i + 1,
                budget - w,
                quotient,
                internal_edges,
            )?;
            quotient.toggle(a, b);
            if found {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

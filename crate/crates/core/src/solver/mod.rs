//! Exact bounded search tree for 𝓛-cluster editing.
//!
//! The instance is kernelized once at the root. Every search node asks for a
//! forbidden subgraph H and branches on toggling each vertex pair of H, so a
//! node has at most `(ℓ+2)(ℓ+1)/2` children and the tree has depth at most
//! `k`. A pair toggled on the current path is never toggled back.

mod oracle;
mod order;

pub use oracle::{
    brute_force_optimum, brute_force_oracle, brute_force_oracle_with, is_target_graph,
    weighted_brute_force, DenseGraph, OracleLimits, Target,
};
pub use order::order_edits_lemma2;

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Edit, EditSet, Graph};
use crate::kernel::{kernelize, remove_trivial_components, KernelStats, KernelStatus};
use crate::recognition::{find_forbidden, is_l_cluster_graph};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Explore sibling branches near the root in parallel.
    pub parallel: bool,
    /// Give up with a resource-limit error after this many search nodes.
    pub max_nodes: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Answer {
    Yes(EditSet),
    No,
}

impl Answer {
    pub fn is_yes(&self) -> bool {
        matches!(self, Answer::Yes(_))
    }

    pub fn edits(&self) -> Option<&EditSet> {
        match self {
            Answer::Yes(f) => Some(f),
            Answer::No => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub answer: Answer,
    pub nodes_explored: u64,
    /// Largest number of children of any search node.
    pub max_branching: usize,
    pub kernel_stats: KernelStats,
}

/// Upper bound on the children of a search node: pairs of an (ℓ+2)-set.
pub fn branching_bound(l: usize) -> usize {
    (l + 2) * (l + 1) / 2
}

/// Decides whether at most `k` edits make `g` an 𝓛-cluster graph.
pub fn solve_bounded(g: &Graph, l: usize, k: usize) -> SolveResult {
    solve_bounded_with(g, l, k, &SolveOptions::default()).expect("no node limit set")
}

pub fn solve_bounded_with(
    g: &Graph,
    l: usize,
    k: usize,
    opts: &SolveOptions,
) -> Result<SolveResult> {
    assert!(l >= 2, "ℓ must be at least 2");
    let kernel = kernelize(g, l, k);
    let counters = Counters::new(opts.max_nodes);
    let answer = match &kernel.status {
        KernelStatus::TriviallyYes => Answer::Yes(EditSet::new()),
        KernelStatus::No(_) => Answer::No,
        KernelStatus::Kernel(h) => match search_root(h, l, k, opts.parallel, &counters)? {
            None => Answer::No,
            Some(pairs) => {
                let lifted: Vec<(usize, usize)> = pairs
                    .iter()
                    .map(|&(a, b)| (kernel.vertex_map[a], kernel.vertex_map[b]))
                    .collect();
                let f = to_edit_set(g, &lifted);
                if verify_solution(g, l, &f, k)? {
                    Answer::Yes(f)
                } else {
                    // Truncated twins can make a kernel solution invalid on
                    // the input; solve the untruncated graph to get a
                    // certificate. The kernel already settled the answer.
                    let reduced = remove_trivial_components(g, l);
                    let pairs = search_root(&reduced.graph, l, k, opts.parallel, &counters)?
                        .ok_or_else(|| {
                            Error::Invariant("kernel is a yes-instance but the input is not".into())
                        })?;
                    let lifted: Vec<(usize, usize)> = pairs
                        .iter()
                        .map(|&(a, b)| (reduced.vertex_map[a], reduced.vertex_map[b]))
                        .collect();
                    Answer::Yes(to_edit_set(g, &lifted))
                }
            }
        },
    };
    Ok(SolveResult {
        answer,
        nodes_explored: counters.nodes.load(Ordering::Relaxed),
        max_branching: counters.max_branching.load(Ordering::Relaxed),
        kernel_stats: kernel.stats,
    })
}

/// Smallest `k ≤ max_k` with a solution, and that solution.
pub fn solve_optimal(g: &Graph, l: usize, max_k: usize) -> Result<(usize, EditSet)> {
    solve_optimal_with(g, l, max_k, &SolveOptions::default())
}

pub fn solve_optimal_with(
    g: &Graph,
    l: usize,
    max_k: usize,
    opts: &SolveOptions,
) -> Result<(usize, EditSet)> {
    for k in 0..=max_k {
        if let Answer::Yes(f) = solve_bounded_with(g, l, k, opts)?.answer {
            return Ok((f.len(), f));
        }
    }
    Err(Error::ResourceLimit(format!(
        "no solution with at most {max_k} edits"
    )))
}

/// True iff `f` has at most `k` edits and `g + f` is an 𝓛-cluster graph.
pub fn verify_solution(g: &Graph, l: usize, f: &EditSet, k: usize) -> Result<bool> {
    let h = g.apply_edits(f)?;
    Ok(f.len() <= k && is_l_cluster_graph(&h, l))
}

fn to_edit_set(g: &Graph, pairs: &[(usize, usize)]) -> EditSet {
    let mut pairs = pairs.to_vec();
    pairs.sort_unstable();
    EditSet::from_edits(pairs.into_iter().map(|(a, b)| Edit::toggle(g, a, b)))
        .expect("search never toggles a pair twice")
}

struct Counters {
    nodes: AtomicU64,
    max_branching: AtomicUsize,
    limit: Option<u64>,
    exhausted: AtomicBool,
}

impl Counters {
    fn new(limit: Option<u64>) -> Self {
        Counters {
            nodes: AtomicU64::new(0),
            max_branching: AtomicUsize::new(0),
            limit,
            exhausted: AtomicBool::new(false),
        }
    }

    /// Counts a node; false once the node limit is hit.
    fn visit(&self) -> bool {
        let seen = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.limit.is_some_and(|cap| seen > cap) {
            self.exhausted.store(true, Ordering::Relaxed);
        }
        !self.exhausted.load(Ordering::Relaxed)
    }
}

/// Depth below which branches run on the rayon pool.
const PARALLEL_DEPTH: usize = 2;

struct Search<'a> {
    l: usize,
    parallel: bool,
    counters: &'a Counters,
}

fn search_root(
    g: &Graph,
    l: usize,
    k: usize,
    parallel: bool,
    counters: &Counters,
) -> Result<Option<Vec<(usize, usize)>>> {
    let s = Search {
        l,
        parallel,
        counters,
    };
    let mut g = g.clone();
    let mut path = Vec::new();
    let mut used = HashSet::new();
    let found = s.run(&mut g, k, 0, &mut path, &mut used);
    if counters.exhausted.load(Ordering::Relaxed) {
        return Err(Error::ResourceLimit(format!(
            "search exceeded {} nodes",
            counters.limit.unwrap_or_default()
        )));
    }
    Ok(found)
}

impl Search<'_> {
    fn run(
        &self,
        g: &mut Graph,
        budget: usize,
        depth: usize,
        path: &mut Vec<(usize, usize)>,
        used: &mut HashSet<(usize, usize)>,
    ) -> Option<Vec<(usize, usize)>> {
        if !self.counters.visit() {
            return None;
        }
        let witness = match find_forbidden(g, self.l) {
            None => return Some(path.clone()),
            Some(w) => w,
        };
        if budget == 0 {
            return None;
        }
        let branches: Vec<(usize, usize)> = witness
            .pairs()
            .into_iter()
            .filter(|p| !used.contains(p))
            .collect();
        assert!(
            branches.len() <= branching_bound(self.l),
            "{} branches exceed the bound",
            branches.len()
        );
        self.counters
            .max_branching
            .fetch_max(branches.len(), Ordering::Relaxed);

        if self.parallel && depth < PARALLEL_DEPTH {
            return branches.par_iter().find_map_any(|&(a, b)| {
                let mut g = g.clone();
                let mut path = path.clone();
                let mut used = used.clone();
                g.toggle(a, b);
                path.push((a, b));
                used.insert((a, b));
                self.run(&mut g, budget - 1, depth + 1, &mut path, &mut used)
            });
        }
        for (a, b) in branches {
            g.toggle(a, b);
            path.push((a, b));
            used.insert((a, b));
            let found = self.run(g, budget - 1, depth + 1, path, used);
            used.remove(&(a, b));
            path.pop();
            g.toggle(a, b);
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

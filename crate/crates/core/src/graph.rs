//! Simple undirected graphs over dense vertex ids `0..n`, edition sets, and the
//! plain-text edge-list format.
//!
//! A [`Graph`] is never mutated in place: edits produce a fresh value, so a
//! graph can be shared freely between threads and search branches.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph {
            adj,
            m: n * n.saturating_sub(1) / 2,
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            check_pair(n, u, v)?;
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Invariant(format!(
                    "duplicate edge {} {}",
                    v.min(w[0]),
                    v.max(w[0])
                )));
            }
        }
        Ok(Graph { adj, m })
    }

    /// Builds a graph from adjacency lists that are already symmetric and
    /// loop-free. Lists are sorted here.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut total = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            total += list.len();
        }
        Graph { adj, m: total / 2 }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut out = Vec::with_capacity(n - 1 - self.degree(v));
                let mut it = self.adj[v].iter().peekable();
                for u in 0..n {
                    if it.peek() == Some(&&u) {
                        it.next();
                    } else if u != v {
                        out.push(u);
                    }
                }
                out
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Subgraph induced by `verts`; vertex `i` of the result is `verts[i]`.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&u| (local[u] != usize::MAX).then_some(local[u]))
                    .collect()
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// The graph with the pair `uv` flipped between edge and non-edge.
    pub fn toggled(&self, u: usize, v: usize) -> Graph {
        let mut h = self.clone();
        h.toggle(u, v);
        h
    }

    /// Flips the pair `uv` in place.
    pub fn toggle(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n() && v < self.n(), "bad pair {u} {v}");
        match self.adj[u].binary_search(&v) {
            Ok(i) => {
                self.adj[u].remove(i);
                let j = self.adj[v].binary_search(&u).unwrap();
                self.adj[v].remove(j);
                self.m -= 1;
            }
            Err(i) => {
                self.adj[u].insert(i, v);
                let j = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(j, u);
                self.m += 1;
            }
        }
    }

    /// Returns `G + F`. Every edit is checked against the graph before any is
    /// applied.
    pub fn apply_edits(&self, f: &EditSet) -> Result<Graph> {
        for e in f.iter() {
            check_pair(self.n(), e.u, e.v)?;
            let present = self.has_edge(e.u, e.v);
            match (e.sign, present) {
                (Sign::Delete, false) => {
                    return Err(Error::InvalidEdit {
                        sign: e.sign,
                        u: e.u,
                        v: e.v,
                        reason: "deleted pair is not an edge",
                    })
                }
                (Sign::Add, true) => {
                    return Err(Error::InvalidEdit {
                        sign: e.sign,
                        u: e.u,
                        v: e.v,
                        reason: "added pair is already an edge",
                    })
                }
                _ => {}
            }
        }
        let mut adj = self.adj.clone();
        for e in f.iter() {
            match e.sign {
                Sign::Add => {
                    adj[e.u].push(e.v);
                    adj[e.v].push(e.u);
                }
                Sign::Delete => {
                    adj[e.u].retain(|&x| x != e.v);
                    adj[e.v].retain(|&x| x != e.u);
                }
            }
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Vertex sets of the connected components, each sorted, ordered by their
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// True iff every vertex outside `s` is adjacent to all of `s` or to none
    /// of it.
    pub fn is_module(&self, s: &[usize]) -> bool {
        if s.len() <= 1 {
            return true;
        }
        let mut inside = vec![false; self.n()];
        for &v in s {
            inside[v] = true;
        }
        let mut count = vec![0usize; self.n()];
        for &v in s {
            for &w in &self.adj[v] {
                if !inside[w] {
                    count[w] += 1;
                }
            }
        }
        count.iter().all(|&c| c == 0 || c == s.len())
    }

    pub fn is_clique(&self, s: &[usize]) -> bool {
        let mut inside = vec![false; self.n()];
        for &v in s {
            inside[v] = true;
        }
        s.iter()
            .all(|&v| self.adj[v].iter().filter(|&&u| inside[u]).count() + 1 == s.len())
    }

    pub fn is_independent(&self, s: &[usize]) -> bool {
        let mut inside = vec![false; self.n()];
        for &v in s {
            inside[v] = true;
        }
        s.iter().all(|&v| self.adj[v].iter().all(|&u| !inside[u]))
    }

    /// Canonical edge-list text: `n m`, then edges sorted by `(u, v)`.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn check_pair(n: usize, u: usize, v: usize) -> Result<()> {
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(Error::Invariant(format!("self-loop at vertex {u}")));
    }
    Ok(())
}

/// Parses the edge-list format: a header line `n m` followed by exactly `m`
/// lines `u v`. Blank lines and lines starting with `#` are skipped.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing \"n m\" header".into(),
    })?;
    let (n, m) = parse_two(hline, header)?;

    let mut adj = vec![Vec::new(); n];
    let mut seen = HashSet::with_capacity(m);
    let mut count = 0;
    let mut last_line = hline;
    for (line, l) in lines {
        last_line = line;
        let (u, v) = parse_two(line, l)?;
        if count == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        let err = |message: String| Error::Parse { line, message };
        if u >= n || v >= n {
            return Err(err(format!("vertex out of range (n = {n})")));
        }
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(format!("duplicate edge {} {}", u.min(v), u.max(v))));
        }
        adj[u].push(v);
        adj[v].push(u);
        count += 1;
    }
    if count != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("header declares {m} edges but {count} were given"),
        });
    }
    Ok(Graph::from_adjacency(adj))
}

fn parse_two(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or(Error::Parse {
            line,
            message: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("not a non-negative integer: {tok:?}"),
        })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line,
            message: "expected exactly two integers".into(),
        });
    }
    Ok((a, b))
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_graph(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Add,
    Delete,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Add => Sign::Delete,
            Sign::Delete => Sign::Add,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Add => "+",
            Sign::Delete => "-",
        })
    }
}

/// One signed pair; `u < v` always.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edit {
    pub sign: Sign,
    pub u: usize,
    pub v: usize,
}

impl Edit {
    pub fn new(sign: Sign, a: usize, b: usize) -> Self {
        Edit {
            sign,
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn add(a: usize, b: usize) -> Self {
        Edit::new(Sign::Add, a, b)
    }

    pub fn delete(a: usize, b: usize) -> Self {
        Edit::new(Sign::Delete, a, b)
    }

    /// The edit that flips `uv` in `g`.
    pub fn toggle(g: &Graph, a: usize, b: usize) -> Self {
        let sign = if g.has_edge(a, b) {
            Sign::Delete
        } else {
            Sign::Add
        };
        Edit::new(sign, a, b)
    }

    pub fn pair(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

impl fmt::Display for Edit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.sign, self.u, self.v)
    }
}

/// Ordered edition set in which no pair occurs twice.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EditSet {
    edits: Vec<Edit>,
    pairs: HashSet<(usize, usize)>,
}

impl EditSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_edits<I: IntoIterator<Item = Edit>>(edits: I) -> Result<Self> {
        let mut set = EditSet::new();
        for e in edits {
            set.push(e)?;
        }
        Ok(set)
    }

    pub fn push(&mut self, e: Edit) -> Result<()> {
        if e.u == e.v {
            return Err(Error::Invariant(format!(
                "self-loop edit at vertex {}",
                e.u
            )));
        }
        if !self.pairs.insert(e.pair()) {
            return Err(Error::DuplicateEdit { u: e.u, v: e.v });
        }
        self.edits.push(e);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.edits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edits.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Edit> {
        self.edits.iter()
    }

    pub fn as_slice(&self) -> &[Edit] {
        &self.edits
    }

    pub fn contains_pair(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a.min(b), a.max(b)))
    }

    /// `-F`: every mark flipped, order kept.
    pub fn negate(&self) -> EditSet {
        EditSet {
            edits: self
                .edits
                .iter()
                .map(|e| Edit {
                    sign: e.sign.flipped(),
                    ..*e
                })
                .collect(),
            pairs: self.pairs.clone(),
        }
    }

    /// Relabels every endpoint through `map` (e.g. kernel id to original id).
    pub fn relabel(&self, map: &[usize]) -> Result<EditSet> {
        EditSet::from_edits(
            self.edits
                .iter()
                .map(|e| Edit::new(e.sign, map[e.u], map[e.v])),
        )
    }
}

impl<'a> IntoIterator for &'a EditSet {
    type Item = &'a Edit;
    type IntoIter = std::slice::Iter<'a, Edit>;

    fn into_iter(self) -> Self::IntoIter {
        self.edits.iter()
    }
}

impl fmt::Display for EditSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.edits {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Parses one edit per line, `+ u v` or `- u v`; `#` lines are skipped.
pub fn parse_edit_set(text: &str) -> Result<EditSet> {
    let mut set = EditSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let err = |message: &str| Error::Parse {
            line,
            message: message.to_string(),
        };
        let mut toks = l.split_whitespace();
        let sign = match toks.next() {
            Some("+") => Sign::Add,
            Some("-") => Sign::Delete,
            _ => return Err(err("expected '+' or '-'")),
        };
        let rest: Vec<&str> = toks.collect();
        if rest.len() != 2 {
            return Err(err("expected \"+ u v\" or \"- u v\""));
        }
        let (u, v) = parse_two(line, &rest.join(" "))?;
        if u == v {
            return Err(err("self-loop edit"));
        }
        set.push(Edit::new(sign, u, v)).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
    }
    Ok(set)
}

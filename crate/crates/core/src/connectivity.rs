//! The candidate graph: one vertex per candidate, one edge per connected pair.
//!
//! Two candidates are connected when one vote ranks `a` first and `b` second
//! and another ranks `b` first and `a` second. Only the set of distinct
//! (first, second) pairs matters, so multiplicities and vote order are
//! irrelevant here.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::election::{CandidateId, Election};
use crate::error::{Error, Result};

/// Edge rule used when building a [`ConnectivityGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Edge `{a, b}` iff both `(a, b)` and `(b, a)` occur as top-two pairs.
    #[default]
    Strong,
    /// Edge `{a, b}` iff at least one of `(a, b)`, `(b, a)` occurs as a
    /// top-two pair. This is the single-witness relaxation used for
    /// β-domain style recognition.
    Weak,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Strong => "strong",
            Mode::Weak => "weak",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "strong" => Ok(Mode::Strong),
            "weak" | "beta" => Ok(Mode::Weak),
            other => Err(format!("unknown mode {other:?}, expected `strong` or `weak`")),
        }
    }
}

/// Undirected simple graph on candidates `0..m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityGraph {
    adjacency: Vec<Vec<CandidateId>>,
    edges: Vec<(CandidateId, CandidateId)>,
    mode: Mode,
}

impl ConnectivityGraph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range endpoints are
    /// rejected. Graphs built this way are tagged [`Mode::Strong`].
    pub fn from_edges(
        m: usize,
        edges: impl IntoIterator<Item = (CandidateId, CandidateId)>,
    ) -> Result<Self> {
        if m == 0 {
            return Err(Error::Invalid(vec![crate::error::Violation {
                kind: crate::error::ViolationKind::EmptyCandidateSet,
                line: None,
            }]));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v || u >= m || v >= m {
                return Err(Error::InvalidEdge(u, v));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_sorted(m, set, Mode::Strong))
    }

    fn from_sorted(m: usize, edges: BTreeSet<(CandidateId, CandidateId)>, mode: Mode) -> Self {
        let mut adjacency = vec![Vec::new(); m];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        ConnectivityGraph {
            adjacency,
            edges: edges.into_iter().collect(),
            mode,
        }
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn m(&self) -> usize {
        self.adjacency.len()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: CandidateId) -> &[CandidateId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: CandidateId) -> usize {
        self.adjacency[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> &[(CandidateId, CandidateId)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: CandidateId, v: CandidateId) -> bool {
        u < self.m() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// The graph with every vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[CandidateId]) -> Result<Self> {
        let m = self.m();
        if perm.len() != m {
            return Err(Error::NotAPermutation { m });
        }
        let mut seen = vec![false; m];
        for &p in perm {
            if p >= m || std::mem::replace(&mut seen[p], true) {
                return Err(Error::NotAPermutation { m });
            }
        }
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v]));
        Ok(Self::from_edges(m, edges)?.with_mode(self.mode))
    }
}

/// Distinct `(first, second)` pairs over all votes.
pub fn top_pair_set(e: &Election) -> Result<BTreeSet<(CandidateId, CandidateId)>> {
    if e.m() < 2 {
        return Err(Error::TooFewCandidates { m: e.m() });
    }
    e.votes().iter().map(|(vote, _)| vote.top_two()).collect()
}

pub fn build_graph(e: &Election, mode: Mode) -> Result<ConnectivityGraph> {
    let pairs = top_pair_set(e)?;
    let edges: BTreeSet<_> = match mode {
        Mode::Strong => pairs
            .iter()
            .filter(|&&(a, b)| a < b && pairs.contains(&(b, a)))
            .copied()
            .collect(),
        Mode::Weak => pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect(),
    };
    Ok(ConnectivityGraph::from_sorted(e.m(), edges, mode))
}

fn quote(name: &str) -> String {
    let mut out = String::with_capacity(name.len() + 2);
    out.push('"');
    for c in name.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Graphviz text for `g`. Isolated vertices are listed first, then edges in
/// ascending `(u, v)` order, one statement per line.
pub fn export_dot<S: AsRef<str>>(g: &ConnectivityGraph, names: &[S]) -> String {
    let mut out = String::from("graph {\n");
    for v in (0..g.m()).filter(|&v| g.degree(v) == 0) {
        out.push_str(&format!("  {};\n", quote(names[v].as_ref())));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!(
            "  {} -- {};\n",
            quote(names[u].as_ref()),
            quote(names[v].as_ref())
        ));
    }
    out.push_str("}\n");
    out
}

//! Linked-order recognition.
//!
//! An order `(c1, ..., cm)` of the candidates is *linked* when `c1` and `c2`
//! are adjacent in the connectivity graph and every later `ci` has at least
//! two neighbors among `c1..c(i-1)`.
//!
//! For a fixed seed edge `{a, b}` the set of vertices reachable by repeatedly
//! absorbing any vertex with two absorbed neighbors is unique (the absorption
//! test only gets easier as the set grows), so a single greedy pass per seed
//! decides whether a linked order starting with `a, b` exists. If the pass
//! gets stuck at a set `S`, every vertex outside `S` has at most one neighbor
//! in `S`, and the first vertex outside `S` in any candidate order starting
//! with `a, b` would violate the two-neighbor rule.
//!
//! Only edges are tried as seeds: a non-adjacent first pair can never start
//! a linked order. Each seed costs `O(|E| + m log m)`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::connectivity::{build_graph, ConnectivityGraph, Mode};
use crate::election::{CandidateId, Election};
use crate::error::{Error, Result};

/// A permutation of the candidates claimed to be linked.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkedOrder(Vec<CandidateId>);

impl LinkedOrder {
    pub fn new(order: Vec<CandidateId>) -> Self {
        LinkedOrder(order)
    }

    pub fn as_slice(&self) -> &[CandidateId] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<CandidateId> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Greedy extension state for one seed edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureState {
    seed: (CandidateId, CandidateId),
    reached: Vec<CandidateId>,
    in_set: Vec<bool>,
    counters: Vec<u32>,
}

impl ClosureState {
    fn new(m: usize, seed: (CandidateId, CandidateId)) -> Self {
        ClosureState {
            seed,
            reached: Vec::with_capacity(m),
            in_set: vec![false; m],
            counters: vec![0; m],
        }
    }

    pub fn seed(&self) -> (CandidateId, CandidateId) {
        self.seed
    }

    /// Absorbed vertices in insertion order, starting with the seed.
    pub fn reached(&self) -> &[CandidateId] {
        &self.reached
    }

    pub fn contains(&self, v: CandidateId) -> bool {
        self.in_set[v]
    }

    /// Number of neighbors of `v` inside the reached set.
    pub fn counter(&self, v: CandidateId) -> u32 {
        self.counters[v]
    }

    /// Whether every candidate was absorbed.
    pub fn is_complete(&self) -> bool {
        self.reached.len() == self.in_set.len()
    }

    /// Reached set in ascending id order.
    pub fn sorted_set(&self) -> Vec<CandidateId> {
        (0..self.in_set.len()).filter(|&v| self.in_set[v]).collect()
    }

    pub fn into_order(self) -> LinkedOrder {
        LinkedOrder(self.reached)
    }
}

fn closure_with<K: Ord>(
    g: &ConnectivityGraph,
    seed: (CandidateId, CandidateId),
    key: impl Fn(CandidateId) -> K,
) -> Result<ClosureState> {
    let (a, b) = seed;
    if !g.has_edge(a, b) {
        return Err(Error::SeedNotEdge(a, b));
    }
    let mut state = ClosureState::new(g.m(), seed);
    let mut ready = BinaryHeap::new();
    let absorb = |state: &mut ClosureState, ready: &mut BinaryHeap<_>, v: CandidateId| {
        state.in_set[v] = true;
        state.reached.push(v);
        for &w in g.neighbors(v) {
            state.counters[w] += 1;
            // each vertex crosses the threshold exactly once
            if state.counters[w] == 2 && !state.in_set[w] {
                ready.push(Reverse((key(w), w)));
            }
        }
    };
    absorb(&mut state, &mut ready, a);
    absorb(&mut state, &mut ready, b);
    while let Some(Reverse((_, v))) = ready.pop() {
        absorb(&mut state, &mut ready, v);
    }
    Ok(state)
}

/// Greedy two-neighbor extension from `seed`, absorbing the lowest id first
/// whenever several vertices qualify.
pub fn greedy_closure(
    g: &ConnectivityGraph,
    seed: (CandidateId, CandidateId),
) -> Result<ClosureState> {
    closure_with(g, seed, |v| v)
}

/// Like [`greedy_closure`], but among qualifying vertices absorbs the one
/// with the smallest `priority[v]` first (ties by id). The reached *set* does
/// not depend on `priority`; the insertion order does.
pub fn greedy_closure_by(
    g: &ConnectivityGraph,
    seed: (CandidateId, CandidateId),
    priority: &[usize],
) -> Result<ClosureState> {
    assert_eq!(priority.len(), g.m(), "one priority per vertex");
    closure_with(g, seed, |v| priority[v])
}

/// Stuck sets for every seed edge of a graph that has no linked order.
///
/// Seeds that get stuck at the same set share one stored copy.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Certificate {
    seeds: Vec<((CandidateId, CandidateId), usize)>,
    stuck_sets: Vec<Vec<CandidateId>>,
}

impl Certificate {
    fn push(&mut self, index: &mut HashMap<Vec<CandidateId>, usize>, seed: (CandidateId, CandidateId), set: Vec<CandidateId>) {
        let next = self.stuck_sets.len();
        let slot = *index.entry(set).or_insert_with_key(|set| {
            self.stuck_sets.push(set.clone());
            next
        });
        self.seeds.push((seed, slot));
    }

    /// Number of seeds covered.
    pub fn len(&self) -> usize {
        self.seeds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seeds.is_empty()
    }

    /// `(seed, sorted stuck set)` pairs in ascending seed order.
    pub fn iter(&self) -> impl Iterator<Item = ((CandidateId, CandidateId), &[CandidateId])> {
        self.seeds
            .iter()
            .map(|&(seed, slot)| (seed, self.stuck_sets[slot].as_slice()))
    }

    pub fn stuck_set(&self, seed: (CandidateId, CandidateId)) -> Option<&[CandidateId]> {
        let key = (seed.0.min(seed.1), seed.0.max(seed.1));
        self.seeds
            .binary_search_by_key(&key, |&(s, _)| s)
            .ok()
            .map(|i| self.stuck_sets[self.seeds[i].1].as_slice())
    }

    /// Distinct stuck sets, in order of first appearance.
    pub fn distinct_sets(&self) -> &[Vec<CandidateId>] {
        &self.stuck_sets
    }

    pub fn max_stuck_size(&self) -> usize {
        self.stuck_sets.iter().map(Vec::len).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Linked,
    NotLinked,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecognitionResult {
    Linked(LinkedOrder),
    NotLinked(Certificate),
}

impl RecognitionResult {
    pub fn verdict(&self) -> Verdict {
        match self {
            RecognitionResult::Linked(_) => Verdict::Linked,
            RecognitionResult::NotLinked(_) => Verdict::NotLinked,
        }
    }

    pub fn is_linked(&self) -> bool {
        matches!(self, RecognitionResult::Linked(_))
    }

    pub fn witness(&self) -> Option<&LinkedOrder> {
        match self {
            RecognitionResult::Linked(w) => Some(w),
            RecognitionResult::NotLinked(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            RecognitionResult::Linked(_) => None,
            RecognitionResult::NotLinked(c) => Some(c),
        }
    }
}

/// Decides whether `g` has a linked order.
///
/// Seeds are tried in ascending edge order and the first complete closure is
/// returned as the witness. A single candidate counts as linked (the order
/// `(c1)` has no positions to check).
pub fn recognize(g: &ConnectivityGraph) -> RecognitionResult {
    if g.m() == 1 {
        return RecognitionResult::Linked(LinkedOrder(vec![0]));
    }
    let mut certificate = Certificate::default();
    let mut index = HashMap::new();
    for &seed in g.edges() {
        let state = greedy_closure(g, seed).expect("seed is an edge");
        if state.is_complete() {
            return RecognitionResult::Linked(state.into_order());
        }
        certificate.push(&mut index, seed, state.sorted_set());
    }
    RecognitionResult::NotLinked(certificate)
}

/// Parallel form of [`recognize`] with an identical result.
///
/// Seeds are evaluated in consecutive batches; the first batch containing a
/// complete closure decides the witness by seed order, not completion order.
#[cfg(feature = "parallel")]
pub fn recognize_parallel(g: &ConnectivityGraph) -> RecognitionResult {
    use rayon::prelude::*;

    if g.m() == 1 {
        return RecognitionResult::Linked(LinkedOrder(vec![0]));
    }
    let batch = (rayon::current_num_threads() * 16).max(64);
    let mut certificate = Certificate::default();
    let mut index = HashMap::new();
    for seeds in g.edges().chunks(batch) {
        let states: Vec<ClosureState> = seeds
            .par_iter()
            .map(|&seed| greedy_closure(g, seed).expect("seed is an edge"))
            .collect();
        if let Some(done) = states.iter().position(ClosureState::is_complete) {
            let state = states.into_iter().nth(done).expect("index in range");
            return RecognitionResult::Linked(state.into_order());
        }
        for state in states {
            certificate.push(&mut index, state.seed, state.sorted_set());
        }
    }
    RecognitionResult::NotLinked(certificate)
}

fn positions(m: usize, order: &[CandidateId]) -> Result<Vec<usize>> {
    if order.len() != m {
        return Err(Error::NotAPermutation { m });
    }
    let mut position = vec![usize::MAX; m];
    for (i, &v) in order.iter().enumerate() {
        if v >= m || position[v] != usize::MAX {
            return Err(Error::NotAPermutation { m });
        }
        position[v] = i;
    }
    Ok(position)
}

/// For each position of `order`, how many neighbors appear earlier.
pub fn prior_neighbor_counts(g: &ConnectivityGraph, order: &LinkedOrder) -> Result<Vec<usize>> {
    let position = positions(g.m(), order.as_slice())?;
    Ok(order
        .as_slice()
        .iter()
        .enumerate()
        .map(|(i, &v)| g.neighbors(v).iter().filter(|&&w| position[w] < i).count())
        .collect())
}

/// Checks the linked condition for `w` against `g` directly.
pub fn verify_witness(g: &ConnectivityGraph, w: &LinkedOrder) -> Result<bool> {
    let counts = prior_neighbor_counts(g, w)?;
    let order = w.as_slice();
    if order.len() >= 2 && !g.has_edge(order[0], order[1]) {
        return Ok(false);
    }
    Ok(counts.iter().skip(2).all(|&c| c >= 2))
}

/// Checks a negative answer: every edge of `g` has an entry whose set contains
/// the seed, misses some candidate, and gives every outside vertex at most
/// one neighbor inside.
pub fn verify_certificate(g: &ConnectivityGraph, c: &Certificate) -> bool {
    if c.len() != g.edge_count() {
        return false;
    }
    g.edges().iter().all(|&(a, b)| {
        let Some(set) = c.stuck_set((a, b)) else {
            return false;
        };
        let mut inside = vec![false; g.m()];
        for &v in set {
            if v >= g.m() {
                return false;
            }
            inside[v] = true;
        }
        inside[a]
            && inside[b]
            && set.len() < g.m()
            && (0..g.m())
                .filter(|&v| !inside[v])
                .all(|v| g.neighbors(v).iter().filter(|&&w| inside[w]).count() <= 1)
    })
}

/// Builds the graph for `e` under `mode` and recognizes it.
pub fn recognize_election(e: &Election, mode: Mode) -> Result<RecognitionResult> {
    if e.m() == 1 {
        return Ok(RecognitionResult::Linked(LinkedOrder(vec![0])));
    }
    Ok(recognize(&build_graph(e, mode)?))
}

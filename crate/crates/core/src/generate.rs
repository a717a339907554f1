//! Election and graph generators for fixtures, tests and benchmarks.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, so a given
//! seed produces the same output on every platform and release.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectivity::ConnectivityGraph;
use crate::election::{CandidateId, Election};
use crate::error::{Error, Result};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Spreadsheet-style names: `a`..`z`, `aa`, `ab`, ...
pub fn candidate_names(m: usize) -> Vec<String> {
    (0..m)
        .map(|mut i| {
            let mut name = Vec::new();
            loop {
                name.push(b'a' + (i % 26) as u8);
                if i < 26 {
                    break;
                }
                i = i / 26 - 1;
            }
            name.reverse();
            String::from_utf8(name).expect("ascii")
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Model {
    /// `votes` independent uniformly random rankings of `candidates`.
    ImpartialCulture { candidates: usize, votes: u64 },
    /// Two votes per edge so that the strong graph is exactly `target`.
    EdgeRealizing(ConnectivityGraph),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub model: Model,
    pub rng_seed: u64,
}

pub fn generate(spec: &GeneratorSpec) -> Result<Election> {
    match &spec.model {
        Model::ImpartialCulture { candidates, votes } => {
            gen_impartial_culture(*candidates, *votes, spec.rng_seed)
        }
        Model::EdgeRealizing(target) => gen_edge_realizing(target),
    }
}

pub fn random_ranking<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Vec<CandidateId> {
    let mut ranking: Vec<CandidateId> = (0..m).collect();
    ranking.shuffle(rng);
    ranking
}

/// `n` independent uniform rankings, one vote entry each, in draw order.
pub fn gen_impartial_culture(m: usize, n: u64, seed: u64) -> Result<Election> {
    let mut rng = rng(seed);
    let votes = (0..n).map(|_| (random_ranking(m, &mut rng), 1)).collect();
    Election::from_ids(&candidate_names(m), votes)
}

/// For every edge `{u, v}` emits `u > v > rest` and `v > u > rest`, with the
/// rest in ascending id order.
pub fn gen_edge_realizing(target: &ConnectivityGraph) -> Result<Election> {
    gen_edge_realizing_named(target, &candidate_names(target.m()))
}

pub fn gen_edge_realizing_named<S: AsRef<str>>(
    target: &ConnectivityGraph,
    names: &[S],
) -> Result<Election> {
    let m = target.m();
    if m < 2 {
        return Err(Error::TooFewCandidates { m });
    }
    let vote = |first: CandidateId, second: CandidateId| {
        let mut ranking = vec![first, second];
        ranking.extend((0..m).filter(|&c| c != first && c != second));
        (ranking, 1)
    };
    let votes = target
        .edges()
        .iter()
        .flat_map(|&(u, v)| [vote(u, v), vote(v, u)])
        .collect();
    Election::from_ids(names, votes)
}

/// Erdős–Rényi graph: each pair is an edge with probability `p`.
pub fn gen_random_graph(m: usize, p: f64, seed: u64) -> ConnectivityGraph {
    let mut rng = rng(seed);
    let p = p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for u in 0..m {
        for v in u + 1..m {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    ConnectivityGraph::from_edges(m.max(1), edges).expect("valid edges")
}

/// Complete graph on `m - 1` vertices plus vertex `m - 1` joined to vertex 0
/// only. Every seed gets stuck one vertex short, so recognition has to try
/// all of them before answering no.
pub fn gen_worst_case(m: usize) -> ConnectivityGraph {
    assert!(m >= 3, "worst case needs at least three vertices");
    let core = m - 1;
    let edges = (0..core)
        .flat_map(|u| (u + 1..core).map(move |v| (u, v)))
        .chain([(0, m - 1)]);
    ConnectivityGraph::from_edges(m, edges).expect("valid edges")
}

//! Reference implementations for checking the recognizer on small inputs.
//!
//! Nothing here calls into [`crate::recognition`]'s closure code: the brute
//! force walks permutations directly and the all-pairs variant rescans the
//! whole vertex set at every step.

use crate::connectivity::ConnectivityGraph;
use crate::election::CandidateId;
use crate::error::{Error, Result};
use crate::recognition::{verify_witness, LinkedOrder};

pub const DEFAULT_CAP: usize = 8;

fn adjacency_matrix(g: &ConnectivityGraph) -> Vec<Vec<bool>> {
    let m = g.m();
    let mut adj = vec![vec![false; m]; m];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Searches all orders of the candidates for a linked one, pruning a prefix
/// as soon as its last vertex breaks the rule. Returns the lexicographically
/// first linked order, or `None`.
pub fn brute_force_linked(g: &ConnectivityGraph, cap: usize) -> Result<Option<LinkedOrder>> {
    let m = g.m();
    if m > cap {
        return Err(Error::InstanceTooLarge { m, cap });
    }
    let adj = adjacency_matrix(g);
    let mut prefix = Vec::with_capacity(m);
    let mut used = vec![false; m];

    fn extend(adj: &[Vec<bool>], prefix: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let m = adj.len();
        if prefix.len() == m {
            return true;
        }
        for v in 0..m {
            if used[v] {
                continue;
            }
            let ok = match prefix.len() {
                0 => true,
                1 => adj[prefix[0]][v],
                _ => prefix.iter().filter(|&&u| adj[u][v]).count() >= 2,
            };
            if !ok {
                continue;
            }
            used[v] = true;
            prefix.push(v);
            if extend(adj, prefix, used) {
                return true;
            }
            prefix.pop();
            used[v] = false;
        }
        false
    }

    Ok(extend(&adj, &mut prefix, &mut used).then(|| LinkedOrder::new(prefix)))
}

/// The unoptimized procedure: every unordered pair (edge or not) as a seed,
/// extension by rescanning for the lowest-id vertex with two neighbors in the
/// current set, success judged by [`verify_witness`] on the finished order.
pub fn recognize_all_pairs(g: &ConnectivityGraph) -> Option<LinkedOrder> {
    let m = g.m();
    if m == 1 {
        return Some(LinkedOrder::new(vec![0]));
    }
    let adj = adjacency_matrix(g);
    for a in 0..m {
        for b in a + 1..m {
            let mut order = vec![a, b];
            let mut inside = vec![false; m];
            inside[a] = true;
            inside[b] = true;
            while order.len() < m {
                let next = (0..m).find(|&c| {
                    !inside[c] && order.iter().filter(|&&u| adj[u][c]).count() >= 2
                });
                match next {
                    Some(c) => {
                        inside[c] = true;
                        order.push(c);
                    }
                    None => break,
                }
            }
            if order.len() == m {
                let w = LinkedOrder::new(order);
                if verify_witness(g, &w).expect("order is a permutation") {
                    return Some(w);
                }
            }
        }
    }
    None
}

/// Every simple graph on `m` labelled vertices, by edge-subset bitmask over
/// the pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn all_graphs(m: usize) -> impl Iterator<Item = ConnectivityGraph> {
    let pairs: Vec<(CandidateId, CandidateId)> = (0..m)
        .flat_map(|u| (u + 1..m).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 64, "too many vertices to enumerate");
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        ConnectivityGraph::from_edges(m, edges).expect("valid edges")
    })
}

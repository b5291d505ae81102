//! Seeded instance generators. Output depends only on the arguments.

use p2pack_core::{Graph, Instance, Vertex};
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("planted instances need k >= 1")]
    ZeroK,
    #[error("{requested} extra edges requested but only {capacity} non-planted pairs exist")]
    Capacity { requested: usize, capacity: usize },
    #[error("edge probability {0} outside [0, 1]")]
    Probability(f64),
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `k` disjoint paths `3i - 3i+1 - 3i+2` plus `extra_edges` distinct random
/// edges among the remaining vertex pairs.
pub fn gen_planted(k: usize, extra_edges: usize, seed: u64) -> Result<Instance, GenError> {
    if k == 0 {
        return Err(GenError::ZeroK);
    }
    let n = 3 * k;
    let planted: Vec<(Vertex, Vertex)> = (0..k)
        .flat_map(|i| [(3 * i, 3 * i + 1), (3 * i + 1, 3 * i + 2)])
        .collect();
    let candidates: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| planted.binary_search(e).is_err())
        .collect();
    if extra_edges > candidates.len() {
        return Err(GenError::Capacity {
            requested: extra_edges,
            capacity: candidates.len(),
        });
    }
    let mut picks = index::sample(&mut rng(seed), candidates.len(), extra_edges).into_vec();
    picks.sort_unstable();
    let edges = planted
        .iter()
        .copied()
        .chain(picks.into_iter().map(|i| candidates[i]));
    let graph = Graph::from_edges(n, edges).expect("generated edges are valid");
    Ok(Instance::new(graph, k))
}

/// Erdős–Rényi `G(n, p)`: pairs `u < v` are visited in lexicographic order
/// and each is kept with probability `p`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::Probability(p));
    }
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, edges).expect("generated edges are valid"))
}

//! Growing a maximal packing of size `j` to size `j + 1`.
//!
//! If a `(j+1)`-packing exists at all, one of them reuses at least `2.5 j`
//! vertices of `V(P)`, so at most `0.5 j + 3` of its vertices lie outside.
//! The search first guesses the midpoints, allowing up to `0.3251 j` of them
//! outside `V(P)`; past that point at most `0.1749 j + 3` endpoints can lie
//! outside, so it switches to guessing endpoint pairs. Each guess is checked
//! with one bipartite matching.

use alloc::vec;
use alloc::vec::Vec;

use itertools::Itertools;
use num_bigint::BigUint;

use crate::graph::{Graph, P2Path, Packing, Vertex};
use crate::matching::{max_matching, BipartiteGraph};
use crate::reconstruct::{common_neighbors, match_endpoint_pairs};

/// Phase caps for a packing of size `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AugmentBudget {
    pub j: usize,
    /// Largest number of midpoints guessed outside `V(P)`: `floor(0.3251 j)`.
    pub l_max: usize,
    /// Largest number of endpoints guessed outside `V(P)`:
    /// `floor(0.1749 j + 3)`.
    pub lbar_max: usize,
}

impl AugmentBudget {
    pub fn new(j: usize) -> Self {
        Self {
            j,
            l_max: 3251 * j / 10_000,
            lbar_max: (1749 * j + 30_000) / 10_000,
        }
    }
}

/// Tries to find a packing with `|p| + 1` paths. `p` must be maximal in `g`.
///
/// Candidates are visited in a fixed lexicographic order and the first
/// success is returned, so the result is deterministic. `None` means the
/// enumeration found nothing.
pub fn augment(g: &Graph, p: &Packing) -> Option<Packing> {
    let j = p.len();
    if 3 * (j + 1) > g.n() {
        return None;
    }
    let budget = AugmentBudget::new(j);
    let (inside, outside): (Vec<Vertex>, Vec<Vertex>) = g.vertices().partition(|&v| p.covers(v));
    midpoint_phase(g, &budget, &inside, &outside)
        .or_else(|| endpoint_phase(g, &budget, &inside, &outside))
}

fn midpoint_phase(
    g: &Graph,
    budget: &AugmentBudget,
    inside: &[Vertex],
    outside: &[Vertex],
) -> Option<Packing> {
    // A midpoint needs two neighbors.
    let usable = |vs: &[Vertex]| {
        vs.iter()
            .copied()
            .filter(|&v| g.degree(v) >= 2)
            .collect_vec()
    };
    let (inside, outside) = (usable(inside), usable(outside));
    let mut is_mid = vec![false; g.n()];
    let mut mids = Vec::with_capacity(budget.j + 1);
    for outer in 0..=budget.l_max.min(budget.j + 1) {
        let inner = budget.j + 1 - outer;
        if inner > inside.len() || outer > outside.len() {
            continue;
        }
        for s_in in inside.iter().copied().combinations(inner) {
            for s_out in outside.iter().copied().combinations(outer) {
                mids.clear();
                mids.extend(s_in.iter().merge(&s_out).copied());
                for &v in &mids {
                    is_mid[v] = true;
                }
                let found = match_midpoints(g, &mids, &is_mid);
                for &v in &mids {
                    is_mid[v] = false;
                }
                if found.is_some() {
                    return found;
                }
            }
        }
    }
    None
}

fn match_midpoints(g: &Graph, mids: &[Vertex], is_mid: &[bool]) -> Option<Packing> {
    let adj: Vec<Vec<usize>> = mids
        .iter()
        .flat_map(|&m| {
            let slot: Vec<usize> = g
                .neighbors(m)
                .iter()
                .copied()
                .filter(|&u| !is_mid[u])
                .collect();
            [slot.clone(), slot]
        })
        .collect();
    if adj.iter().any(Vec::is_empty) {
        return None;
    }
    let b = BipartiteGraph::new(g.n(), adj).ok()?;
    let m = max_matching(&b);
    if !m.saturates_left() {
        return None;
    }
    Packing::from_paths(mids.iter().enumerate().map(|(i, &mid)| {
        P2Path::new(
            m.of_left(2 * i).unwrap(),
            mid,
            m.of_left(2 * i + 1).unwrap(),
        )
    }))
    .ok()
}

fn endpoint_phase(
    g: &Graph,
    budget: &AugmentBudget,
    inside: &[Vertex],
    outside: &[Vertex],
) -> Option<Packing> {
    let usable = |vs: &[Vertex]| {
        vs.iter()
            .copied()
            .filter(|&v| g.degree(v) >= 1)
            .collect_vec()
    };
    let (inside, outside) = (usable(inside), usable(outside));
    let total = 2 * (budget.j + 1);
    let mut endpoint = vec![false; g.n()];
    let mut chosen = Vec::with_capacity(total);
    for outer in 0..=budget.lbar_max.min(total) {
        let inner = total - outer;
        if inner > inside.len() || outer > outside.len() {
            continue;
        }
        for b_in in inside.iter().copied().combinations(inner) {
            for b_out in outside.iter().copied().combinations(outer) {
                chosen.clear();
                chosen.extend(b_in.iter().merge(&b_out).copied());
                for &v in &chosen {
                    endpoint[v] = true;
                }
                let mut pairs = Vec::with_capacity(budget.j + 1);
                let mut used = vec![false; chosen.len()];
                let found = search_pairings(g, &chosen, &endpoint, &mut used, &mut pairs);
                for &v in &chosen {
                    endpoint[v] = false;
                }
                if found.is_some() {
                    return found;
                }
            }
        }
    }
    None
}

/// Perfect pairings of `chosen`: the smallest unpaired vertex is paired with
/// each later unpaired vertex in turn. A pair without a common neighbor
/// outside the endpoint set is never extended.
fn search_pairings(
    g: &Graph,
    chosen: &[Vertex],
    endpoint: &[bool],
    used: &mut [bool],
    pairs: &mut Vec<(Vertex, Vertex)>,
) -> Option<Packing> {
    let Some(first) = used.iter().position(|u| !u) else {
        return match_endpoint_pairs(g, pairs, endpoint);
    };
    used[first] = true;
    let a = chosen[first];
    for second in first + 1..chosen.len() {
        if used[second] {
            continue;
        }
        let b = chosen[second];
        if !common_neighbors(g, a, b).any(|v| !endpoint[v]) {
            continue;
        }
        used[second] = true;
        pairs.push((a, b));
        let found = search_pairings(g, chosen, endpoint, used, pairs);
        pairs.pop();
        used[second] = false;
        if found.is_some() {
            used[first] = false;
            return found;
        }
    }
    used[first] = false;
    None
}

/// Exact check that the per-phase candidate counts grow with the number of
/// outside vertices: for every integer `0 <= z <= j/2 - 1`,
///
/// `C(3j, j-z) C(4j, z) < C(3j, j-z-1) C(4j, z+1)` and
/// `C(3j, 2j-z) C(4j, z) < C(3j, 2j-z-1) C(4j, z+1)`.
///
/// Requires `j >= 2`; smaller `j` returns `false`.
pub fn binomial_growth_check(j: usize) -> bool {
    if j < 2 {
        return false;
    }
    let row3 = binomial_row(3 * j);
    let row4 = binomial_row(4 * j);
    let z_max = (j - 2) / 2;
    (0..=z_max).all(|z| {
        let lhs1 = &row3[j - z] * &row4[z];
        let rhs1 = &row3[j - z - 1] * &row4[z + 1];
        let lhs2 = &row3[2 * j - z] * &row4[z];
        let rhs2 = &row3[2 * j - z - 1] * &row4[z + 1];
        lhs1 < rhs1 && lhs2 < rhs2
    })
}

/// `C(n, 0), ..., C(n, n)`.
fn binomial_row(n: usize) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigUint::from(1u32);
    row.push(c.clone());
    for r in 0..n {
        c = c * (n - r) as u64 / (r + 1) as u64;
        row.push(c.clone());
    }
    row
}

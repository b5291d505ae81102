//! Exact reference algorithms for small graphs.
//!
//! Nothing here shares code with the solver path beyond the graph types:
//! the maximum packing comes from a subset DP, packings are enumerated
//! directly, and total edge covers are found by trying edge subsets in
//! order of size. Every routine refuses inputs above its size cap instead
//! of degrading.

mod extremal;

pub use extremal::{
    extremal_family, is_foldable, verify_extremal, Claim, ExtremalFamilies, ExtremalReport,
    Violation,
};

use alloc::vec;
use alloc::vec::Vec;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, P2Path, Packing, Vertex};

/// Default vertex cap of [`max_packing_dp`].
pub const DP_CAP: usize = 20;
/// Default vertex cap of [`enumerate_packings`] and the extremal-family checks.
pub const ENUMERATION_CAP: usize = 14;
/// Default edge cap of [`min_total_edge_cover_bruteforce`].
pub const TEC_EDGE_CAP: usize = 24;
/// Bitmask DP memory grows as `2^n`; this is the hard ceiling for any cap.
const DP_HARD_LIMIT: usize = 28;

fn refuse(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::OracleRefused { size, cap })
    } else {
        Ok(())
    }
}

/// Every P2 of `g`, in `P2Path` order.
pub fn all_p2s(g: &Graph) -> Vec<P2Path> {
    let mut out: Vec<P2Path> = g
        .vertices()
        .flat_map(|mid| {
            g.neighbors(mid)
                .iter()
                .copied()
                .tuple_combinations()
                .map(move |(a, b)| P2Path::new(a, mid, b))
        })
        .collect();
    out.sort_unstable();
    out
}

fn mask_of(path: &P2Path) -> u32 {
    path.vertices().iter().fold(0, |m, &v| m | (1 << v))
}

/// Maximum packing size and a witness via DP over vertex subsets: the
/// lowest vertex of a subset is either skipped or covered by some P2 inside
/// the subset.
pub fn max_packing_dp(g: &Graph, cap: usize) -> Result<(usize, Packing)> {
    refuse(g.n(), cap.min(DP_HARD_LIMIT))?;
    let n = g.n();
    let mut at: Vec<Vec<(u32, P2Path)>> = vec![Vec::new(); n];
    for path in all_p2s(g) {
        let mask = mask_of(&path);
        for v in path.vertices() {
            at[v].push((mask, path));
        }
    }
    let mut memo = vec![u8::MAX; 1usize << n];
    let full: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let best = dp_best(full, &at, &mut memo);

    let mut witness = Packing::new();
    let mut s = full;
    while s != 0 {
        let v = s.trailing_zeros() as usize;
        let here = dp_best(s, &at, &mut memo);
        let without = s & !(1 << v);
        if dp_best(without, &at, &mut memo) == here {
            s = without;
            continue;
        }
        let &(mask, path) = at[v]
            .iter()
            .find(|(mask, _)| mask & s == *mask && 1 + dp_best(s & !mask, &at, &mut memo) == here)
            .expect("DP value is realized by some choice");
        witness
            .insert(path)
            .map_err(|e| Error::Internal(alloc::format!("DP witness: {e}")))?;
        s &= !mask;
    }
    Ok((best as usize, witness))
}

fn dp_best(s: u32, at: &[Vec<(u32, P2Path)>], memo: &mut [u8]) -> u8 {
    if s == 0 {
        return 0;
    }
    if memo[s as usize] != u8::MAX {
        return memo[s as usize];
    }
    let v = s.trailing_zeros() as usize;
    let mut best = dp_best(s & !(1 << v), at, memo);
    for &(mask, _) in &at[v] {
        if mask & s == mask {
            best = best.max(1 + dp_best(s & !mask, at, memo));
        }
    }
    memo[s as usize] = best;
    best
}

/// Calls `visit` on every packing with exactly `size` paths. Paths inside
/// a packing are listed in `P2Path` order and packings are visited in
/// lexicographic order of those lists.
pub fn for_each_packing(
    g: &Graph,
    size: usize,
    cap: usize,
    mut visit: impl FnMut(&[P2Path]),
) -> Result<()> {
    refuse(g.n(), cap.min(64))?;
    let paths = all_p2s(g);
    let masks: Vec<u64> = paths
        .iter()
        .map(|p| p.vertices().iter().fold(0u64, |m, &v| m | (1 << v)))
        .collect();
    let mut chosen = Vec::with_capacity(size);
    choose(&paths, &masks, 0, 0, size, &mut chosen, &mut visit);
    Ok(())
}

fn choose(
    paths: &[P2Path],
    masks: &[u64],
    start: usize,
    used: u64,
    size: usize,
    chosen: &mut Vec<P2Path>,
    visit: &mut impl FnMut(&[P2Path]),
) {
    if chosen.len() == size {
        visit(chosen);
        return;
    }
    let need = size - chosen.len();
    for i in start..paths.len() {
        if paths.len() - i < need {
            break;
        }
        if masks[i] & used != 0 {
            continue;
        }
        chosen.push(paths[i]);
        choose(paths, masks, i + 1, used | masks[i], size, chosen, visit);
        chosen.pop();
    }
}

/// All packings with exactly `size` paths, in deterministic order.
pub fn enumerate_packings(g: &Graph, size: usize, cap: usize) -> Result<Vec<Packing>> {
    let mut out = Vec::new();
    for_each_packing(g, size, cap, |paths| {
        out.push(Packing::from_paths(paths.iter().copied()).expect("disjoint by construction"));
    })?;
    Ok(out)
}

/// Minimum total edge cover by trying edge subsets in increasing size. Every
/// component of `g` needs at least three vertices.
pub fn min_total_edge_cover_bruteforce(
    g: &Graph,
    cap: usize,
) -> Result<(usize, Vec<(Vertex, Vertex)>)> {
    refuse(g.m(), cap.min(40))?;
    if let Some(c) = g.components().into_iter().find(|c| c.len() < 3) {
        return Err(Error::NoTotalEdgeCover(c[0]));
    }
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    for size in 0..=edges.len() {
        for subset in edges.iter().copied().combinations(size) {
            if covers_totally(g.n(), &subset) {
                return Ok((size, subset));
            }
        }
    }
    Err(Error::Internal(
        "no total edge cover in a graph with big components".into(),
    ))
}

/// Is `edges` a total edge cover of `g`? Checked by union-find, separately
/// from the solver's own test.
pub fn is_total_cover(g: &Graph, edges: &[(Vertex, Vertex)]) -> bool {
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == edges.len()
        && edges
            .iter()
            .all(|&(u, v)| u < g.n() && v < g.n() && g.has_edge(u, v))
        && covers_totally(g.n(), edges)
}

/// Union-find check: every vertex touched, every cover component has at
/// least two edges.
fn covers_totally(n: usize, edges: &[(Vertex, Vertex)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut touched = vec![false; n];
    for &(u, v) in edges {
        touched[u] = true;
        touched[v] = true;
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
        }
    }
    if touched.iter().any(|t| !t) {
        return false;
    }
    let mut edge_count = vec![0usize; n];
    for &(u, _) in edges {
        let r = find(&mut parent, u);
        edge_count[r] += 1;
    }
    (0..n).all(|v| find(&mut parent, v) != v || edge_count[v] >= 2)
}

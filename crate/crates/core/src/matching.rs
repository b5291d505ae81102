//! Maximum bipartite matching with alternating-path reachability.
//!
//! Augmenting paths are searched from left vertices in ascending id order,
//! scanning neighbors in ascending order, so the returned matching is a pure
//! function of the input.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    left_count: usize,
    right_count: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// `adj[l]` lists the right neighbors of left vertex `l`.
    pub fn new(right_count: usize, mut adj: Vec<Vec<usize>>) -> Result<Self> {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            if let Some(&r) = list.last() {
                if r >= right_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: r,
                        n: right_count,
                    });
                }
            }
        }
        Ok(Self {
            left_count: adj.len(),
            right_count,
            adj,
        })
    }

    pub fn from_edges(
        left_count: usize,
        right_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut adj = vec![Vec::new(); left_count];
        for (l, r) in edges {
            if l >= left_count {
                return Err(Error::VertexOutOfRange {
                    vertex: l,
                    n: left_count,
                });
            }
            adj[l].push(r);
        }
        Self::new(right_count, adj)
    }

    pub fn left_count(&self) -> usize {
        self.left_count
    }

    pub fn right_count(&self) -> usize {
        self.right_count
    }

    pub fn neighbors(&self, left: usize) -> &[usize] {
        &self.adj[left]
    }

    pub fn has_edge(&self, left: usize, right: usize) -> bool {
        left < self.left_count && self.adj[left].binary_search(&right).is_ok()
    }
}

/// A partial injective map from left to right vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
    size: usize,
}

impl Matching {
    pub fn empty(left_count: usize, right_count: usize) -> Self {
        Self {
            left: vec![None; left_count],
            right: vec![None; right_count],
            size: 0,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn of_left(&self, l: usize) -> Option<usize> {
        self.left[l]
    }

    pub fn of_right(&self, r: usize) -> Option<usize> {
        self.right[r]
    }

    /// Matched pairs `(left, right)` in ascending left order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.left
            .iter()
            .enumerate()
            .filter_map(|(l, r)| r.map(|r| (l, r)))
    }

    pub fn saturates_left(&self) -> bool {
        self.size == self.left.len()
    }

    pub fn saturates_right(&self) -> bool {
        self.size == self.right.len()
    }

    fn link(&mut self, l: usize, r: usize) {
        self.left[l] = Some(r);
        self.right[r] = Some(l);
    }

    /// Checks injectivity and that every pair is an edge of `b`.
    pub fn is_valid_for(&self, b: &BipartiteGraph) -> bool {
        if self.left.len() != b.left_count || self.right.len() != b.right_count {
            return false;
        }
        let mut count = 0;
        for (l, r) in self.pairs() {
            if !b.has_edge(l, r) || self.right[r] != Some(l) {
                return false;
            }
            count += 1;
        }
        count == self.size && self.right.iter().flatten().count() == self.size
    }
}

/// Maximum-cardinality matching: a greedy pass followed by one augmenting
/// path search per still-unmatched left vertex.
pub fn max_matching(b: &BipartiteGraph) -> Matching {
    let mut m = Matching::empty(b.left_count, b.right_count);
    for l in 0..b.left_count {
        if let Some(&r) = b.adj[l].iter().find(|&&r| m.right[r].is_none()) {
            m.link(l, r);
            m.size += 1;
        }
    }
    let mut visited = vec![false; b.right_count];
    for l in 0..b.left_count {
        if m.left[l].is_some() {
            continue;
        }
        visited.iter_mut().for_each(|v| *v = false);
        if augment_from(b, &mut m, &mut visited, l) {
            m.size += 1;
        }
    }
    m
}

fn augment_from(b: &BipartiteGraph, m: &mut Matching, visited: &mut [bool], l: usize) -> bool {
    for &r in &b.adj[l] {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        let free = match m.right[r] {
            None => true,
            Some(owner) => augment_from(b, m, visited, owner),
        };
        if free {
            m.link(l, r);
            return true;
        }
    }
    false
}

/// Vertices reachable from `sources` (left vertices) along alternating paths
/// that leave the left side on non-matching edges and return on matching
/// edges. The sources themselves are part of the returned left set.
pub fn alternating_reachable(
    b: &BipartiteGraph,
    m: &Matching,
    sources: &VertexSet,
) -> (VertexSet, VertexSet) {
    let mut left_seen = vec![false; b.left_count];
    let mut right_seen = vec![false; b.right_count];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &s in sources {
        if s < b.left_count && !left_seen[s] {
            left_seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(l) = queue.pop_front() {
        for &r in &b.adj[l] {
            if right_seen[r] || m.left[l] == Some(r) {
                continue;
            }
            right_seen[r] = true;
            if let Some(next) = m.right[r] {
                if !left_seen[next] {
                    left_seen[next] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    let collect = |seen: Vec<bool>| {
        seen.into_iter()
            .enumerate()
            .filter_map(|(i, s)| s.then_some(i))
            .collect::<VertexSet>()
    };
    (collect(left_seen), collect(right_seen))
}

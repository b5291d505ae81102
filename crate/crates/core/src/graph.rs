//! Simple undirected graphs on dense vertex ids and the P2 value types.
//!
//! Adjacency lists are kept sorted, so every iteration in the crate visits
//! vertices in ascending id order and all algorithms are deterministic.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type VertexSet = BTreeSet<Vertex>;

/// Immutable simple graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicates and both orientations of
    /// an edge collapse to one edge; self-loops and out-of-range ids are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            check_vertex(n, u)?;
            check_vertex(n, v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m2 += list.len();
        }
        Ok(Self { adj, m: m2 / 2 })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.adj.len()
    }

    /// Sorted neighbor list of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        check_vertex(self.n(), v)
    }

    /// Subgraph induced on the vertices not in `removed`, re-indexed densely
    /// in ascending order. The second component maps new ids to old ids.
    pub fn without(&self, removed: &VertexSet) -> (Graph, Vec<Vertex>) {
        let keep: Vec<Vertex> = self.vertices().filter(|v| !removed.contains(v)).collect();
        (self.induced(&keep), keep)
    }

    /// Subgraph induced on `keep` (must be sorted and duplicate-free); vertex
    /// `i` of the result is `keep[i]`.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut m2 = 0;
        let adj: Vec<Vec<Vertex>> = keep
            .iter()
            .map(|&v| {
                let list: Vec<Vertex> = self.adj[v]
                    .iter()
                    .filter_map(|&u| (index[u] != usize::MAX).then_some(index[u]))
                    .collect();
                m2 += list.len();
                list
            })
            .collect();
        Graph { adj, m: m2 / 2 }
    }

    /// Connected components, each sorted, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        components_avoiding(self, &vec![false; self.n()])
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn check_vertex(n: usize, v: Vertex) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n })
    }
}

/// `N(s)`: vertices outside `s` adjacent to at least one vertex of `s`.
pub fn neighbors_of_set(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    for &v in s {
        g.check_vertex(v)?;
    }
    Ok(s.iter()
        .flat_map(|&v| g.neighbors(v).iter().copied())
        .filter(|u| !s.contains(u))
        .collect())
}

/// Connected components of `g - removed`, ordered by minimum vertex id.
pub fn components_outside(g: &Graph, removed: &VertexSet) -> Result<Vec<VertexSet>> {
    let mut blocked = vec![false; g.n()];
    for &v in removed {
        g.check_vertex(v)?;
        blocked[v] = true;
    }
    Ok(components_avoiding(g, &blocked)
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect())
}

pub(crate) fn components_avoiding(g: &Graph, blocked: &[bool]) -> Vec<Vec<Vertex>> {
    let mut seen = blocked.to_vec();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in g.vertices() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A path on three vertices, stored with `e1 < e2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct P2Path {
    e1: Vertex,
    mid: Vertex,
    e2: Vertex,
}

impl P2Path {
    /// Path `a - mid - b`; the endpoints are stored in ascending order.
    pub fn new(a: Vertex, mid: Vertex, b: Vertex) -> Self {
        let (e1, e2) = if a <= b { (a, b) } else { (b, a) };
        Self { e1, mid, e2 }
    }

    pub fn e1(&self) -> Vertex {
        self.e1
    }

    pub fn mid(&self) -> Vertex {
        self.mid
    }

    pub fn e2(&self) -> Vertex {
        self.e2
    }

    /// Vertices in path order `e1, mid, e2`.
    pub fn vertices(&self) -> [Vertex; 3] {
        [self.e1, self.mid, self.e2]
    }

    pub fn min_vertex(&self) -> Vertex {
        self.e1.min(self.mid)
    }

    /// The two edges, each as `(smaller, larger)`.
    pub fn edges(&self) -> [(Vertex, Vertex); 2] {
        [ordered(self.e1, self.mid), ordered(self.mid, self.e2)]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.e1 == v || self.mid == v || self.e2 == v
    }

    pub fn is_endpoint(&self, v: Vertex) -> bool {
        self.e1 == v || self.e2 == v
    }

    /// Maps every vertex through `f`, keeping the midpoint.
    pub fn map(&self, mut f: impl FnMut(Vertex) -> Vertex) -> Self {
        Self::new(f(self.e1), f(self.mid), f(self.e2))
    }

    pub fn check_in(&self, g: &Graph) -> Result<()> {
        for v in self.vertices() {
            g.check_vertex(v)?;
        }
        if self.e1 == self.e2 || self.e1 == self.mid || self.e2 == self.mid {
            return Err(Error::InvalidPacking(format!("{self:?} repeats a vertex")));
        }
        if !g.has_edge(self.e1, self.mid) || !g.has_edge(self.mid, self.e2) {
            return Err(Error::InvalidPacking(format!("{self:?} uses a non-edge")));
        }
        Ok(())
    }
}

impl fmt::Debug for P2Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-[{}]-{}", self.e1, self.mid, self.e2)
    }
}

pub(crate) fn ordered(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A set of pairwise vertex-disjoint P2 paths.
///
/// Paths are kept sorted by their minimum vertex, which is also the order in
/// which the reduction rules scan them.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Packing {
    paths: Vec<P2Path>,
    covered: VertexSet,
}

impl Packing {
    pub fn new() -> Self {
        Self::default()
    }

    /// Collects paths into a packing, failing on the first vertex collision.
    pub fn from_paths<I: IntoIterator<Item = P2Path>>(paths: I) -> Result<Self> {
        let mut packing = Self::new();
        for p in paths {
            packing.insert(p)?;
        }
        Ok(packing)
    }

    pub fn insert(&mut self, path: P2Path) -> Result<()> {
        let [a, b, c] = path.vertices();
        if a == b || b == c || a == c {
            return Err(Error::InvalidPacking(format!("{path:?} repeats a vertex")));
        }
        if let Some(v) = path
            .vertices()
            .into_iter()
            .find(|v| self.covered.contains(v))
        {
            return Err(Error::InvalidPacking(format!(
                "vertex {v} is covered twice"
            )));
        }
        self.covered.extend(path.vertices());
        let at = self
            .paths
            .partition_point(|p| p.min_vertex() < path.min_vertex());
        self.paths.insert(at, path);
        Ok(())
    }

    pub fn remove(&mut self, path: &P2Path) -> bool {
        match self.paths.iter().position(|p| p == path) {
            Some(i) => {
                self.paths.remove(i);
                for v in path.vertices() {
                    self.covered.remove(&v);
                }
                true
            }
            None => false,
        }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn paths(&self) -> &[P2Path] {
        &self.paths
    }

    pub fn iter(&self) -> core::slice::Iter<'_, P2Path> {
        self.paths.iter()
    }

    /// `V(P)`.
    pub fn covered(&self) -> &VertexSet {
        &self.covered
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.covered.contains(&v)
    }

    pub fn contains_path(&self, path: &P2Path) -> bool {
        self.paths.contains(path)
    }

    pub fn path_containing(&self, v: Vertex) -> Option<&P2Path> {
        if !self.covers(v) {
            return None;
        }
        self.paths.iter().find(|p| p.contains(v))
    }

    pub fn midpoints(&self) -> VertexSet {
        self.paths.iter().map(P2Path::mid).collect()
    }

    /// Checks that every path is a P2 of `g` and that paths are disjoint.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = VertexSet::new();
        for p in &self.paths {
            p.check_in(g)?;
            for v in p.vertices() {
                if !seen.insert(v) {
                    return Err(Error::InvalidPacking(format!(
                        "vertex {v} is covered twice"
                    )));
                }
            }
        }
        if seen != self.covered || seen.len() != 3 * self.paths.len() {
            return Err(Error::InvalidPacking("covered set out of sync".into()));
        }
        Ok(())
    }
}

impl fmt::Debug for Packing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.paths.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a Packing {
    type Item = &'a P2Path;
    type IntoIter = core::slice::Iter<'a, P2Path>;

    fn into_iter(self) -> Self::IntoIter {
        self.paths.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn set(vs: &[Vertex]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn builds_simple_graph() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2), (0, 1)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn neighborhood_of_sets() {
        let p = path_graph(3);
        assert_eq!(neighbors_of_set(&p, &set(&[1])).unwrap(), set(&[0, 2]));
        assert!(neighbors_of_set(&p, &set(&[0, 1, 2])).unwrap().is_empty());

        let cycle = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(
            neighbors_of_set(&cycle, &set(&[0, 3])).unwrap(),
            set(&[1, 2, 4, 5])
        );
        assert!(neighbors_of_set(&p, &set(&[7])).is_err());
    }

    #[test]
    fn components_after_removal() {
        let p = path_graph(4);
        assert_eq!(
            components_outside(&p, &set(&[1])).unwrap(),
            vec![set(&[0]), set(&[2, 3])]
        );
        assert!(components_outside(&p, &set(&[0, 1, 2, 3]))
            .unwrap()
            .is_empty());

        // 2x3 grid: top row 0-1-2, bottom row 3-4-5, rungs 0-3, 1-4, 2-5.
        let grid =
            Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(
            components_outside(&grid, &set(&[1, 4])).unwrap(),
            vec![set(&[0, 3]), set(&[2, 5])]
        );
    }

    #[test]
    fn induced_subgraph_reindexes() {
        let g = path_graph(5);
        let (h, map) = g.without(&set(&[2]));
        assert_eq!(map, vec![0, 1, 3, 4]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn packing_rejects_overlap_and_non_edges() {
        let g = path_graph(6);
        let mut p = Packing::new();
        p.insert(P2Path::new(2, 1, 0)).unwrap();
        assert_eq!(p.paths()[0].e1(), 0);
        assert!(p.insert(P2Path::new(2, 3, 4)).is_err());
        p.insert(P2Path::new(3, 4, 5)).unwrap();
        p.validate(&g).unwrap();
        assert_eq!(p.covered().len(), 6);

        let bad = Packing::from_paths([P2Path::new(0, 2, 4)]).unwrap();
        assert!(bad.validate(&g).is_err());
        assert!(p.remove(&P2Path::new(0, 1, 2)));
        assert_eq!(p.len(), 1);
        assert!(!p.covers(0));
    }
}

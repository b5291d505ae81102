//! Rebuilding a packing from partial information with one bipartite
//! matching: either the set of midpoints or the endpoint pair of each path.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, P2Path, Packing, Vertex, VertexSet};
use crate::matching::{max_matching, BipartiteGraph};

/// A packing whose midpoint set is exactly `mids`, if one exists.
///
/// Each midpoint gets two slots; slots are matched to non-midpoint
/// neighbors, and a midpoint's two partners become its endpoints.
pub fn packing_from_midpoints(g: &Graph, mids: &VertexSet) -> Option<Packing> {
    if mids.iter().any(|&v| v >= g.n() || g.degree(v) < 2) {
        return None;
    }
    let mut right_of = vec![usize::MAX; g.n()];
    let mut right_vertices = Vec::new();
    for v in g.vertices().filter(|v| !mids.contains(v)) {
        right_of[v] = right_vertices.len();
        right_vertices.push(v);
    }
    let mid_list: Vec<Vertex> = mids.iter().copied().collect();
    let adj: Vec<Vec<usize>> = mid_list
        .iter()
        .flat_map(|&m| {
            let slot: Vec<usize> = g
                .neighbors(m)
                .iter()
                .filter_map(|&u| (right_of[u] != usize::MAX).then_some(right_of[u]))
                .collect();
            [slot.clone(), slot]
        })
        .collect();
    let b = BipartiteGraph::new(right_vertices.len(), adj).ok()?;
    let m = max_matching(&b);
    if !m.saturates_left() {
        return None;
    }
    let paths = mid_list.iter().enumerate().map(|(i, &mid)| {
        let a = right_vertices[m.of_left(2 * i).unwrap()];
        let c = right_vertices[m.of_left(2 * i + 1).unwrap()];
        P2Path::new(a, mid, c)
    });
    Packing::from_paths(paths).ok()
}

/// A packing in which `pairs[i]` are the endpoints of the `i`-th path, if
/// one exists. Fails if an endpoint appears twice.
///
/// Pairs are matched to common neighbors outside the endpoint set; the
/// matched vertex becomes the midpoint.
pub fn packing_from_endpoint_pairs(
    g: &Graph,
    pairs: &[(Vertex, Vertex)],
) -> Result<Option<Packing>> {
    let mut endpoint = vec![false; g.n()];
    for &(a, b) in pairs {
        for v in [a, b] {
            g.check_vertex(v)?;
            if endpoint[v] {
                return Err(Error::DuplicateEndpoint(v));
            }
            endpoint[v] = true;
        }
    }
    Ok(match_endpoint_pairs(g, pairs, &endpoint))
}

/// Matching step of [`packing_from_endpoint_pairs`] for already validated
/// input; `endpoint` marks every vertex used by some pair.
pub(crate) fn match_endpoint_pairs(
    g: &Graph,
    pairs: &[(Vertex, Vertex)],
    endpoint: &[bool],
) -> Option<Packing> {
    let mut adj = Vec::with_capacity(pairs.len());
    for &(a, b) in pairs {
        let common = common_neighbors(g, a, b)
            .filter(|&v| !endpoint[v])
            .collect::<Vec<_>>();
        if common.is_empty() {
            return None;
        }
        adj.push(common);
    }
    let b = BipartiteGraph::new(g.n(), adj).ok()?;
    let m = max_matching(&b);
    if !m.saturates_left() {
        return None;
    }
    let paths = pairs
        .iter()
        .enumerate()
        .map(|(i, &(a, c))| P2Path::new(a, m.of_left(i).unwrap(), c));
    Packing::from_paths(paths).ok()
}

/// Sorted intersection of two adjacency lists.
pub(crate) fn common_neighbors(
    g: &Graph,
    a: Vertex,
    b: Vertex,
) -> impl Iterator<Item = Vertex> + '_ {
    let (na, nb) = (g.neighbors(a), g.neighbors(b));
    let mut j = 0;
    na.iter().copied().filter(move |&v| {
        while j < nb.len() && nb[j] < v {
            j += 1;
        }
        j < nb.len() && nb[j] == v
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn single_midpoint() {
        let g = graph(3, &[(0, 2), (2, 1)]);
        let p = packing_from_midpoints(&g, &[2].into_iter().collect()).unwrap();
        assert_eq!(p.paths(), &[P2Path::new(0, 2, 1)]);
    }

    #[test]
    fn adjacent_midpoints_on_four_path() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            packing_from_midpoints(&g, &[1, 2].into_iter().collect()),
            None
        );
        assert!(packing_from_midpoints(&g, &VertexSet::new())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn endpoint_pair_in_triangle() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let p = packing_from_endpoint_pairs(&g, &[(0, 2)]).unwrap().unwrap();
        assert_eq!(p.paths(), &[P2Path::new(0, 1, 2)]);
    }

    #[test]
    fn endpoint_pair_without_common_neighbor() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(packing_from_endpoint_pairs(&g, &[(0, 3)]).unwrap(), None);
        // The only common neighbor of 0 and 2 is an endpoint of another pair.
        let g = graph(4, &[(0, 1), (1, 2), (1, 3)]);
        assert_eq!(
            packing_from_endpoint_pairs(&g, &[(0, 2), (1, 3)]).unwrap(),
            None
        );
    }

    #[test]
    fn duplicate_endpoint_is_an_error() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            packing_from_endpoint_pairs(&g, &[(0, 2), (2, 3)]),
            Err(Error::DuplicateEndpoint(2))
        );
    }

    #[test]
    fn common_neighbor_merge() {
        let g = graph(6, &[(0, 2), (0, 3), (0, 5), (1, 3), (1, 4), (1, 5)]);
        assert_eq!(common_neighbors(&g, 0, 1).collect::<Vec<_>>(), vec![3, 5]);
    }
}

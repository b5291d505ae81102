//! Maximal packings and the two local-improvement rules.
//!
//! For a maximal packing `P`, every component of `G - V(P)` is a single
//! vertex (a Q0-vertex) or a single edge (a Q1-edge). Rule 1 trades two
//! Q0-vertices hanging off one path for a leftover edge; Rule 2 turns two
//! Q1-edges hanging off one path into an extra path. At the fixpoint the
//! packing satisfies the four attachment properties checked by
//! [`check_properties`].

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{components_avoiding, ordered, Graph, P2Path, Packing, Vertex, VertexSet};

/// Singleton and two-vertex components of `G - V(P)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LeftoverClassification {
    pub q0: VertexSet,
    /// Each edge as `(smaller, larger)`, sorted.
    pub q1: Vec<(Vertex, Vertex)>,
}

impl LeftoverClassification {
    pub fn q1_vertex_count(&self) -> usize {
        2 * self.q1.len()
    }
}

/// Extends `base` to a maximal packing. Vertices are scanned in ascending
/// order; an uncovered vertex with two uncovered neighbors becomes the
/// midpoint of a path through its two smallest such neighbors.
///
/// `base` must be a valid packing of `g`.
pub fn greedy_maximal(g: &Graph, base: &Packing) -> Packing {
    let mut packing = base.clone();
    let mut covered = vec![false; g.n()];
    for &v in base.covered() {
        covered[v] = true;
    }
    for v in g.vertices() {
        if covered[v] {
            continue;
        }
        let mut free = g.neighbors(v).iter().copied().filter(|&u| !covered[u]);
        if let (Some(a), Some(b)) = (free.next(), free.next()) {
            for x in [a, v, b] {
                covered[x] = true;
            }
            packing
                .insert(P2Path::new(a, v, b))
                .expect("greedy path only uses uncovered vertices");
        }
    }
    packing
}

/// Splits `G - V(P)` into Q0-vertices and Q1-edges; fails if some leftover
/// component has three or more vertices, i.e. `p` is not maximal.
pub fn classify_leftover(g: &Graph, p: &Packing) -> Result<LeftoverClassification> {
    let mut blocked = vec![false; g.n()];
    for &v in p.covered() {
        g.check_vertex(v)?;
        blocked[v] = true;
    }
    let mut lc = LeftoverClassification::default();
    for comp in components_avoiding(g, &blocked) {
        match comp[..] {
            [v] => {
                lc.q0.insert(v);
            }
            [a, b] => lc.q1.push((a, b)),
            _ => {
                return Err(Error::NotMaximal {
                    vertex: comp[0],
                    size: comp.len(),
                })
            }
        }
    }
    lc.q1.sort_unstable();
    Ok(lc)
}

/// Lookup tables for one classification.
struct Leftover {
    is_q0: Vec<bool>,
    q1_of: Vec<Option<usize>>,
}

impl Leftover {
    fn new(n: usize, lc: &LeftoverClassification) -> Self {
        let mut is_q0 = vec![false; n];
        let mut q1_of = vec![None; n];
        for &v in &lc.q0 {
            is_q0[v] = true;
        }
        for (i, &(a, b)) in lc.q1.iter().enumerate() {
            q1_of[a] = Some(i);
            q1_of[b] = Some(i);
        }
        Self { is_q0, q1_of }
    }
}

/// `(q, x)`: Q0-vertex `q` adjacent to path vertex `x`, sorted.
fn q0_attachments(g: &Graph, path: &P2Path, left: &Leftover) -> Vec<(Vertex, Vertex)> {
    let mut out: Vec<(Vertex, Vertex)> = path
        .vertices()
        .into_iter()
        .flat_map(|x| {
            g.neighbors(x)
                .iter()
                .filter(|&&q| left.is_q0[q])
                .map(move |&q| (q, x))
        })
        .collect();
    out.sort_unstable();
    out
}

/// `(edge index, x, endpoint)`: the Q1-edge touches path vertex `x` through
/// `endpoint` (the smaller one if both are adjacent to `x`), sorted.
fn q1_attachments(g: &Graph, path: &P2Path, left: &Leftover) -> Vec<(usize, Vertex, Vertex)> {
    let mut out: Vec<(usize, Vertex, Vertex)> = Vec::new();
    for x in path.vertices() {
        for &u in g.neighbors(x) {
            if let Some(e) = left.q1_of[u] {
                match out.iter_mut().find(|(oe, ox, _)| *oe == e && *ox == x) {
                    Some(entry) => entry.2 = entry.2.min(u),
                    None => out.push((e, x, u)),
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// First pair `i < j` (lexicographic) whose entries differ in both keys.
fn first_disjoint_pair<T: Copy, A: PartialEq, B: PartialEq>(
    items: &[T],
    key: impl Fn(&T) -> (A, B),
) -> Option<(T, T)> {
    for (i, a) in items.iter().enumerate() {
        let (ka, xa) = key(a);
        for b in &items[i + 1..] {
            let (kb, xb) = key(b);
            if ka != kb && xa != xb {
                return Some((*a, *b));
            }
        }
    }
    None
}

fn third_vertex(path: &P2Path, a: Vertex, b: Vertex) -> Vertex {
    path.vertices()
        .into_iter()
        .find(|&v| v != a && v != b)
        .expect("a P2 has three distinct vertices")
}

/// Path edge test restricted to the two edges of `path`.
fn path_adjacent(path: &P2Path, a: Vertex, b: Vertex) -> bool {
    path.edges().contains(&ordered(a, b))
}

fn refresh(g: &Graph, p: &Packing) -> Result<(Packing, LeftoverClassification)> {
    let p = greedy_maximal(g, p);
    let lc = classify_leftover(g, &p)?;
    Ok((p, lc))
}

/// Rule 1: a path with two of its vertices adjacent to two different
/// Q0-vertices. With `u ~ pa` and `w ~ pb`, the path is replaced by
/// `w - pb - pc` where `pc` is the remaining vertex and `pb pc` is a path
/// edge; `u` and `pa` drop out and form a leftover edge. When both role
/// assignments work, the attachment at the smaller path vertex is kept.
///
/// The result is re-maximalized and re-classified.
pub fn apply_rule1(
    g: &Graph,
    p: &Packing,
    lc: &LeftoverClassification,
) -> Result<Option<(Packing, LeftoverClassification)>> {
    let left = Leftover::new(g.n(), lc);
    for path in p.paths() {
        let att = q0_attachments(g, path, &left);
        let Some(((u, pa), (w, pb))) = first_disjoint_pair(&att, |&(q, x)| (q, x)) else {
            continue;
        };
        let pc = third_vertex(path, pa, pb);
        // Candidate (kept Q0-vertex, kept path vertex).
        let keep_b = path_adjacent(path, pb, pc).then_some((w, pb));
        let keep_a = path_adjacent(path, pa, pc).then_some((u, pa));
        let (q, x) = match (keep_a, keep_b) {
            (Some(a), Some(b)) => {
                if a.1 < b.1 {
                    a
                } else {
                    b
                }
            }
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => {
                return Err(Error::Internal(format!(
                    "rule 1 found no orientation on {path:?}"
                )))
            }
        };
        let mut next = p.clone();
        next.remove(path);
        next.insert(P2Path::new(q, x, pc))?;
        return refresh(g, &next).map(Some);
    }
    Ok(None)
}

/// Rule 2: a path with two of its vertices adjacent to two different
/// Q1-edges. With `u1 ~ pa` (edge `u1 u2`) and `w1 ~ pb` (edge `w1 w2`), the
/// path is replaced by `u2 - u1 - pa` and `w2 - w1 - pb`; the third path
/// vertex is freed. The packing grows by one before re-maximalization.
pub fn apply_rule2(
    g: &Graph,
    p: &Packing,
    lc: &LeftoverClassification,
) -> Result<Option<(Packing, LeftoverClassification)>> {
    let left = Leftover::new(g.n(), lc);
    for path in p.paths() {
        let att = q1_attachments(g, path, &left);
        let Some(((ea, pa, u1), (eb, pb, w1))) = first_disjoint_pair(&att, |&(e, x, _)| (e, x))
        else {
            continue;
        };
        let other = |e: usize, v: Vertex| {
            let (a, b) = lc.q1[e];
            if a == v {
                b
            } else {
                a
            }
        };
        let mut next = p.clone();
        next.remove(path);
        next.insert(P2Path::new(other(ea, u1), u1, pa))?;
        next.insert(P2Path::new(other(eb, w1), w1, pb))?;
        return refresh(g, &next).map(Some);
    }
    Ok(None)
}

/// Fixpoint of Rules 1 and 2 with counters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced {
    pub packing: Packing,
    pub leftover: LeftoverClassification,
    pub rule1_applications: usize,
    pub rule2_applications: usize,
}

/// Applies Rule 1 (preferred) and Rule 2 until neither fires. `p` must be
/// maximal in `g`.
pub fn reduce_exhaustive(g: &Graph, p: &Packing) -> Result<Reduced> {
    let mut packing = p.clone();
    let mut leftover = classify_leftover(g, &packing)?;
    let (mut rule1, mut rule2) = (0, 0);
    let n = g.n();
    let limit = 2 * n * (n / 3 + 1) + 2;
    for _ in 0..=limit {
        if let Some((np, nl)) = apply_rule1(g, &packing, &leftover)? {
            (packing, leftover) = (np, nl);
            rule1 += 1;
        } else if let Some((np, nl)) = apply_rule2(g, &packing, &leftover)? {
            (packing, leftover) = (np, nl);
            rule2 += 1;
        } else {
            return Ok(Reduced {
                packing,
                leftover,
                rule1_applications: rule1,
                rule2_applications: rule2,
            });
        }
    }
    Err(Error::Internal(format!(
        "rules 1-2 did not reach a fixpoint within {limit} applications"
    )))
}

/// The four attachment properties of a rule-free packing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AttachmentProperty {
    /// Several Q0-vertices adjacent to a path all attach at one path vertex.
    Q0SingleAttachment,
    /// Several path vertices adjacent to Q0-vertices all see one Q0-vertex.
    Q0SingleWitness,
    /// Several Q1-edges adjacent to a path all attach at one path vertex.
    Q1SingleAttachment,
    /// Several path vertices adjacent to Q1-edges all see one Q1-edge.
    Q1SingleWitness,
}

/// Every (path, property) pair that fails.
pub fn property_violations(
    g: &Graph,
    p: &Packing,
    lc: &LeftoverClassification,
) -> Vec<(P2Path, AttachmentProperty)> {
    let left = Leftover::new(g.n(), lc);
    let mut out = Vec::new();
    for path in p.paths() {
        let mut q0s = VertexSet::new();
        let mut q0_hosts = VertexSet::new();
        let mut q1s = VertexSet::new();
        let mut q1_hosts = VertexSet::new();
        for x in path.vertices() {
            for &u in g.neighbors(x) {
                if left.is_q0[u] {
                    q0s.insert(u);
                    q0_hosts.insert(x);
                }
                if let Some(e) = left.q1_of[u] {
                    q1s.insert(e);
                    q1_hosts.insert(x);
                }
            }
        }
        if q0s.len() > 1 && q0_hosts.len() != 1 {
            out.push((*path, AttachmentProperty::Q0SingleAttachment));
        }
        if q0_hosts.len() > 1 && q0s.len() != 1 {
            out.push((*path, AttachmentProperty::Q0SingleWitness));
        }
        if q1s.len() > 1 && q1_hosts.len() != 1 {
            out.push((*path, AttachmentProperty::Q1SingleAttachment));
        }
        if q1_hosts.len() > 1 && q1s.len() != 1 {
            out.push((*path, AttachmentProperty::Q1SingleWitness));
        }
    }
    out
}

/// True iff all four attachment properties hold for every path.
pub fn check_properties(g: &Graph, p: &Packing, lc: &LeftoverClassification) -> bool {
    property_violations(g, p, lc).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn packing(paths: &[(Vertex, Vertex, Vertex)]) -> Packing {
        Packing::from_paths(paths.iter().map(|&(a, m, b)| P2Path::new(a, m, b))).unwrap()
    }

    fn path_graph(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn greedy_on_small_graphs() {
        let p = greedy_maximal(&path_graph(6), &Packing::new());
        assert_eq!(p, packing(&[(0, 1, 2), (3, 4, 5)]));
        let k3 = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(greedy_maximal(&k3, &Packing::new()).len(), 1);
        assert!(greedy_maximal(&Graph::empty(4), &Packing::new()).is_empty());
    }

    #[test]
    fn greedy_keeps_base() {
        let g = path_graph(6);
        let base = packing(&[(1, 2, 3)]);
        let p = greedy_maximal(&g, &base);
        assert!(p.contains_path(&P2Path::new(1, 2, 3)));
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn classify_paths() {
        let p4 = path_graph(4);
        let lc = classify_leftover(&p4, &packing(&[(0, 1, 2)])).unwrap();
        assert_eq!(lc.q0, [3].into_iter().collect());
        assert!(lc.q1.is_empty());

        let p5 = path_graph(5);
        let lc = classify_leftover(&p5, &packing(&[(1, 2, 3)])).unwrap();
        assert_eq!(lc.q0, [0, 4].into_iter().collect());
        let lc = classify_leftover(&p5, &packing(&[(0, 1, 2)])).unwrap();
        assert!(lc.q0.is_empty());
        assert_eq!(lc.q1, vec![(3, 4)]);

        assert_eq!(
            classify_leftover(&p5, &Packing::new()),
            Err(Error::NotMaximal { vertex: 0, size: 5 })
        );
    }

    // Path 1-2-3 with Q0-vertices 4 and 5; vertex 0 unused.
    fn fig1(a: Vertex, b: Vertex) -> (Graph, Packing) {
        (
            graph(6, &[(1, 2), (2, 3), (4, a), (5, b)]),
            packing(&[(1, 2, 3)]),
        )
    }

    #[test]
    fn rule1_endpoint_and_midpoint() {
        let (g, p) = fig1(1, 2);
        let lc = classify_leftover(&g, &p).unwrap();
        let (np, nlc) = apply_rule1(&g, &p, &lc).unwrap().unwrap();
        assert_eq!(np, packing(&[(5, 2, 3)]));
        assert_eq!(nlc.q1, vec![(1, 4)]);
        assert!(nlc.q0.contains(&0));
    }

    #[test]
    fn rule1_both_endpoints() {
        let (g, p) = fig1(1, 3);
        let lc = classify_leftover(&g, &p).unwrap();
        let (np, nlc) = apply_rule1(&g, &p, &lc).unwrap().unwrap();
        assert_eq!(np, packing(&[(4, 1, 2)]));
        assert_eq!(nlc.q1, vec![(3, 5)]);
    }

    #[test]
    fn rule1_needs_two_q0_vertices() {
        let g = graph(5, &[(1, 2), (2, 3), (4, 1), (4, 2)]);
        let p = packing(&[(1, 2, 3)]);
        let lc = classify_leftover(&g, &p).unwrap();
        assert_eq!(apply_rule1(&g, &p, &lc).unwrap(), None);
    }

    #[test]
    fn rule2_on_both_sides() {
        // Q1-edges {4,5} and {6,7}.
        let g = graph(8, &[(1, 2), (2, 3), (4, 5), (6, 7), (4, 1), (6, 2)]);
        let p = packing(&[(1, 2, 3)]);
        let lc = classify_leftover(&g, &p).unwrap();
        let (np, nlc) = apply_rule2(&g, &p, &lc).unwrap().unwrap();
        assert_eq!(np, packing(&[(5, 4, 1), (7, 6, 2)]));
        assert!(nlc.q0.contains(&3));

        let g = graph(8, &[(1, 2), (2, 3), (4, 5), (6, 7), (4, 1), (6, 3)]);
        let lc = classify_leftover(&g, &p).unwrap();
        let (np, nlc) = apply_rule2(&g, &p, &lc).unwrap().unwrap();
        assert_eq!(np, packing(&[(5, 4, 1), (7, 6, 3)]));
        assert!(nlc.q0.contains(&2));
    }

    #[test]
    fn rule2_same_attachment_vertex() {
        let g = graph(8, &[(1, 2), (2, 3), (4, 5), (6, 7), (4, 2), (6, 2)]);
        let p = packing(&[(1, 2, 3)]);
        let lc = classify_leftover(&g, &p).unwrap();
        assert_eq!(apply_rule2(&g, &p, &lc).unwrap(), None);
        assert!(check_properties(&g, &p, &lc));
    }

    #[test]
    fn reduce_reaches_fixpoint() {
        let (g, p) = fig1(1, 2);
        let r = reduce_exhaustive(&g, &p).unwrap();
        assert_eq!(r.rule1_applications, 1);
        assert_eq!(r.rule2_applications, 0);
        assert!(check_properties(&g, &r.packing, &r.leftover));
        assert_eq!(
            reduce_exhaustive(&g, &r.packing).unwrap().packing,
            r.packing
        );

        let g = graph(8, &[(1, 2), (2, 3), (4, 5), (6, 7), (4, 1), (6, 2)]);
        let r = reduce_exhaustive(&g, &packing(&[(1, 2, 3)])).unwrap();
        assert_eq!(r.packing.len(), 2);
        assert_eq!(r.rule2_applications, 1);
    }

    #[test]
    fn properties_detect_rule1_pattern() {
        let (g, p) = fig1(1, 2);
        let lc = classify_leftover(&g, &p).unwrap();
        assert!(!check_properties(&g, &p, &lc));
        let v = property_violations(&g, &p, &lc);
        assert!(v.contains(&(P2Path::new(1, 2, 3), AttachmentProperty::Q0SingleWitness)));

        let g = path_graph(3);
        let p = packing(&[(0, 1, 2)]);
        let lc = classify_leftover(&g, &p).unwrap();
        assert!(check_properties(&g, &p, &lc));
    }
}

//! Exhaustive checks of the vertex-reuse lemmas for a maximal packing `P`
//! of size `j` and the `(j+1)`-packings that reuse as much of it as possible.
//!
//! `Q1` holds the `(j+1)`-packings with the most paths shared with `P`;
//! `Q2` keeps those members of `Q1` that share the most edges with `P`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::for_each_packing;
use crate::error::Result;
use crate::graph::{Graph, P2Path, Packing, Vertex};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtremalFamilies {
    pub q1: Vec<Packing>,
    pub q2: Vec<Packing>,
}

/// Computes both families by streaming over all `(j+1)`-packings. Empty
/// families mean no `(j+1)`-packing exists.
pub fn extremal_family(g: &Graph, p: &Packing, cap: usize) -> Result<ExtremalFamilies> {
    let in_p = edge_matrix(g.n(), p);
    let mut best_shared: Option<usize> = None;
    let mut q1: Vec<(usize, Packing)> = Vec::new();
    for_each_packing(g, p.len() + 1, cap, |paths| {
        let shared = paths.iter().filter(|q| p.contains_path(q)).count();
        match best_shared {
            Some(b) if shared < b => return,
            Some(b) if shared == b => {}
            _ => {
                best_shared = Some(shared);
                q1.clear();
            }
        }
        let edges = paths
            .iter()
            .flat_map(|q| q.edges())
            .filter(|&(u, v)| in_p[u * g.n() + v])
            .count();
        q1.push((
            edges,
            Packing::from_paths(paths.iter().copied()).expect("disjoint"),
        ));
    })?;
    let top = q1.iter().map(|(e, _)| *e).max();
    let q2 = q1
        .iter()
        .filter(|(e, _)| Some(*e) == top)
        .map(|(_, q)| q.clone())
        .collect();
    Ok(ExtremalFamilies {
        q1: q1.into_iter().map(|(_, q)| q).collect(),
        q2,
    })
}

fn edge_matrix(n: usize, p: &Packing) -> Vec<bool> {
    let mut m = vec![false; n * n];
    for (u, v) in p.iter().flat_map(|q| q.edges()) {
        m[u * n + v] = true;
    }
    m
}

/// `q` is foldable on `p` (relative to `big_q`): the midpoint of `q` is
/// `p_s` for some position `s` of `p = p_1 p_2 p_3`, and `p_{s+1}` or
/// `p_{s-1}` exists and lies outside `V(big_q)`.
pub fn is_foldable(q: &P2Path, p: &P2Path, big_q: &Packing) -> bool {
    let pv = p.vertices();
    let Some(s) = pv.iter().position(|&v| v == q.mid()) else {
        return false;
    };
    let outside = |i: usize| !big_q.covers(pv[i]);
    (s + 1 < 3 && outside(s + 1)) || (s > 0 && outside(s - 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    /// (a) every path of `P` keeps at least two vertices in `V(Q)`, `Q` in `Q1`.
    TwoVerticesReused,
    /// (b) every path of `P` not in `Q` meets two distinct paths of `Q`, `Q` in `Q1`.
    MeetsTwoPaths,
    /// (c) no path of `Q` is foldable, `Q` in `Q2`.
    NoFoldable,
    /// (d) a path of `P` with exactly two vertices in `V(Q)` has one of them
    /// as an endpoint of `Q`, `Q` in `Q2`.
    EndpointCut,
    /// (e) some `Q` in `Q2` reuses at least `ceil(2.5 j)` vertices of `V(P)`.
    Reuse,
}

impl Claim {
    pub const ALL: [Claim; 5] = [
        Claim::TwoVerticesReused,
        Claim::MeetsTwoPaths,
        Claim::NoFoldable,
        Claim::EndpointCut,
        Claim::Reuse,
    ];

    pub fn label(self) -> char {
        match self {
            Claim::TwoVerticesReused => 'a',
            Claim::MeetsTwoPaths => 'b',
            Claim::NoFoldable => 'c',
            Claim::EndpointCut => 'd',
            Claim::Reuse => 'e',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub claim: Claim,
    /// The `(j+1)`-packing the claim failed for; `None` for (e), which
    /// fails for the family as a whole.
    pub witness: Option<Packing>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalReport {
    pub j: usize,
    pub q1_size: usize,
    pub q2_size: usize,
    /// `max |V(P) ∩ V(Q)|` over `Q2`, if `Q2` is non-empty.
    pub best_reuse: Option<usize>,
    /// `ceil(2.5 j)`.
    pub required_reuse: usize,
    pub violations: Vec<Violation>,
}

impl ExtremalReport {
    pub fn passed(&self, claim: Claim) -> bool {
        self.violations.iter().all(|v| v.claim != claim)
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ExtremalReport {
    /// One line per check, then one line per violation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for claim in Claim::ALL {
            let status = if self.passed(claim) { "ok" } else { "VIOLATED" };
            writeln!(f, "check {} {}", claim.label(), status)?;
        }
        for v in &self.violations {
            write!(f, "violation {}: {}", v.claim.label(), v.detail)?;
            if let Some(w) = &v.witness {
                write!(f, " in {w:?}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Runs checks (a) to (e) for the maximal packing `p`. Without a
/// `(j+1)`-packing all checks hold vacuously.
pub fn verify_extremal(g: &Graph, p: &Packing, cap: usize) -> Result<ExtremalReport> {
    let j = p.len();
    let fams = extremal_family(g, p, cap)?;
    let mut violations = Vec::new();

    for big_q in &fams.q1 {
        for path in p {
            let met = meeting_paths(path, big_q);
            let reused = path.vertices().iter().filter(|&&v| big_q.covers(v)).count();
            if reused < 2 {
                violations.push(Violation {
                    claim: Claim::TwoVerticesReused,
                    witness: Some(big_q.clone()),
                    detail: format!("{path:?} keeps {reused} vertices"),
                });
            }
            if !big_q.contains_path(path) && met.len() < 2 {
                violations.push(Violation {
                    claim: Claim::MeetsTwoPaths,
                    witness: Some(big_q.clone()),
                    detail: format!("{path:?} meets {} paths", met.len()),
                });
            }
        }
    }

    for big_q in &fams.q2 {
        for q in big_q {
            for path in p {
                if is_foldable(q, path, big_q) {
                    violations.push(Violation {
                        claim: Claim::NoFoldable,
                        witness: Some(big_q.clone()),
                        detail: format!("{q:?} folds on {path:?}"),
                    });
                }
            }
        }
        for path in p {
            let cut: Vec<Vertex> = path
                .vertices()
                .into_iter()
                .filter(|&v| big_q.covers(v))
                .collect();
            if cut.len() == 2 && !cut.iter().any(|&v| is_q_endpoint(v, big_q)) {
                violations.push(Violation {
                    claim: Claim::EndpointCut,
                    witness: Some(big_q.clone()),
                    detail: format!("{path:?} is cut at midpoints {cut:?}"),
                });
            }
        }
    }

    let required_reuse = (5 * j).div_ceil(2);
    let best_reuse = fams
        .q2
        .iter()
        .map(|q| p.covered().iter().filter(|&&v| q.covers(v)).count())
        .max();
    if let Some(best) = best_reuse {
        if best < required_reuse {
            violations.push(Violation {
                claim: Claim::Reuse,
                witness: None,
                detail: format!("best reuse {best} < {required_reuse}"),
            });
        }
    }

    Ok(ExtremalReport {
        j,
        q1_size: fams.q1.len(),
        q2_size: fams.q2.len(),
        best_reuse,
        required_reuse,
        violations,
    })
}

/// Paths of `big_q` sharing a vertex with `path`.
fn meeting_paths(path: &P2Path, big_q: &Packing) -> Vec<P2Path> {
    let mut out: Vec<P2Path> = path
        .vertices()
        .iter()
        .filter_map(|&v| big_q.path_containing(v).copied())
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn is_q_endpoint(v: Vertex, big_q: &Packing) -> bool {
    big_q.path_containing(v).is_some_and(|q| q.is_endpoint(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::ENUMERATION_CAP;

    fn graph(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn empty_packing_families_are_all_single_paths() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let fams = extremal_family(&g, &Packing::new(), ENUMERATION_CAP).unwrap();
        assert_eq!(fams.q1.len(), 2);
        assert_eq!(fams.q1, fams.q2);
        let report = verify_extremal(&g, &Packing::new(), ENUMERATION_CAP).unwrap();
        assert!(report.is_clean());
        assert_eq!(report.required_reuse, 0);
    }

    #[test]
    fn no_larger_packing_gives_empty_families() {
        let g = graph(3, &[(0, 1), (1, 2)]);
        let p = Packing::from_paths([P2Path::new(0, 1, 2)]).unwrap();
        let report = verify_extremal(&g, &p, ENUMERATION_CAP).unwrap();
        assert_eq!(
            (report.q1_size, report.q2_size, report.best_reuse),
            (0, 0, None)
        );
        assert!(report.is_clean());
    }

    #[test]
    fn six_path_reuses_everything() {
        // P = {1-2-3}; the only 2-packing is {0-1-2, 3-4-5}.
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let p = Packing::from_paths([P2Path::new(1, 2, 3)]).unwrap();
        let report = verify_extremal(&g, &p, ENUMERATION_CAP).unwrap();
        assert_eq!((report.q1_size, report.q2_size), (1, 1));
        assert_eq!(report.best_reuse, Some(3));
        assert_eq!(report.required_reuse, 3);
        assert!(report.is_clean(), "{report}");
    }

    #[test]
    fn foldable_definition() {
        let p = P2Path::new(0, 1, 2);
        // q's midpoint is p's midpoint, p_3 = 2 is outside V(Q).
        let q = P2Path::new(0, 1, 5);
        let big_q = Packing::from_paths([q]).unwrap();
        assert!(is_foldable(&q, &p, &big_q));
        // Both path neighbors of the midpoint inside V(Q).
        let q = P2Path::new(0, 1, 2);
        let big_q = Packing::from_paths([q]).unwrap();
        assert!(!is_foldable(&q, &p, &big_q));
        // q's midpoint is p_1 and p_2 lies in another path of Q.
        let q = P2Path::new(7, 0, 8);
        let big_q = Packing::from_paths([q, P2Path::new(1, 9, 10)]).unwrap();
        assert!(!is_foldable(&q, &p, &big_q));
        // Midpoint not on p at all.
        let q = P2Path::new(0, 9, 2);
        assert!(!is_foldable(&q, &p, &Packing::from_paths([q]).unwrap()));
    }

    #[test]
    fn report_lists_every_check() {
        let g = graph(3, &[(0, 1), (1, 2)]);
        let text = alloc::string::ToString::to_string(
            &verify_extremal(&g, &Packing::new(), ENUMERATION_CAP).unwrap(),
        );
        assert_eq!(text.lines().count(), 5);
        assert!(text.lines().all(|l| l.ends_with(" ok")));
    }
}

//! Double and fat crown decompositions: construction, validation, removal,
//! and lifting solutions of the reduced instance back.
//!
//! A double crown `(H, C, R)` has an independent crown `C = C0 + C' + C''`
//! and two perfect matchings `H <-> C'`, `H <-> C''`; each head vertex then
//! becomes the midpoint of a path through its two partners. A fat crown has
//! a crown made of disjoint K2s with `H` matched into distinct K2s; each head
//! vertex becomes the endpoint of a path through its K2.
//!
//! Both constructions run one bipartite matching and peel the crown off the
//! vertices reachable by alternating paths from unmatched crown candidates.
//! Every decomposition is validated before it is handed out.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{neighbors_of_set, Graph, P2Path, Packing, Vertex, VertexSet};
use crate::instance::Instance;
use crate::matching::{alternating_reachable, max_matching, BipartiteGraph};
use crate::reduce::LeftoverClassification;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrownKind {
    Double,
    Fat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Crown {
    Double {
        c0: VertexSet,
        c_prime: VertexSet,
        c_double_prime: VertexSet,
        /// head -> partner in `c_prime`
        m1: BTreeMap<Vertex, Vertex>,
        /// head -> partner in `c_double_prime`
        m2: BTreeMap<Vertex, Vertex>,
    },
    Fat {
        /// K2 components of the crown, each `(smaller, larger)`.
        pairs: Vec<(Vertex, Vertex)>,
        /// head -> matched vertex of one K2
        matching: BTreeMap<Vertex, Vertex>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrownDecomposition {
    pub head: VertexSet,
    pub crown: Crown,
    pub remainder: VertexSet,
}

impl CrownDecomposition {
    pub fn kind(&self) -> CrownKind {
        match self.crown {
            Crown::Double { .. } => CrownKind::Double,
            Crown::Fat { .. } => CrownKind::Fat,
        }
    }

    /// All crown vertices.
    pub fn crown_vertices(&self) -> VertexSet {
        match &self.crown {
            Crown::Double {
                c0,
                c_prime,
                c_double_prime,
                ..
            } => c0
                .iter()
                .chain(c_prime)
                .chain(c_double_prime)
                .copied()
                .collect(),
            Crown::Fat { pairs, .. } => pairs.iter().flat_map(|&(a, b)| [a, b]).collect(),
        }
    }

    /// The `|H|` paths that the crown contributes to any packing of the
    /// reduced graph.
    pub fn crown_paths(&self) -> Vec<P2Path> {
        match &self.crown {
            Crown::Double { m1, m2, .. } => self
                .head
                .iter()
                .map(|h| P2Path::new(m1[h], *h, m2[h]))
                .collect(),
            Crown::Fat { pairs, matching } => self
                .head
                .iter()
                .map(|h| {
                    let u = matching[h];
                    let &(a, b) = pairs
                        .iter()
                        .find(|&&(a, b)| a == u || b == u)
                        .expect("validated fat crown");
                    P2Path::new(*h, u, if a == u { b } else { a })
                })
                .collect(),
        }
    }

    /// Checks the partition, separation, and matching invariants.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: alloc::string::String| Err(Error::InvalidCrown(msg));
        let crown = self.crown_vertices();
        for v in self.head.iter().chain(&crown).chain(&self.remainder) {
            g.check_vertex(*v)?;
        }
        let total = self.head.len() + crown.len() + self.remainder.len();
        let union: VertexSet = self
            .head
            .iter()
            .chain(&crown)
            .chain(&self.remainder)
            .copied()
            .collect();
        if union.len() != total || total != g.n() {
            return bad(format!("H, C, R do not partition the {} vertices", g.n()));
        }
        if self.head.is_empty() {
            return bad("empty head".into());
        }
        for &c in &crown {
            if let Some(r) = g.neighbors(c).iter().find(|r| self.remainder.contains(r)) {
                return bad(format!(
                    "crown vertex {c} is adjacent to remainder vertex {r}"
                ));
            }
        }
        match &self.crown {
            Crown::Double {
                c0,
                c_prime,
                c_double_prime,
                m1,
                m2,
            } => {
                if c0.len() + c_prime.len() + c_double_prime.len() != crown.len() {
                    return bad("C0, C', C'' overlap".into());
                }
                for &c in &crown {
                    if let Some(d) = g.neighbors(c).iter().find(|d| crown.contains(d)) {
                        return bad(format!("crown is not independent: edge {c}-{d}"));
                    }
                }
                for (name, side, m) in [("C'", c_prime, m1), ("C''", c_double_prime, m2)] {
                    let keys: VertexSet = m.keys().copied().collect();
                    let vals: VertexSet = m.values().copied().collect();
                    if keys != self.head || &vals != side || side.len() != self.head.len() {
                        return bad(format!("matching onto {name} is not perfect"));
                    }
                    if let Some((h, c)) = m.iter().find(|(h, c)| !g.has_edge(**h, **c)) {
                        return bad(format!("matching pair {h}-{c} is not an edge"));
                    }
                }
            }
            Crown::Fat { pairs, matching } => {
                if crown.len() != 2 * pairs.len() {
                    return bad("crown K2s overlap".into());
                }
                for &(a, b) in pairs {
                    if !g.has_edge(a, b) {
                        return bad(format!("crown pair {a}-{b} is not an edge"));
                    }
                    let outside = |v: Vertex, mate: Vertex| {
                        g.neighbors(v)
                            .iter()
                            .find(|&&d| d != mate && crown.contains(&d))
                            .copied()
                    };
                    if let Some(d) = outside(a, b).or(outside(b, a)) {
                        return bad(format!("crown pair {a}-{b} touches crown vertex {d}"));
                    }
                }
                let keys: VertexSet = matching.keys().copied().collect();
                if keys != self.head {
                    return bad("fat matching does not cover the head".into());
                }
                let mut used = VertexSet::new();
                for (&h, &u) in matching {
                    if !g.has_edge(h, u) || !crown.contains(&u) {
                        return bad(format!("matching pair {h}-{u} is not a head-crown edge"));
                    }
                    let pair = pairs.iter().position(|&(a, b)| a == u || b == u).unwrap();
                    if !used.insert(pair) {
                        return bad(format!("two head vertices matched into K2 #{pair}"));
                    }
                }
            }
        }
        Ok(())
    }
}

fn remainder_of(g: &Graph, head: &VertexSet, crown: &VertexSet) -> VertexSet {
    g.vertices()
        .filter(|v| !head.contains(v) && !crown.contains(v))
        .collect()
}

/// Double crown with `H` inside `N(I)` and `C` inside `I` for an independent
/// set `I` with `|I| >= 2 |N(I)|`.
///
/// Each vertex of `I` is a left vertex; each vertex of `N(I)` has two right
/// copies. If the matching uses every copy, `H = N(I)` and `C = I`.
/// Otherwise the crown is everything reachable by alternating paths from the
/// unmatched vertices of `I`.
pub fn find_double_crown(g: &Graph, i_set: &VertexSet) -> Result<CrownDecomposition> {
    let nbrs = neighbors_of_set(g, i_set)?;
    if i_set.is_empty() {
        return Err(Error::Precondition("empty independent set".into()));
    }
    if let Some((a, b)) = i_set.iter().find_map(|&a| {
        g.neighbors(a)
            .iter()
            .find(|b| i_set.contains(b))
            .map(|&b| (a, b))
    }) {
        return Err(Error::Precondition(format!(
            "set is not independent: edge {a}-{b}"
        )));
    }
    if let Some(&v) = i_set.iter().find(|&&v| g.degree(v) == 0) {
        return Err(Error::Precondition(format!("{v} is isolated")));
    }
    if i_set.len() < 2 * nbrs.len() || nbrs.is_empty() {
        return Err(Error::Precondition(format!(
            "|I| = {} but |N(I)| = {}",
            i_set.len(),
            nbrs.len()
        )));
    }
    let left: Vec<Vertex> = i_set.iter().copied().collect();
    let heads: Vec<Vertex> = nbrs.iter().copied().collect();
    let head_index: BTreeMap<Vertex, usize> =
        heads.iter().enumerate().map(|(i, &h)| (h, i)).collect();
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .flat_map(|h| {
                    let i = head_index[h];
                    [2 * i, 2 * i + 1]
                })
                .collect()
        })
        .collect();
    let b = BipartiteGraph::new(2 * heads.len(), adj)?;
    let m = max_matching(&b);

    let (crown_left, head_copies): (VertexSet, VertexSet) = if m.saturates_right() {
        ((0..left.len()).collect(), (0..2 * heads.len()).collect())
    } else {
        let unmatched: VertexSet = (0..left.len())
            .filter(|&l| m.of_left(l).is_none())
            .collect();
        alternating_reachable(&b, &m, &unmatched)
    };

    let mut m1 = BTreeMap::new();
    let mut m2 = BTreeMap::new();
    for &copy in &head_copies {
        let h = heads[copy / 2];
        let partner = m
            .of_right(copy)
            .ok_or_else(|| Error::Internal(format!("head copy of {h} is unmatched")))?;
        let target = if copy % 2 == 0 { &mut m1 } else { &mut m2 };
        target.insert(h, left[partner]);
    }
    let head: VertexSet = m1.keys().chain(m2.keys()).copied().collect();
    let crown: VertexSet = crown_left.iter().map(|&l| left[l]).collect();
    let c_prime: VertexSet = m1.values().copied().collect();
    let c_double_prime: VertexSet = m2.values().copied().collect();
    let c0: VertexSet = crown
        .iter()
        .filter(|c| !c_prime.contains(c) && !c_double_prime.contains(c))
        .copied()
        .collect();
    let dec = CrownDecomposition {
        remainder: remainder_of(g, &head, &crown),
        head,
        crown: Crown::Double {
            c0,
            c_prime,
            c_double_prime,
            m1,
            m2,
        },
    };
    dec.validate(g)
        .map_err(|e| Error::Internal(format!("double crown construction: {e}")))?;
    Ok(dec)
}

/// Fat crown with `H` inside `N(V(J))` for a collection `J` of pairwise
/// non-adjacent K2s with `|J| >= |N(V(J))|`.
///
/// Each K2 is contracted to one left vertex; the right side is `N(V(J))`.
pub fn find_fat_crown(g: &Graph, j_set: &[(Vertex, Vertex)]) -> Result<CrownDecomposition> {
    if j_set.is_empty() {
        return Err(Error::Precondition("empty K2 collection".into()));
    }
    let pairs: Vec<(Vertex, Vertex)> = j_set
        .iter()
        .map(|&(a, b)| crate::graph::ordered(a, b))
        .collect();
    let members: VertexSet = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    if members.len() != 2 * pairs.len() {
        return Err(Error::Precondition("K2s are not vertex-disjoint".into()));
    }
    for &(a, b) in &pairs {
        g.check_vertex(a)?;
        g.check_vertex(b)?;
        if !g.has_edge(a, b) {
            return Err(Error::Precondition(format!("{a}-{b} is not an edge")));
        }
        for (v, mate) in [(a, b), (b, a)] {
            if let Some(d) = g
                .neighbors(v)
                .iter()
                .find(|&&d| d != mate && members.contains(&d))
            {
                return Err(Error::Precondition(format!(
                    "K2 {a}-{b} is adjacent to another K2 through {d}"
                )));
            }
        }
        if g.degree(a) + g.degree(b) == 2 {
            return Err(Error::Precondition(format!("K2 {a}-{b} is a component")));
        }
    }
    let nbrs = neighbors_of_set(g, &members)?;
    if pairs.len() < nbrs.len() || nbrs.is_empty() {
        return Err(Error::Precondition(format!(
            "|J| = {} but |N(J)| = {}",
            pairs.len(),
            nbrs.len()
        )));
    }
    let heads: Vec<Vertex> = nbrs.iter().copied().collect();
    let head_index: BTreeMap<Vertex, usize> =
        heads.iter().enumerate().map(|(i, &h)| (h, i)).collect();
    let adj: Vec<Vec<usize>> = pairs
        .iter()
        .map(|&(a, b)| {
            g.neighbors(a)
                .iter()
                .chain(g.neighbors(b))
                .filter_map(|h| head_index.get(h).copied())
                .collect()
        })
        .collect();
    let b = BipartiteGraph::new(heads.len(), adj)?;
    let m = max_matching(&b);

    let (crown_left, head_right): (VertexSet, VertexSet) = if m.saturates_right() {
        ((0..pairs.len()).collect(), (0..heads.len()).collect())
    } else {
        let unmatched: VertexSet = (0..pairs.len())
            .filter(|&l| m.of_left(l).is_none())
            .collect();
        alternating_reachable(&b, &m, &unmatched)
    };

    let mut matching = BTreeMap::new();
    for &r in &head_right {
        let h = heads[r];
        let l = m
            .of_right(r)
            .ok_or_else(|| Error::Internal(format!("head {h} is unmatched")))?;
        let (a, b) = pairs[l];
        let u = if g.has_edge(h, a) { a } else { b };
        matching.insert(h, u);
    }
    let crown_pairs: Vec<(Vertex, Vertex)> = crown_left.iter().map(|&l| pairs[l]).collect();
    let head: VertexSet = matching.keys().copied().collect();
    let crown: VertexSet = crown_pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    let dec = CrownDecomposition {
        remainder: remainder_of(g, &head, &crown),
        head,
        crown: Crown::Fat {
            pairs: crown_pairs,
            matching,
        },
    };
    dec.validate(g)
        .map_err(|e| Error::Internal(format!("fat crown construction: {e}")))?;
    Ok(dec)
}

/// Which bound triggers crown detection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrownThreshold {
    /// `|Q0| > 2k - 3` or `|Q1| > k - 1` for the instance parameter `k`;
    /// the packing must have fewer than `k` paths. A witness that then fails
    /// the crown size ratio is an internal error.
    Parameter(usize),
    /// The same bounds with `k` replaced by the packing size. Witnesses that
    /// miss the ratio are skipped.
    PackingSize,
}

/// Leftover items with at least two distinct neighbors on one path.
fn multi_attached<T: Copy>(
    g: &Graph,
    p: &Packing,
    items: &[T],
    vertices: impl Fn(T) -> [Option<Vertex>; 2],
) -> Vec<bool> {
    items
        .iter()
        .map(|&item| {
            let mut hits: BTreeMap<P2Path, VertexSet> = BTreeMap::new();
            for v in vertices(item).into_iter().flatten() {
                for &x in g.neighbors(v) {
                    if let Some(path) = p.path_containing(x) {
                        hits.entry(*path).or_default().insert(x);
                    }
                }
            }
            hits.values().any(|xs| xs.len() >= 2)
        })
        .collect()
}

/// Looks for a crown among the leftover vertices of a rule-free packing.
///
/// Too many Q0-vertices: drop the ones with two neighbors on a single path
/// or no neighbors at all, and build a double crown on the rest. Too many
/// Q1-edges: the same filtering, then a fat crown.
pub fn detect_crown_opportunity(
    g: &Graph,
    p: &Packing,
    lc: &LeftoverClassification,
    threshold: CrownThreshold,
) -> Result<Option<CrownDecomposition>> {
    let (bound, strict) = match threshold {
        CrownThreshold::Parameter(k) => {
            if p.len() >= k {
                return Err(Error::Precondition(format!(
                    "packing of size {} already reaches k = {k}",
                    p.len()
                )));
            }
            (k, true)
        }
        CrownThreshold::PackingSize => (p.len(), false),
    };

    if !lc.q0.is_empty() && lc.q0.len() + 3 > 2 * bound {
        let q0: Vec<Vertex> = lc.q0.iter().copied().collect();
        let multi = multi_attached(g, p, &q0, |v| [Some(v), None]);
        let rest: VertexSet = q0
            .iter()
            .zip(&multi)
            .filter(|(&v, &m)| !m && g.degree(v) > 0)
            .map(|(&v, _)| v)
            .collect();
        let nbrs = neighbors_of_set(g, &rest)?;
        if !rest.is_empty() && !nbrs.is_empty() && rest.len() >= 2 * nbrs.len() {
            return find_double_crown(g, &rest).map(Some);
        }
        if strict {
            return Err(Error::Internal(format!(
                "{} Q0-vertices but the filtered witness has |I| = {}, |N(I)| = {}",
                lc.q0.len(),
                rest.len(),
                nbrs.len()
            )));
        }
    }

    if !lc.q1.is_empty() && lc.q1.len() + 1 > bound {
        let multi = multi_attached(g, p, &lc.q1, |(a, b)| [Some(a), Some(b)]);
        let rest: Vec<(Vertex, Vertex)> = lc
            .q1
            .iter()
            .zip(&multi)
            .filter(|(&(a, b), &m)| !m && g.degree(a) + g.degree(b) > 2)
            .map(|(&e, _)| e)
            .collect();
        let members: VertexSet = rest.iter().flat_map(|&(a, b)| [a, b]).collect();
        let nbrs = neighbors_of_set(g, &members)?;
        if !rest.is_empty() && !nbrs.is_empty() && rest.len() >= nbrs.len() {
            return find_fat_crown(g, &rest).map(Some);
        }
        if strict {
            return Err(Error::Internal(format!(
                "{} Q1-edges but the filtered witness has |J| = {}, |N(J)| = {}",
                lc.q1.len(),
                rest.len(),
                nbrs.len()
            )));
        }
    }
    Ok(None)
}

/// Bookkeeping to turn a packing of a reduced graph into one of its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftRecord {
    /// Reduced vertex id -> parent vertex id.
    pub to_parent: Vec<Vertex>,
    /// Paths (in parent ids) added back on lifting.
    pub paths: Vec<P2Path>,
}

impl LiftRecord {
    /// Record for a plain vertex deletion.
    pub fn deletion(to_parent: Vec<Vertex>) -> Self {
        Self {
            to_parent,
            paths: Vec::new(),
        }
    }
}

/// Removes `H + C` and lowers `k` by `|H|` (saturating at zero).
pub fn apply_crown(inst: &Instance, c: &CrownDecomposition) -> Result<(Instance, LiftRecord)> {
    c.validate(&inst.graph)?;
    let removed: VertexSet = c.head.iter().copied().chain(c.crown_vertices()).collect();
    let (graph, to_parent) = inst.graph.without(&removed);
    let reduced = Instance {
        graph,
        k: inst.k.saturating_sub(c.head.len()),
    };
    Ok((
        reduced,
        LiftRecord {
            to_parent,
            paths: c.crown_paths(),
        },
    ))
}

/// Maps `p` to parent ids and adds the record's paths.
pub fn lift_solution(rec: &LiftRecord, p: &Packing) -> Result<Packing> {
    let mut out = Packing::new();
    for path in p {
        let mut bad = None;
        let mapped = path.map(|v| match rec.to_parent.get(v) {
            Some(&w) => w,
            None => {
                bad = Some(v);
                v
            }
        });
        if let Some(v) = bad {
            return Err(Error::Internal(format!(
                "vertex {v} unknown to the lift record"
            )));
        }
        out.insert(mapped)
            .map_err(|e| Error::Internal(format!("lifting: {e}")))?;
    }
    for &path in &rec.paths {
        out.insert(path)
            .map_err(|e| Error::Internal(format!("lifted crown path collides: {e}")))?;
    }
    Ok(out)
}

/// Lifts through a chain of records, last record first.
pub fn lift_through(chain: &[LiftRecord], p: &Packing) -> Result<Packing> {
    chain
        .iter()
        .rev()
        .try_fold(p.clone(), |acc, rec| lift_solution(rec, &acc))
}

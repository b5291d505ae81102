//! The kernelize-and-augment driver, standalone kernelization, and the
//! total edge cover dual.
//!
//! [`solve`] keeps a maximal rule-free packing, strips crowns whenever the
//! leftover gets too large relative to the packing, and otherwise grows the
//! packing by one path with [`augment`] until it reaches `k` or augmentation
//! fails.

use alloc::format;
use alloc::vec::Vec;

use crate::augment::augment;
use crate::crown::{
    apply_crown, detect_crown_opportunity, lift_through, CrownDecomposition, CrownThreshold,
    LiftRecord,
};
use crate::error::{Error, Result};
use crate::graph::{ordered, Graph, Packing, Vertex};
use crate::instance::{Answer, Instance, SolveResult, SolveStats, TraceEvent};
use crate::reduce::{classify_leftover, greedy_maximal, reduce_exhaustive, Reduced};

/// Current reduced instance plus everything needed to map back.
struct Working {
    inst: Instance,
    to_original: Vec<Vertex>,
    chain: Vec<LiftRecord>,
    trace: Vec<TraceEvent>,
    stats: SolveStats,
}

impl Working {
    fn new(inst: &Instance) -> Self {
        Self {
            to_original: inst.graph.vertices().collect(),
            inst: inst.clone(),
            chain: Vec::new(),
            trace: Vec::new(),
            stats: SolveStats::default(),
        }
    }

    fn graph(&self) -> &Graph {
        &self.inst.graph
    }

    fn push_record(&mut self, rec: LiftRecord) {
        self.to_original = rec.to_parent.iter().map(|&v| self.to_original[v]).collect();
        self.chain.push(rec);
    }

    /// Deletes components with fewer than three vertices; they cannot host a
    /// P2.
    fn clean(&mut self) {
        let removed: Vec<Vertex> = self
            .graph()
            .components()
            .into_iter()
            .filter(|c| c.len() < 3)
            .flatten()
            .collect();
        if removed.is_empty() {
            return;
        }
        let mut original: Vec<Vertex> = removed.iter().map(|&v| self.to_original[v]).collect();
        original.sort_unstable();
        let (graph, to_parent) = self.graph().without(&removed.into_iter().collect());
        self.inst.graph = graph;
        self.push_record(LiftRecord::deletion(to_parent));
        self.trace.push(TraceEvent::Cleaned { removed: original });
    }

    fn reduce(&mut self, p: &Packing) -> Result<Reduced> {
        let r = reduce_exhaustive(self.graph(), p)?;
        self.stats.rule1_applications += r.rule1_applications;
        self.stats.rule2_applications += r.rule2_applications;
        self.trace.push(TraceEvent::Reduced {
            packing_size: r.packing.len(),
            rule1: r.rule1_applications,
            rule2: r.rule2_applications,
        });
        Ok(r)
    }

    fn remove_crown(&mut self, c: &CrownDecomposition) -> Result<()> {
        let original = |vs: &mut dyn Iterator<Item = Vertex>| {
            let mut out: Vec<Vertex> = vs.map(|v| self.to_original[v]).collect();
            out.sort_unstable();
            out
        };
        let event = TraceEvent::Crown {
            kind: c.kind(),
            head: original(&mut c.head.iter().copied()),
            crown: original(&mut c.crown_vertices().into_iter()),
            k_before: self.inst.k,
        };
        let (reduced, rec) = apply_crown(&self.inst, c)?;
        self.inst = reduced;
        self.push_record(rec);
        self.trace.push(event);
        self.stats.crowns += 1;
        self.clean();
        Ok(())
    }

    fn lift(&self, p: &Packing) -> Result<Packing> {
        lift_through(&self.chain, p)
    }

    fn finish(self, answer: Answer, certificate: Option<Packing>) -> SolveResult {
        SolveResult {
            answer,
            certificate,
            kernel_trace: self.trace,
            stats: self.stats,
        }
    }
}

/// Decides whether `inst.graph` has `inst.k` disjoint P2s; a YES answer
/// carries a packing of at least `k` paths in the input graph.
///
/// Errors only signal broken internal invariants.
pub fn solve(inst: &Instance) -> Result<SolveResult> {
    let mut w = Working::new(inst);
    if w.inst.k == 0 {
        return Ok(w.finish(Answer::Yes, Some(Packing::new())));
    }
    w.clean();
    if w.graph().n() < 3 * w.inst.k {
        return Ok(w.finish(Answer::No, None));
    }
    let mut packing = greedy_maximal(w.graph(), &Packing::new());
    loop {
        let reduced = w.reduce(&packing)?;
        packing = reduced.packing;
        if packing.len() >= w.inst.k {
            let cert = w.lift(&packing)?;
            return Ok(w.finish(Answer::Yes, Some(cert)));
        }
        let crown = detect_crown_opportunity(
            w.graph(),
            &packing,
            &reduced.leftover,
            CrownThreshold::PackingSize,
        )?;
        if let Some(c) = crown {
            w.remove_crown(&c)?;
            if w.inst.k == 0 {
                let cert = w.lift(&Packing::new())?;
                return Ok(w.finish(Answer::Yes, Some(cert)));
            }
            if w.graph().n() < 3 * w.inst.k {
                return Ok(w.finish(Answer::No, None));
            }
            packing = greedy_maximal(w.graph(), &Packing::new());
            continue;
        }
        match augment(w.graph(), &packing) {
            Some(bigger) => {
                w.stats.augmentation_rounds += 1;
                w.trace.push(TraceEvent::Augmented {
                    from: packing.len(),
                });
                packing = greedy_maximal(w.graph(), &bigger);
            }
            None => return Ok(w.finish(Answer::No, None)),
        }
    }
}

/// A reduced instance together with what is needed to lift its solutions.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub instance: Instance,
    pub lift: Vec<LiftRecord>,
    /// Rule-free maximal packing of the kernel with fewer than `k` paths.
    pub packing: Packing,
    /// Kernel vertex id -> input vertex id.
    pub to_original: Vec<Vertex>,
    pub trace: Vec<TraceEvent>,
}

impl Kernel {
    /// Turns a packing of the kernel into one of the input graph.
    pub fn lift_solution(&self, p: &Packing) -> Result<Packing> {
        lift_through(&self.lift, p)
    }
}

#[derive(Clone, Debug)]
pub enum KernelOutcome {
    /// A packing with at least `k` paths turned up during reduction.
    EarlyYes {
        certificate: Packing,
        trace: Vec<TraceEvent>,
    },
    Reduced(Kernel),
}

/// Reduces to at most `max(0, 7k' - 8)` vertices, where `k'` is the reduced
/// parameter, unless a solution is found on the way.
pub fn kernelize(inst: &Instance) -> Result<KernelOutcome> {
    let mut w = Working::new(inst);
    if w.inst.k == 0 {
        return Ok(KernelOutcome::EarlyYes {
            certificate: Packing::new(),
            trace: w.trace,
        });
    }
    w.clean();
    loop {
        let start = greedy_maximal(w.graph(), &Packing::new());
        let reduced = w.reduce(&start)?;
        if reduced.packing.len() >= w.inst.k {
            let certificate = w.lift(&reduced.packing)?;
            return Ok(KernelOutcome::EarlyYes {
                certificate,
                trace: w.trace,
            });
        }
        let crown = detect_crown_opportunity(
            w.graph(),
            &reduced.packing,
            &reduced.leftover,
            CrownThreshold::Parameter(w.inst.k),
        )?;
        match crown {
            Some(c) => {
                w.remove_crown(&c)?;
                if w.inst.k == 0 {
                    let certificate = w.lift(&Packing::new())?;
                    return Ok(KernelOutcome::EarlyYes {
                        certificate,
                        trace: w.trace,
                    });
                }
            }
            None => {
                return Ok(KernelOutcome::Reduced(Kernel {
                    instance: w.inst,
                    lift: w.chain,
                    packing: reduced.packing,
                    to_original: w.to_original,
                    trace: w.trace,
                }))
            }
        }
    }
}

/// `max(0, 7k - 8)`.
pub fn kernel_vertex_bound(k: usize) -> usize {
    (7 * k).saturating_sub(8)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TecResult {
    pub answer: Answer,
    /// Total edge cover with at most `kd` edges, each `(smaller, larger)`;
    /// present iff YES.
    pub cover: Option<Vec<(Vertex, Vertex)>>,
    /// Rejected by the vertex-count bound alone.
    pub kernel_rejected: bool,
}

/// Is there a total edge cover with at most `kd` edges?
///
/// Graphs with more than `1.5 kd` vertices are rejected at once. Otherwise
/// the answer is YES iff a packing of `n - kd` paths exists, and the cover is
/// built from such a packing by hanging every uncovered vertex off a covered
/// neighbor.
pub fn solve_total_edge_cover(g: &Graph, kd: usize) -> Result<TecResult> {
    if let Some(c) = g.components().into_iter().find(|c| c.len() < 3) {
        return Err(Error::NoTotalEdgeCover(c[0]));
    }
    let no = |kernel_rejected| TecResult {
        answer: Answer::No,
        cover: None,
        kernel_rejected,
    };
    if 2 * g.n() > 3 * kd {
        return Ok(no(true));
    }
    let target = g.n().saturating_sub(kd);
    let result = solve(&Instance::new(g.clone(), target))?;
    let Some(cert) = result.certificate else {
        return Ok(no(false));
    };
    let packing = greedy_maximal(g, &cert);
    let cover = cover_from_packing(g, &packing)?;
    if cover.len() > kd {
        return Err(Error::Internal(format!(
            "cover of {} edges exceeds kd = {kd}",
            cover.len()
        )));
    }
    Ok(TecResult {
        answer: Answer::Yes,
        cover: Some(cover),
        kernel_rejected: false,
    })
}

/// Edges of a maximal packing plus one edge per uncovered vertex; `n - |p|`
/// edges in total. Every component of `g` must have at least three vertices.
pub fn cover_from_packing(g: &Graph, p: &Packing) -> Result<Vec<(Vertex, Vertex)>> {
    let lc = classify_leftover(g, p)?;
    let mut cover: Vec<(Vertex, Vertex)> = p.iter().flat_map(|path| path.edges()).collect();
    let covered_neighbor = |v: Vertex| g.neighbors(v).iter().copied().find(|&u| p.covers(u));
    for &v in &lc.q0 {
        let x = covered_neighbor(v).ok_or(Error::NoTotalEdgeCover(v))?;
        cover.push(ordered(v, x));
    }
    for &(a, b) in &lc.q1 {
        let (end, x) = [a, b]
            .into_iter()
            .filter_map(|e| covered_neighbor(e).map(|x| (e, x)))
            .min_by_key(|&(e, x)| (x, e))
            .ok_or(Error::NoTotalEdgeCover(a))?;
        cover.push((a, b));
        cover.push(ordered(end, x));
    }
    cover.sort_unstable();
    Ok(cover)
}

/// Covers every vertex and every component of the cover has two edges.
pub fn is_total_edge_cover(g: &Graph, edges: &[(Vertex, Vertex)]) -> bool {
    if edges.iter().any(|&(u, v)| !g.has_edge(u, v)) {
        return false;
    }
    let Ok(h) = Graph::from_edges(g.n(), edges.iter().copied()) else {
        return false;
    };
    if h.m() != edges.len() {
        return false;
    }
    h.components().iter().all(|c| {
        let degree_sum: usize = c.iter().map(|&v| h.degree(v)).sum();
        degree_sum >= 4
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::P2Path;
    use alloc::vec;

    fn graph(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn k_zero_is_yes() {
        let r = solve(&Instance::new(Graph::empty(3), 0)).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        assert_eq!(r.certificate, Some(Packing::new()));
    }

    #[test]
    fn two_edges_have_no_p2() {
        let g = graph(4, &[(0, 1), (2, 3)]);
        let r = solve(&Instance::new(g, 1)).unwrap();
        assert_eq!(r.answer, Answer::No);
        assert!(r.certificate.is_none());
    }

    #[test]
    fn too_few_vertices_skip_augmentation() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let r = solve(&Instance::new(g, 2)).unwrap();
        assert_eq!(r.answer, Answer::No);
        assert_eq!(r.stats.augmentation_rounds, 0);
    }

    #[test]
    fn finds_two_paths_on_six_path() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let r = solve(&Instance::new(g.clone(), 2)).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        let cert = r.certificate.unwrap();
        cert.validate(&g).unwrap();
        assert_eq!(cert.len(), 2);
    }

    #[test]
    fn kernelize_finds_early_yes() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        match kernelize(&Instance::new(g.clone(), 1)).unwrap() {
            KernelOutcome::EarlyYes { certificate, .. } => {
                certificate.validate(&g).unwrap();
                assert_eq!(certificate.len(), 1);
            }
            other => panic!("expected early yes, got {other:?}"),
        }
    }

    #[test]
    fn kernelize_strips_pendant_star() {
        // Hub 0 on a path 0-1-2 with six pendant leaves 3..8: k = 2.
        let mut edges = vec![(0, 1), (1, 2)];
        edges.extend((3..9).map(|l| (0, l)));
        let g = graph(9, &edges);
        let out = kernelize(&Instance::new(g.clone(), 2)).unwrap();
        match out {
            KernelOutcome::EarlyYes { certificate, trace } => {
                certificate.validate(&g).unwrap();
                assert!(certificate.len() >= 2);
                assert!(trace.iter().any(|e| matches!(e, TraceEvent::Crown { .. })));
            }
            KernelOutcome::Reduced(kernel) => {
                assert!(kernel.instance.graph.n() < g.n());
                assert!(kernel.instance.graph.n() <= kernel_vertex_bound(kernel.instance.k));
            }
        }
    }

    #[test]
    fn total_edge_cover_on_three_path() {
        let g = graph(3, &[(0, 1), (1, 2)]);
        let r = solve_total_edge_cover(&g, 2).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        assert_eq!(r.cover, Some(vec![(0, 1), (1, 2)]));
        let r = solve_total_edge_cover(&g, 1).unwrap();
        assert_eq!(r.answer, Answer::No);
        assert!(r.kernel_rejected);
    }

    #[test]
    fn total_edge_cover_needs_big_components() {
        let g = graph(5, &[(0, 1), (1, 2), (3, 4)]);
        assert_eq!(
            solve_total_edge_cover(&g, 5),
            Err(Error::NoTotalEdgeCover(3))
        );
    }

    #[test]
    fn cover_hangs_leftovers_on_packing() {
        // Path 0-1-2 with pendant 3 on 1 and pendant edge 4-5 on 2.
        let g = graph(6, &[(0, 1), (1, 2), (1, 3), (2, 4), (4, 5)]);
        let p = Packing::from_paths([P2Path::new(0, 1, 3)]).unwrap();
        let p = greedy_maximal(&g, &p);
        let cover = cover_from_packing(&g, &p).unwrap();
        assert_eq!(cover.len(), g.n() - p.len());
        assert!(is_total_edge_cover(&g, &cover));
        assert!(!is_total_edge_cover(&g, &[(0, 1), (1, 2)]));
    }
}

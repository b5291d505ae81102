//! Property checks of the solver against the exact oracles, over a corpus
//! of small graphs. Used by `p2pack verify` and the acceptance tests.
//!
//! Instances are checked in parallel; results are collected in corpus
//! order so the report never depends on scheduling.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::time::{Duration, Instant};

use itertools::Itertools;
use p2pack_core::augment::binomial_growth_check;
use p2pack_core::oracle::{
    all_p2s, for_each_packing, is_total_cover, max_packing_dp, min_total_edge_cover_bruteforce,
    verify_extremal, Claim, DP_CAP, ENUMERATION_CAP, TEC_EDGE_CAP,
};
use p2pack_core::reconstruct::{packing_from_endpoint_pairs, packing_from_midpoints};
use p2pack_core::reduce::{greedy_maximal, reduce_exhaustive};
use p2pack_core::solver::kernel_vertex_bound;
use p2pack_core::{
    kernelize, solve, solve_total_edge_cover, Graph, Instance, KernelOutcome, P2Path, Packing,
    TraceEvent, Vertex, VertexSet,
};
use rayon::prelude::*;
use thiserror::Error;

use crate::gen::{gen_gnp, gen_planted};
use crate::io::parse_dimacs;

#[derive(Debug, Clone)]
pub struct CorpusInstance {
    pub name: String,
    pub graph: Graph,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{path}: {msg}")]
    File { path: String, msg: String },
    #[error("corpus directory {0} holds no .dimacs or .col files")]
    Empty(String),
}

const GNP_PROBS: [f64; 3] = [0.15, 0.3, 0.5];

fn gnp_corpus(count: usize, sizes: std::ops::RangeInclusive<usize>) -> Vec<CorpusInstance> {
    let sizes: Vec<usize> = sizes.collect();
    (0..count)
        .map(|i| {
            let n = sizes[i % sizes.len()];
            let p = GNP_PROBS[(i / sizes.len()) % GNP_PROBS.len()];
            let seed = i as u64;
            CorpusInstance {
                name: format!("gnp-n{n}-p{p}-s{seed}"),
                graph: gen_gnp(n, p, seed).expect("valid probability"),
            }
        })
        .collect()
}

fn planted_corpus(count: usize, max_k: usize) -> Vec<CorpusInstance> {
    (0..count)
        .map(|i| {
            let k = 1 + i % max_k;
            // Capacity for k = 1 is a single pair.
            let extra = if k == 1 {
                i % 2
            } else {
                (i / max_k) % (2 * k + 3)
            };
            let seed = 1000 + i as u64;
            CorpusInstance {
                name: format!("planted-k{k}-x{extra}-s{seed}"),
                graph: gen_planted(k, extra, seed).expect("within capacity").graph,
            }
        })
        .collect()
}

/// 500 `G(n, p)` graphs with `n` in 6..=16 and `p` in {0.15, 0.3, 0.5},
/// plus 200 planted instances with `k` in 1..=4.
pub fn default_corpus() -> Vec<CorpusInstance> {
    let mut c = gnp_corpus(500, 6..=16);
    c.extend(planted_corpus(200, 4));
    c
}

/// A small slice of the same families, for smoke tests.
pub fn quick_corpus() -> Vec<CorpusInstance> {
    let mut c = gnp_corpus(33, 6..=12);
    c.extend(planted_corpus(12, 3));
    c
}

/// Every `*.dimacs` / `*.col` file of a directory, in file-name order.
pub fn load_corpus_dir(dir: &Path) -> Result<Vec<CorpusInstance>, CorpusError> {
    let err = |path: &Path, msg: String| CorpusError::File {
        path: path.display().to_string(),
        msg,
    };
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| err(dir, e.to_string()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "dimacs" || x == "col"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(CorpusError::Empty(dir.display().to_string()));
    }
    files
        .iter()
        .map(|path| {
            let text = std::fs::read_to_string(path).map_err(|e| err(path, e.to_string()))?;
            let parsed = parse_dimacs(&text).map_err(|e| err(path, e.to_string()))?;
            Ok(CorpusInstance {
                name: path.file_name().unwrap().to_string_lossy().into_owned(),
                graph: parsed.graph,
            })
        })
        .collect()
}

/// `default`, `quick`, or a directory of DIMACS files.
pub fn corpus_from_spec(spec: &str) -> Result<Vec<CorpusInstance>, CorpusError> {
    match spec {
        "default" => Ok(default_corpus()),
        "quick" => Ok(quick_corpus()),
        dir => load_corpus_dir(Path::new(dir)),
    }
}

/// Outcome of one acceptance criterion over a corpus.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    /// Individual checks performed.
    pub checked: usize,
    pub violations: Vec<String>,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl CriterionReport {
    fn new(id: u8, name: &'static str, budget_secs: Option<u64>) -> Self {
        Self {
            id,
            name,
            checked: 0,
            violations: Vec::new(),
            elapsed: Duration::ZERO,
            budget: budget_secs.map(Duration::from_secs),
        }
    }

    pub fn over_budget(&self) -> bool {
        self.budget.is_some_and(|b| self.elapsed > b)
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty() && !self.over_budget()
    }

    fn absorb(&mut self, part: Partial) {
        self.checked += part.checked;
        self.violations.extend(part.violations);
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} criterion {} {}: checks={} violations={} time={:.2}s",
            self.id,
            self.name,
            self.checked,
            self.violations.len(),
            self.elapsed.as_secs_f64()
        )?;
        if let Some(b) = self.budget {
            write!(f, " budget={}s", b.as_secs())?;
        }
        Ok(())
    }
}

/// Per-instance share of a criterion.
#[derive(Default)]
struct Partial {
    checked: usize,
    violations: Vec<String>,
}

impl Partial {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(msg());
        }
    }
}

fn dp(g: &Graph) -> Result<usize, String> {
    max_packing_dp(g, DP_CAP)
        .map(|(size, _)| size)
        .map_err(|e| format!("oracle: {e}"))
}

fn certificate_ok(g: &Graph, cert: &Packing, k: usize) -> bool {
    cert.len() >= k && cert.validate(g).is_ok()
}

/// Runs `check` on every instance in parallel and merges in corpus order.
fn over_corpus<F>(corpus: &[CorpusInstance], parts: usize, check: F) -> Vec<Partial>
where
    F: Fn(&CorpusInstance) -> Vec<Partial> + Sync + Send,
{
    let per_instance: Vec<Vec<Partial>> = corpus.par_iter().map(check).collect();
    let mut merged: Vec<Partial> = (0..parts).map(|_| Partial::default()).collect();
    for parts in per_instance {
        for (slot, part) in merged.iter_mut().zip(parts) {
            slot.checked += part.checked;
            slot.violations.extend(part.violations);
        }
    }
    merged
}

/// Criterion 1 (solve agrees with the subset DP for every `k` up to
/// `n / 3`) and criterion 9 (every crown removed during those runs keeps
/// the answer).
pub fn oracle_agreement(corpus: &[CorpusInstance]) -> (CriterionReport, CriterionReport) {
    let start = Instant::now();
    let mut agreement = CriterionReport::new(1, "oracle agreement", Some(300));
    let mut crowns = CriterionReport::new(9, "crown soundness", None);
    let mut merged = over_corpus(corpus, 2, |inst| {
        let (mut a, mut c) = (Partial::default(), Partial::default());
        let g = &inst.graph;
        let max = match dp(g) {
            Ok(m) => m,
            Err(e) => {
                a.check(false, || format!("{}: {e}", inst.name));
                return vec![a, c];
            }
        };
        for k in 1..=g.n() / 3 {
            match solve(&Instance::new(g.clone(), k)) {
                Err(e) => a.check(false, || format!("{} k={k}: solver error {e}", inst.name)),
                Ok(r) => {
                    a.check(r.answer.is_yes() == (max >= k), || {
                        format!(
                            "{} k={k}: solve {:?}, oracle max {max}",
                            inst.name, r.answer
                        )
                    });
                    if let Some(cert) = &r.certificate {
                        a.check(certificate_ok(g, cert, k), || {
                            format!("{} k={k}: bad certificate {cert:?}", inst.name)
                        });
                    }
                    replay_crowns(g, &r.kernel_trace, &inst.name, &mut c);
                }
            }
        }
        vec![a, c]
    });
    crowns.absorb(merged.pop().unwrap());
    agreement.absorb(merged.pop().unwrap());
    agreement.elapsed = start.elapsed();
    crowns.elapsed = agreement.elapsed;
    (agreement, crowns)
}

/// Re-runs the oracle before and after each crown removal recorded in a
/// trace: `max(G) >= k` iff `max(G - H - C) >= k - |H|`, and in fact
/// `max(G) = max(G - H - C) + |H|`.
fn replay_crowns(g: &Graph, trace: &[TraceEvent], name: &str, out: &mut Partial) {
    let mut removed = VertexSet::new();
    for event in trace {
        match event {
            TraceEvent::Cleaned { removed: r } => removed.extend(r),
            TraceEvent::Crown {
                head,
                crown,
                k_before,
                ..
            } => {
                let (before, _) = g.without(&removed);
                removed.extend(head.iter().chain(crown));
                let (after, _) = g.without(&removed);
                match (dp(&before), dp(&after)) {
                    (Ok(b), Ok(a)) => {
                        let k_after = k_before.saturating_sub(head.len());
                        out.check((b >= *k_before) == (a >= k_after), || {
                            format!(
                                "{name}: crown |H|={} changes the answer ({b} vs {a}, k={k_before})",
                                head.len()
                            )
                        });
                        out.check(b == a + head.len(), || {
                            format!(
                                "{name}: crown |H|={}: max {b} before, {a} after",
                                head.len()
                            )
                        });
                    }
                    (Err(e), _) | (_, Err(e)) => out.check(false, || format!("{name}: {e}")),
                }
            }
            _ => {}
        }
    }
}

/// Criterion 2: kernels respect `max(0, 7k' - 8)` and are equivalent to
/// the input; lifted solutions are valid.
pub fn kernel_bound(corpus: &[CorpusInstance]) -> CriterionReport {
    let start = Instant::now();
    let mut report = CriterionReport::new(2, "kernel bound", Some(60));
    let mut merged = over_corpus(corpus, 1, |inst| {
        let mut part = Partial::default();
        let g = &inst.graph;
        let name = &inst.name;
        let max = match dp(g) {
            Ok(m) => m,
            Err(e) => {
                part.check(false, || format!("{name}: {e}"));
                return vec![part];
            }
        };
        for k in 1..=g.n() / 3 + 1 {
            match kernelize(&Instance::new(g.clone(), k)) {
                Err(e) => part.check(false, || format!("{name} k={k}: kernelize error {e}")),
                Ok(KernelOutcome::EarlyYes { certificate, .. }) => {
                    part.check(certificate_ok(g, &certificate, k), || {
                        format!("{name} k={k}: bad early certificate")
                    });
                }
                Ok(KernelOutcome::Reduced(kernel)) => {
                    let kg = &kernel.instance.graph;
                    let kp = kernel.instance.k;
                    part.check(kp <= k, || format!("{name} k={k}: parameter grew to {kp}"));
                    if kernel.packing.len() < kp {
                        part.check(kg.n() <= kernel_vertex_bound(kp), || {
                            format!("{name} k={k}: kernel has {} vertices, k'={kp}", kg.n())
                        });
                    }
                    match max_packing_dp(kg, DP_CAP) {
                        Err(e) => part.check(false, || format!("{name} k={k}: {e}")),
                        Ok((kmax, witness)) => {
                            part.check((kmax >= kp) == (max >= k), || {
                                format!(
                                    "{name} k={k}: kernel max {kmax} vs k'={kp}, input max {max}"
                                )
                            });
                            if kmax >= kp {
                                let lifted = kernel.lift_solution(&witness);
                                part.check(
                                    lifted.as_ref().is_ok_and(|p| certificate_ok(g, p, k)),
                                    || format!("{name} k={k}: lifted kernel solution invalid"),
                                );
                            }
                        }
                    }
                }
            }
        }
        vec![part]
    });
    report.absorb(merged.pop().unwrap());
    report.elapsed = start.elapsed();
    report
}

/// Maximal packings the system produces for `g`: the greedy one, its
/// rule-free reduction, and greedy completions of single paths.
fn produced_maximal_packings(g: &Graph) -> Vec<Packing> {
    let mut out: Vec<Packing> = Vec::new();
    let greedy = greedy_maximal(g, &Packing::new());
    out.push(greedy.clone());
    if let Ok(r) = reduce_exhaustive(g, &greedy) {
        out.push(r.packing);
    }
    for path in all_p2s(g).into_iter().step_by(7).take(4) {
        let seed = Packing::from_paths([path]).expect("one path");
        out.push(greedy_maximal(g, &seed));
    }
    out.sort_by(|a, b| a.paths().cmp(b.paths()));
    out.dedup();
    out
}

/// Criteria 3 (reuse bound, check e) and 4 (checks a to d) on all
/// corpus graphs with at most `max_n` vertices.
pub fn extremal_checks(
    corpus: &[CorpusInstance],
    max_n: usize,
) -> (CriterionReport, CriterionReport) {
    let start = Instant::now();
    let mut reuse = CriterionReport::new(3, "vertex reuse >= ceil(2.5j)", Some(600));
    let mut lemmas = CriterionReport::new(4, "extremal checks a-d", Some(600));
    let small: Vec<CorpusInstance> = corpus
        .iter()
        .filter(|c| c.graph.n() <= max_n)
        .cloned()
        .collect();
    let mut merged = over_corpus(&small, 2, |inst| {
        let (mut e, mut ad) = (Partial::default(), Partial::default());
        let g = &inst.graph;
        let max = match dp(g) {
            Ok(m) => m,
            Err(err) => {
                e.check(false, || format!("{}: {err}", inst.name));
                return vec![e, ad];
            }
        };
        for p in produced_maximal_packings(g) {
            let j = p.len();
            if j == 0 || max <= j {
                continue;
            }
            match verify_extremal(g, &p, ENUMERATION_CAP) {
                Err(err) => e.check(false, || format!("{}: {err}", inst.name)),
                Ok(report) => {
                    e.check(report.q2_size > 0 && report.passed(Claim::Reuse), || {
                        format!("{} P={p:?}: {report}", inst.name)
                    });
                    for claim in &Claim::ALL[..4] {
                        ad.check(report.passed(*claim), || {
                            format!("{} P={p:?} check {}: {report}", inst.name, claim.label())
                        });
                    }
                }
            }
        }
        vec![e, ad]
    });
    lemmas.absorb(merged.pop().unwrap());
    reuse.absorb(merged.pop().unwrap());
    reuse.elapsed = start.elapsed();
    lemmas.elapsed = reuse.elapsed;
    (reuse, lemmas)
}

/// Criterion 5: the binomial growth inequalities for `2 <= j <= max_j`.
pub fn binomial_growth(max_j: usize) -> CriterionReport {
    let start = Instant::now();
    let mut report = CriterionReport::new(5, "binomial growth", Some(1));
    let mut part = Partial::default();
    for j in 2..=max_j {
        part.check(binomial_growth_check(j), || format!("j={j} fails"));
    }
    report.absorb(part);
    report.elapsed = start.elapsed();
    report
}

fn tec_eligible(g: &Graph) -> bool {
    g.m() <= 20 && g.components().iter().all(|c| c.len() >= 3)
}

/// Criteria 6 (Gallai identity and total edge cover answers) and 7 (the
/// `1.5 kd` rejection is used exactly when `n > 1.5 kd` and is never
/// wrong).
pub fn gallai(corpus: &[CorpusInstance]) -> (CriterionReport, CriterionReport) {
    let start = Instant::now();
    let mut identity = CriterionReport::new(6, "Gallai identity", Some(120));
    let mut dual = CriterionReport::new(7, "dual kernel rejection", None);
    let mut merged = over_corpus(corpus, 2, |inst| {
        let (mut six, mut seven) = (Partial::default(), Partial::default());
        let g = &inst.graph;
        let name = &inst.name;
        if !tec_eligible(g) {
            return vec![six, seven];
        }
        let (max, cover_min) = match (
            dp(g),
            min_total_edge_cover_bruteforce(g, TEC_EDGE_CAP).map_err(|e| e.to_string()),
        ) {
            (Ok(a), Ok((b, _))) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                six.check(false, || format!("{name}: {e}"));
                return vec![six, seven];
            }
        };
        six.check(max + cover_min == g.n(), || {
            format!(
                "{name}: max packing {max} + min cover {cover_min} != n = {}",
                g.n()
            )
        });
        for kd in 0..=g.n() {
            let r = match solve_total_edge_cover(g, kd) {
                Ok(r) => r,
                Err(e) => {
                    six.check(false, || format!("{name} kd={kd}: {e}"));
                    continue;
                }
            };
            let expected = cover_min <= kd;
            six.check(r.answer.is_yes() == expected, || {
                format!(
                    "{name} kd={kd}: answer {:?}, brute-force minimum {cover_min}",
                    r.answer
                )
            });
            if let Some(cover) = &r.cover {
                six.check(cover.len() <= kd && is_total_cover(g, cover), || {
                    format!("{name} kd={kd}: bad cover {cover:?}")
                });
            }
            let must_reject = 2 * g.n() > 3 * kd;
            seven.check(r.kernel_rejected == must_reject, || {
                format!("{name} kd={kd}: kernel_rejected={}", r.kernel_rejected)
            });
            if r.kernel_rejected {
                seven.check(!expected, || {
                    format!("{name} kd={kd}: rejected but a cover of {cover_min} exists")
                });
            }
        }
        vec![six, seven]
    });
    dual.absorb(merged.pop().unwrap());
    identity.absorb(merged.pop().unwrap());
    identity.elapsed = start.elapsed();
    dual.elapsed = identity.elapsed;
    (identity, dual)
}

/// All sets of `t` pairwise disjoint vertex pairs, each set sorted.
fn disjoint_pair_sets(n: usize, t: usize) -> Vec<Vec<(Vertex, Vertex)>> {
    fn go(
        n: usize,
        t: usize,
        used: &mut [bool],
        min_first: Vertex,
        cur: &mut Vec<(Vertex, Vertex)>,
        out: &mut Vec<Vec<(Vertex, Vertex)>>,
    ) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for a in min_first..n {
            if used[a] {
                continue;
            }
            for b in a + 1..n {
                if used[b] {
                    continue;
                }
                used[a] = true;
                used[b] = true;
                cur.push((a, b));
                go(n, t, used, a + 1, cur, out);
                cur.pop();
                used[a] = false;
                used[b] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, t, &mut vec![false; n], 0, &mut Vec::new(), &mut out);
    out
}

/// Criterion 8: both reconstructions succeed exactly when some packing has
/// the requested midpoints / endpoint pairs, on graphs with at most
/// `max_n` vertices.
pub fn reconstruction(corpus: &[CorpusInstance], max_n: usize) -> CriterionReport {
    let start = Instant::now();
    let mut report = CriterionReport::new(8, "reconstruction completeness", Some(120));
    let small: Vec<CorpusInstance> = corpus
        .iter()
        .filter(|c| c.graph.n() <= max_n)
        .cloned()
        .collect();
    let mut merged = over_corpus(&small, 1, |inst| {
        let mut part = Partial::default();
        let g = &inst.graph;
        let name = &inst.name;
        let mut mid_sets: BTreeSet<Vec<Vertex>> = BTreeSet::new();
        let mut pair_sets: BTreeSet<Vec<(Vertex, Vertex)>> = BTreeSet::new();
        for size in 0..=g.n() / 3 {
            let res = for_each_packing(g, size, ENUMERATION_CAP, |paths: &[P2Path]| {
                let mut mids: Vec<Vertex> = paths.iter().map(|p| p.mid()).collect();
                mids.sort_unstable();
                mid_sets.insert(mids);
                let mut pairs: Vec<(Vertex, Vertex)> =
                    paths.iter().map(|p| (p.e1(), p.e2())).collect();
                pairs.sort_unstable();
                pair_sets.insert(pairs);
            });
            if let Err(e) = res {
                part.check(false, || format!("{name}: {e}"));
                return vec![part];
            }
        }

        for t in 0..=g.n() / 3 {
            for mids in (0..g.n()).combinations(t) {
                let set: VertexSet = mids.iter().copied().collect();
                let got = packing_from_midpoints(g, &set);
                let expected = mid_sets.contains(&mids);
                part.check(got.is_some() == expected, || {
                    format!("{name}: midpoints {mids:?} gave {got:?}, expected {expected}")
                });
                if let Some(p) = got {
                    part.check(p.validate(g).is_ok() && p.midpoints() == set, || {
                        format!("{name}: midpoints {mids:?} rebuilt as {p:?}")
                    });
                }
            }
            for pairs in disjoint_pair_sets(g.n(), t) {
                let expected = pair_sets.contains(&pairs);
                match packing_from_endpoint_pairs(g, &pairs) {
                    Err(e) => part.check(false, || format!("{name}: pairs {pairs:?}: {e}")),
                    Ok(got) => {
                        part.check(got.is_some() == expected, || {
                            format!("{name}: pairs {pairs:?} gave {got:?}, expected {expected}")
                        });
                        if let Some(p) = got {
                            let mut rebuilt: Vec<(Vertex, Vertex)> =
                                p.iter().map(|q| (q.e1(), q.e2())).collect();
                            rebuilt.sort_unstable();
                            part.check(p.validate(g).is_ok() && rebuilt == pairs, || {
                                format!("{name}: pairs {pairs:?} rebuilt as {p:?}")
                            });
                        }
                    }
                }
            }
        }
        vec![part]
    });
    report.absorb(merged.pop().unwrap());
    report.elapsed = start.elapsed();
    report
}

/// Criterion 10: `gen`, `solve` and `kernelize` print identical bytes when
/// run twice with the same arguments, and a parallel batch of solves
/// matches the sequential one.
pub fn determinism(corpus: &[CorpusInstance]) -> CriterionReport {
    let start = Instant::now();
    let mut report = CriterionReport::new(10, "determinism", None);
    let mut part = Partial::default();
    let run = |args: &[&str], stdin: &str| crate::cli::run_captured(args, stdin.as_bytes());

    let gens: [&[&str]; 4] = [
        &["gen", "planted", "3", "5", "--seed", "7"],
        &["gen", "planted", "4", "6", "--seed", "3"],
        &["gen", "gnp", "10", "0.3", "--seed", "1"],
        &["gen", "gnp", "14", "0.5", "--seed", "42"],
    ];
    for args in gens {
        let first = run(args, "");
        part.check(first.code == 0 && first == run(args, ""), || {
            format!("{args:?} differs between runs")
        });
        for cmd in ["solve", "kernelize"] {
            for k in ["2", "3", "4"] {
                let a = [cmd, "-k", k];
                let out = run(&a, &first.stdout);
                part.check(out == run(&a, &first.stdout), || {
                    format!("{a:?} on {args:?} differs between runs")
                });
            }
        }
    }

    let render = |inst: &CorpusInstance| {
        let k = (inst.graph.n() / 3).max(1);
        match solve(&Instance::new(inst.graph.clone(), k)) {
            Ok(r) => crate::io::write_result(&r),
            Err(e) => e.to_string(),
        }
    };
    let parallel: Vec<String> = corpus.par_iter().map(render).collect();
    let sequential: Vec<String> = corpus.iter().map(render).collect();
    part.check(parallel == sequential, || {
        "parallel and sequential solves differ".into()
    });

    report.absorb(part);
    report.elapsed = start.elapsed();
    report
}

/// All criteria, in order.
pub fn run_all(corpus: &[CorpusInstance]) -> Vec<CriterionReport> {
    let (c1, c9) = oracle_agreement(corpus);
    let c2 = kernel_bound(corpus);
    let (c3, c4) = extremal_checks(corpus, 12);
    let c5 = binomial_growth(200);
    let (c6, c7) = gallai(corpus);
    let c8 = reconstruction(corpus, 10);
    let c10 = determinism(corpus);
    vec![c1, c2, c3, c4, c5, c6, c7, c8, c9, c10]
}

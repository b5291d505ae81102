//! Randomized invariants, each compared with a brute-force reference.

use std::collections::BTreeSet;

use p2pack_core::augment::augment;
use p2pack_core::crown::{apply_crown, detect_crown_opportunity, lift_solution, CrownThreshold};
use p2pack_core::matching::{alternating_reachable, max_matching, BipartiteGraph};
use p2pack_core::oracle::{
    enumerate_packings, is_total_cover, max_packing_dp, min_total_edge_cover_bruteforce, DP_CAP,
    ENUMERATION_CAP, TEC_EDGE_CAP,
};
use p2pack_core::reconstruct::{packing_from_endpoint_pairs, packing_from_midpoints};
use p2pack_core::reduce::{check_properties, classify_leftover, greedy_maximal, reduce_exhaustive};
use p2pack_core::solver::kernel_vertex_bound;
use p2pack_core::{
    kernelize, solve, solve_total_edge_cover, Graph, Instance, KernelOutcome, Packing, Vertex,
    VertexSet,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (
            Just(n),
            proptest::collection::vec(any::<bool>(), pairs),
            0.1f64..0.7,
        )
            .prop_map(|(n, coins, _)| {
                let mut edges = Vec::new();
                let mut i = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if coins[i] {
                            edges.push((u, v));
                        }
                        i += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
    })
}

fn sparse_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        proptest::collection::btree_set((0..n, 0..n), 0..=2 * n).prop_map(move |pairs| {
            let edges = pairs.into_iter().filter(|(u, v)| u != v);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_bipartite() -> impl Strategy<Value = BipartiteGraph> {
    (0usize..=6, 0usize..=6).prop_flat_map(|(l, r)| {
        proptest::collection::vec(proptest::collection::btree_set(0..r.max(1), 0..=r), l).prop_map(
            move |adj| {
                let adj = adj
                    .into_iter()
                    .map(|s| s.into_iter().filter(|&x| x < r).collect())
                    .collect();
                BipartiteGraph::new(r, adj).unwrap()
            },
        )
    })
}

/// Largest matching by trying every option for each left vertex.
fn brute_matching(adj: &[Vec<usize>], i: usize, used: &mut Vec<bool>) -> usize {
    if i == adj.len() {
        return 0;
    }
    let mut best = brute_matching(adj, i + 1, used);
    for &r in &adj[i] {
        if !used[r] {
            used[r] = true;
            best = best.max(1 + brute_matching(adj, i + 1, used));
            used[r] = false;
        }
    }
    best
}

fn dp(g: &Graph) -> usize {
    max_packing_dp(g, DP_CAP).unwrap().0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn matching_is_maximum(b in arb_bipartite()) {
        let m = max_matching(&b);
        prop_assert!(m.is_valid_for(&b));
        let adj: Vec<Vec<usize>> = (0..b.left_count()).map(|i| b.neighbors(i).to_vec()).collect();
        prop_assert_eq!(m.size(), brute_matching(&adj, 0, &mut vec![false; b.right_count()]));
    }

    #[test]
    fn alternating_reach_is_closed(b in arb_bipartite()) {
        let m = max_matching(&b);
        let sources: VertexSet = (0..b.left_count()).filter(|&i| m.of_left(i).is_none()).collect();
        let (left, right) = alternating_reachable(&b, &m, &sources);
        prop_assert!(sources.is_subset(&left));
        for &l in &left {
            for &r in b.neighbors(l) {
                if m.of_left(l) != Some(r) {
                    prop_assert!(right.contains(&r));
                }
            }
        }
        for &r in &right {
            if let Some(l) = m.of_right(r) {
                prop_assert!(left.contains(&l));
            }
        }
    }

    #[test]
    fn greedy_packing_is_maximal(g in arb_graph(12)) {
        let p = greedy_maximal(&g, &Packing::new());
        p.validate(&g).unwrap();
        // Maximal iff every leftover component has at most two vertices.
        let (rest, _) = g.without(p.covered());
        prop_assert!(rest.components().iter().all(|c| c.len() <= 2));
    }

    #[test]
    fn reduction_reaches_a_rule_free_fixpoint(g in arb_graph(12)) {
        let p = greedy_maximal(&g, &Packing::new());
        let r = reduce_exhaustive(&g, &p).unwrap();
        r.packing.validate(&g).unwrap();
        prop_assert!(r.packing.len() >= p.len());
        prop_assert!(r.packing.len() <= dp(&g));
        prop_assert_eq!(&classify_leftover(&g, &r.packing).unwrap(), &r.leftover);
        prop_assert!(check_properties(&g, &r.packing, &r.leftover));
        let again = reduce_exhaustive(&g, &r.packing).unwrap();
        prop_assert_eq!(again.packing, r.packing);
        prop_assert_eq!(again.rule1_applications + again.rule2_applications, 0);
    }

    #[test]
    fn dp_matches_backtracking(g in arb_graph(10)) {
        let max = dp(&g);
        prop_assert!(!enumerate_packings(&g, max, ENUMERATION_CAP).unwrap().is_empty());
        prop_assert!(enumerate_packings(&g, max + 1, ENUMERATION_CAP).unwrap().is_empty());
    }

    #[test]
    fn midpoint_reconstruction_is_exact(g in arb_graph(8), mask in 0u32..256) {
        let mids: VertexSet = (0..g.n()).filter(|v| mask & (1 << v) != 0).collect();
        let exists = enumerate_packings(&g, mids.len(), ENUMERATION_CAP)
            .unwrap()
            .iter()
            .any(|p| p.midpoints() == mids);
        let got = packing_from_midpoints(&g, &mids);
        prop_assert_eq!(got.is_some(), exists);
        if let Some(p) = got {
            p.validate(&g).unwrap();
            prop_assert_eq!(p.midpoints(), mids);
        }
    }

    #[test]
    fn endpoint_reconstruction_is_exact(
        g in arb_graph(8),
        order in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle(),
        t in 0usize..=2,
    ) {
        let order: Vec<usize> = order.into_iter().filter(|&v| v < g.n()).collect();
        let t = t.min(order.len() / 2);
        let mut pairs: Vec<(Vertex, Vertex)> = (0..t)
            .map(|i| {
                let (a, b) = (order[2 * i], order[2 * i + 1]);
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        let exists = enumerate_packings(&g, t, ENUMERATION_CAP).unwrap().iter().any(|p| {
            let mut ps: Vec<(Vertex, Vertex)> = p.iter().map(|q| (q.e1(), q.e2())).collect();
            ps.sort_unstable();
            ps == pairs
        });
        let got = packing_from_endpoint_pairs(&g, &pairs).unwrap();
        prop_assert_eq!(got.is_some(), exists);
    }

    #[test]
    fn augmentation_is_complete(g in arb_graph(11)) {
        let p = greedy_maximal(&g, &Packing::new());
        match augment(&g, &p) {
            Some(q) => {
                q.validate(&g).unwrap();
                prop_assert_eq!(q.len(), p.len() + 1);
            }
            None => prop_assert_eq!(dp(&g), p.len()),
        }
    }

    #[test]
    fn solve_agrees_with_dp(g in arb_graph(12), k in 0usize..6) {
        let r = solve(&Instance::new(g.clone(), k)).unwrap();
        prop_assert_eq!(r.answer.is_yes(), dp(&g) >= k);
        if let Some(cert) = r.certificate {
            cert.validate(&g).unwrap();
            prop_assert!(cert.len() >= k);
        }
    }

    #[test]
    fn kernel_is_small_and_equivalent(g in sparse_graph(14), k in 1usize..6) {
        let max = dp(&g);
        match kernelize(&Instance::new(g.clone(), k)).unwrap() {
            KernelOutcome::EarlyYes { certificate, .. } => {
                certificate.validate(&g).unwrap();
                prop_assert!(certificate.len() >= k);
            }
            KernelOutcome::Reduced(kernel) => {
                let kp = kernel.instance.k;
                prop_assert!(kp <= k);
                if kernel.packing.len() < kp {
                    prop_assert!(kernel.instance.graph.n() <= kernel_vertex_bound(kp));
                }
                let (kmax, witness) = max_packing_dp(&kernel.instance.graph, DP_CAP).unwrap();
                prop_assert_eq!(kmax >= kp, max >= k);
                let lifted = kernel.lift_solution(&witness).unwrap();
                lifted.validate(&g).unwrap();
                prop_assert_eq!(lifted.len(), witness.len() + (k - kp));
            }
        }
    }

    #[test]
    fn detected_crowns_are_sound(g in sparse_graph(14)) {
        let p = greedy_maximal(&g, &Packing::new());
        let r = reduce_exhaustive(&g, &p).unwrap();
        let found = detect_crown_opportunity(&g, &r.packing, &r.leftover, CrownThreshold::PackingSize)
            .unwrap();
        if let Some(c) = found {
            c.validate(&g).unwrap();
            let max = dp(&g);
            let inst = Instance::new(g.clone(), max);
            let (reduced, rec) = apply_crown(&inst, &c).unwrap();
            let (rmax, witness) = max_packing_dp(&reduced.graph, DP_CAP).unwrap();
            prop_assert_eq!(rmax + c.head.len(), max);
            prop_assert_eq!(reduced.k, max - c.head.len());
            let lifted = lift_solution(&rec, &witness).unwrap();
            lifted.validate(&g).unwrap();
            prop_assert_eq!(lifted.len(), max);
        }
    }

    #[test]
    fn gallai_identity(g in sparse_graph(9)) {
        prop_assume!(g.m() <= 14 && g.components().iter().all(|c| c.len() >= 3));
        let (cover, edges) = min_total_edge_cover_bruteforce(&g, TEC_EDGE_CAP).unwrap();
        prop_assert!(is_total_cover(&g, &edges));
        prop_assert_eq!(dp(&g) + cover, g.n());
        for kd in 0..=g.n() {
            let r = solve_total_edge_cover(&g, kd).unwrap();
            prop_assert_eq!(r.answer.is_yes(), cover <= kd);
            prop_assert_eq!(r.kernel_rejected, 2 * g.n() > 3 * kd);
            if let Some(c) = r.cover {
                prop_assert!(c.len() <= kd && is_total_cover(&g, &c));
            }
        }
    }
}

#[test]
fn enumeration_order_is_stable() {
    let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
    let a = enumerate_packings(&g, 2, ENUMERATION_CAP).unwrap();
    let b = enumerate_packings(&g, 2, ENUMERATION_CAP).unwrap();
    assert_eq!(a, b);
    let distinct: BTreeSet<_> = a.iter().map(|p| p.paths().to_vec()).collect();
    assert_eq!(distinct.len(), a.len());
    // The 6-cycle splits into two P2s in three ways.
    assert_eq!(a.len(), 3);
}

//! Generated instances checked against the exact oracle.

use p2pack::core::oracle::{max_packing_dp, DP_CAP};
use p2pack::core::solve;
use p2pack::gen::{gen_gnp, gen_planted};

fn dp(g: &p2pack::core::Graph) -> usize {
    max_packing_dp(g, DP_CAP).unwrap().0
}

#[test]
fn noisy_planted_instance_is_yes() {
    let inst = gen_planted(3, 5, 7).unwrap();
    assert_eq!(inst.graph.m(), 2 * 3 + 5);
    assert!(dp(&inst.graph) >= 3);
    assert!(solve(&inst).unwrap().answer.is_yes());
}

#[test]
fn solve_confirms_planted_k4() {
    let inst = gen_planted(4, 6, 3).unwrap();
    let r = solve(&inst).unwrap();
    assert!(r.answer.is_yes());
    let cert = r.certificate.unwrap();
    cert.validate(&inst.graph).unwrap();
    assert!(cert.len() >= 4);
    assert!(dp(&inst.graph) >= 4);
}

#[test]
fn planted_without_noise_has_exactly_k() {
    for k in 1..=6 {
        for seed in 0..3 {
            assert_eq!(dp(&gen_planted(k, 0, seed).unwrap().graph), k);
        }
    }
}

#[test]
fn gnp_is_reproducible() {
    let a = gen_gnp(10, 0.3, 1).unwrap();
    let b = gen_gnp(10, 0.3, 1).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
}

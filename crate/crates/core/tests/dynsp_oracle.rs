mod common;

use common::{dynsp_script, multi_goal};
use lbt_planner::dynsp::Lpa;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn random_scripts_match_dijkstra() {
    for seed in 0..10 {
        dynsp_script(seed, 200).unwrap();
    }
}

#[test]
fn geometric_graph_with_heuristic() {
    // Points in the plane, edge weight = Euclidean length, h = distance to goal disc.
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let n = 120;
    let pts: Vec<[f64; 2]> = (0..n).map(|_| [rng.gen_range(0.0..10.0), rng.gen_range(0.0..10.0)]).collect();
    let goal = [9.0, 9.0];
    let r = 1.5;
    let d = |a: [f64; 2], b: [f64; 2]| ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt();
    let h = |p: [f64; 2]| (d(p, goal) - r).max(0.0);
    let is_goal = |p: [f64; 2]| d(p, goal) <= r;
    let mut lpa = Lpa::new(h(pts[0]), is_goal(pts[0]));
    let goals: Vec<usize> = (0..n).filter(|&i| is_goal(pts[i])).collect();
    for p in &pts[1..] {
        lpa.add_vertex(h(*p), is_goal(*p));
    }
    let mut adj = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let w = d(pts[u], pts[v]);
            if u != v && w < 2.0 {
                edges.push((u, v, w));
            }
        }
    }
    for (u, v, w) in &edges {
        assert!(lpa.heuristic(*u) <= w + lpa.heuristic(*v) + 1e-12, "consistency");
    }
    for (i, &(u, v, w)) in edges.iter().enumerate() {
        lpa.insert_edge(u, v, w).unwrap();
        adj[u].push((v, w));
        if i % 50 == 0 {
            lpa.shortest_path();
            let want = multi_goal(&adj, 0, &goals);
            assert!((lpa.cost() - want).abs() <= 1e-9 * (1.0 + want) || lpa.cost() == want);
        }
    }
    for &(u, v, _) in edges.iter().step_by(3) {
        lpa.delete_edge(u, v).unwrap();
        adj[u].retain(|e| e.0 != v);
        lpa.shortest_path();
        let want = multi_goal(&adj, 0, &goals);
        assert!((lpa.cost() - want).abs() <= 1e-9 * (1.0 + want) || lpa.cost() == want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn sssp_matches_oracle(seed in any::<u64>(), m in 1usize..120) {
        let r = dynsp_script(seed, m);
        prop_assert!(r.is_ok(), "{:?}", r);
    }
}

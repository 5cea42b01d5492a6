#![allow(dead_code)]

use lbt_planner::cspace::{collision_free_motion, sample_free, steer, Path, Scenario};
use lbt_planner::dynsp::{Lpa, Sssp, INF};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Reverse;
use std::collections::BinaryHeap;

#[derive(PartialEq, PartialOrd)]
struct F(f64);
impl Eq for F {}
impl Ord for F {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&o.0)
    }
}

/// Plain binary-heap Dijkstra over an adjacency list of `(to, w)`.
pub fn dijkstra(adj: &[Vec<(usize, f64)>], source: usize) -> Vec<f64> {
    let mut dist = vec![f64::INFINITY; adj.len()];
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(Reverse((F(0.0), source)));
    while let Some(Reverse((F(d), u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for &(v, w) in &adj[u] {
            let nd = d + w;
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(Reverse((F(nd), v)));
            }
        }
    }
    dist
}

/// Cheapest goal cost from `source`, via a virtual sink.
pub fn multi_goal(adj: &[Vec<(usize, f64)>], source: usize, goals: &[usize]) -> f64 {
    let d = dijkstra(adj, source);
    goals.iter().map(|&g| d[g]).fold(f64::INFINITY, f64::min)
}

fn adjacency(s: &Sssp) -> Vec<Vec<(usize, f64)>> {
    let g = s.graph();
    (0..g.num_vertices()).map(|u| g.out_edges(u).to_vec()).collect()
}

fn check_parents(s: &Sssp) -> Result<(), String> {
    let n = s.graph().num_vertices();
    for x in 0..n {
        if s.cost(x) == INF {
            if s.parent(x).is_some() {
                return Err(format!("unreachable vertex {x} has a parent"));
            }
            continue;
        }
        let mut v = x;
        let mut steps = 0;
        while let Some(p) = s.parent(v) {
            if s.cost(p) + s.graph().weight(p, v).unwrap() != s.cost(v) {
                return Err(format!("parent edge ({p}, {v}) is not tight"));
            }
            v = p;
            steps += 1;
            if steps > n {
                return Err(format!("parent cycle through {x}"));
            }
        }
        if v != s.source() {
            return Err(format!("parent chain of {x} ends at {v}"));
        }
    }
    Ok(())
}

/// Random insert/delete script on one graph, comparing the dynamic SSSP and
/// LPA* against Dijkstra after every mutation. Costs must match bitwise.
pub fn dynsp_script(seed: u64, mutations: usize) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(20..=200);
    let mut s = Sssp::new(n, 0).unwrap();
    let mut lpa = Lpa::new(0.0, false);
    let goals: Vec<usize> = (0..3).map(|_| rng.gen_range(1..n)).collect();
    for v in 1..n {
        lpa.add_vertex(0.0, goals.contains(&v));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut before = s.costs().to_vec();
    for step in 0..mutations {
        let changed = if edges.is_empty() || rng.gen_bool(0.65) {
            let (u, v) = loop {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u != v && !s.graph().has_edge(u, v) {
                    break (u, v);
                }
            };
            let w = rng.gen_range(0.0..10.0);
            edges.push((u, v));
            lpa.insert_edge(u, v, w).unwrap();
            s.insert_edge(u, v, w).unwrap()
        } else {
            let (u, v) = edges.swap_remove(rng.gen_range(0..edges.len()));
            lpa.delete_edge(u, v).unwrap();
            s.delete_edge(u, v).unwrap()
        };
        let adj = adjacency(&s);
        let oracle = dijkstra(&adj, 0);
        if let Some(x) = (0..n).find(|&x| s.cost(x).to_bits() != oracle[x].to_bits()) {
            return Err(format!("seed {seed} step {step}: vertex {x} cost {} vs {}", s.cost(x), oracle[x]));
        }
        let diff: Vec<usize> = (0..n).filter(|&x| before[x] != oracle[x]).collect();
        if changed != diff {
            return Err(format!("seed {seed} step {step}: reported changes {changed:?} vs {diff:?}"));
        }
        before = oracle;
        check_parents(&s).map_err(|e| format!("seed {seed} step {step}: {e}"))?;

        let best = lpa.shortest_path();
        let want = multi_goal(&adj, 0, &goals);
        if lpa.cost().to_bits() != want.to_bits() {
            return Err(format!("seed {seed} step {step}: lpa cost {} vs {want}", lpa.cost()));
        }
        match best {
            None if want != INF => return Err(format!("seed {seed} step {step}: lpa found no path")),
            None => {}
            Some(g) => {
                if !goals.contains(&g) {
                    return Err(format!("seed {seed} step {step}: {g} is not a goal"));
                }
                let mut hops = Vec::new();
                let mut v = g;
                while let Some(p) = lpa.parent(v).unwrap() {
                    hops.push(lpa.graph().weight(p, v).unwrap());
                    v = p;
                }
                let total: f64 = hops.iter().rev().sum();
                if v != 0 || total != want {
                    return Err(format!("seed {seed} step {step}: lpa path sums to {total}, want {want}"));
                }
            }
        }
    }
    Ok(())
}

/// Random walk of 2 to `max_len` waypoints whose segments all pass the
/// scenario's motion check at its default resolution.
pub fn random_feasible_path<R: Rng>(s: &Scenario, rng: &mut R, max_len: usize) -> Path {
    let delta = s.default_delta();
    let len = rng.gen_range(2..=max_len);
    let mut wp = vec![sample_free(s, rng).unwrap()];
    while wp.len() < len {
        let last = wp.last().unwrap().clone();
        let mut next = None;
        for _ in 0..50 {
            let target = sample_free(s, rng).unwrap();
            let q = steer(s.space(), &last, &target, rng.gen_range(0.1..2.5)).unwrap();
            if q != last && collision_free_motion(s, &last, &q, delta) {
                next = Some(q);
                break;
            }
        }
        match next {
            Some(q) => wp.push(q),
            None if wp.len() >= 2 => break,
            None => wp = vec![sample_free(s, rng).unwrap()],
        }
    }
    Path::new(wp)
}

//! The incremental shortest-path structures on a small road graph: `Sssp`
//! repairs all costs after each edit and reports what changed, `Lpa` answers
//! start-to-goal queries and reuses earlier search effort.

use lbt_planner::dynsp::{Lpa, Sssp};

fn main() -> lbt_planner::Result<()> {
    //   0 --4-- 1 --1-- 3
    //   |       |
    //   1       1
    //   |       |
    //   2 --6-- 4
    let edges = [(0, 1, 4.0), (1, 3, 1.0), (0, 2, 1.0), (1, 4, 1.0), (2, 4, 6.0)];
    let mut sssp = Sssp::new(5, 0)?;
    let mut lpa = Lpa::new(0.0, false);
    for v in 1..5 {
        lpa.add_vertex(0.0, v == 3);
    }
    for (u, v, w) in edges {
        for (a, b) in [(u, v), (v, u)] {
            let changed = sssp.insert_edge(a, b, w)?;
            lpa.insert_edge(a, b, w)?;
            if !changed.is_empty() {
                println!("insert {a}->{b} ({w}): changed {changed:?}");
            }
        }
    }
    println!("costs {:?}", sssp.costs());
    lpa.shortest_path();
    println!("goal cost {} via {:?}, {} expansions", lpa.cost(), lpa.path(), lpa.expansions());

    for (a, b) in [(0, 1), (1, 0)] {
        let changed = sssp.delete_edge(a, b)?;
        lpa.delete_edge(a, b)?;
        println!("delete {a}->{b}: changed {changed:?}");
    }
    println!("costs {:?}", sssp.costs());
    let before = lpa.expansions();
    lpa.shortest_path();
    println!("goal cost {} via {:?}, {} more expansions", lpa.cost(), lpa.path(), lpa.expansions() - before);
    println!("largest single repair touched {} vertices", sssp.delta_hat());
    Ok(())
}

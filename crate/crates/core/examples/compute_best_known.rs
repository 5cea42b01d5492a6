//! Regenerates the bundled scenario files with grid-oracle reference costs.
//!
//! ```text
//! cargo run --release --example compute_best_known [-- OUT_DIR [RESOLUTION]]
//! ```
//!
//! Without arguments the files are printed with their costs and written to
//! `crates/core/scenarios/`.

use lbt_planner::bench::oracle::DEFAULT_RESOLUTION;
use lbt_planner::bench::scenarios::{annotate, generate, BUNDLED};
use std::path::PathBuf;
use std::time::Instant;

fn main() -> lbt_planner::Result<()> {
    let mut args = std::env::args().skip(1);
    let out = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios"));
    let n: usize = args.next().map_or(DEFAULT_RESOLUTION, |s| s.parse().expect("resolution is an integer"));
    std::fs::create_dir_all(&out)?;
    for name in BUNDLED {
        let t = Instant::now();
        let s = annotate(generate(name)?, n)?;
        let best = s.best_known().expect("annotated").cost;
        let wide = s.reference_routes().get("wide").map_or(String::from("-"), |c| format!("{c:.6}"));
        println!("{name:18} best {best:.6}  wide {wide:>10}  ({:.1} s)", t.elapsed().as_secs_f64());
        std::fs::write(out.join(format!("{name}.json")), s.to_json() + "\n")?;
    }
    Ok(())
}

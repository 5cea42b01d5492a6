//! Runs a benchmark spec from code and prints the summary table. Same as
//! `lbt bench SPEC --iterations --out DIR`.
//!
//!     cargo run --release --example run_benchmark -- [SPEC] [OUT_DIR]

use lbt_planner::bench::{run_benchmark, BenchmarkSpec, BudgetUnit};

fn main() -> lbt_planner::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec_path = args.next().unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/benchmarks/alternating_gaps.json").into());
    let mut spec = BenchmarkSpec::load(&spec_path)?;
    spec.budget_unit = BudgetUnit::Iterations;
    spec.output_dir = args.next().map_or_else(|| std::env::temp_dir().join("lbt_bench"), Into::into);

    let report = run_benchmark(&spec)?;
    println!("{:<14} {:<8} {:>8} {:>8} {:>12}", "planner", "epsilon", "budget", "success", "median norm");
    for row in &report.summary {
        println!(
            "{:<14} {:<8} {:>8} {:>7.0}% {:>12}",
            row.planner,
            row.epsilon,
            row.budget_s,
            row.success_rate * 100.0,
            row.median_cost_norm.map_or("-".into(), |m| format!("{m:.4}"))
        );
    }
    println!("results in {}", report.results_path.display());
    Ok(())
}

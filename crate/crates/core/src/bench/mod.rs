//! Benchmark harness: bundled scenarios, a grid oracle for reference costs,
//! multi-seed runs with CSV output, SVG rendering and the command line.

pub mod cli;
mod harness;
pub mod oracle;
pub mod scenarios;
mod svg;

pub use harness::{
    execute_run, median, parse_results, run_benchmark, summarize, to_csv, BenchReport, BenchmarkSpec, BudgetUnit, PlannerEntry, ResultRow,
    SummaryRow, RESULTS_HEADER, SUMMARY_HEADER,
};
pub use svg::emit_svg;

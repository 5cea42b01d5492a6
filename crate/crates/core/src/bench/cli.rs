//! The `lbt` command line: `plan` runs one planner, `bench` runs a benchmark spec.

use super::harness::{run_benchmark, BenchmarkSpec, BudgetUnit};
use super::svg::emit_svg;
use crate::cspace::Scenario;
use crate::error::Result;
use crate::planners::{run, run_checked, PlannerKind, PlannerParams, Status, StopCondition};
use clap::{error::ErrorKind, ArgGroup, Args, Parser, Subcommand};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

/// Exit code for a run that found a solution, or a successful benchmark.
pub const EXIT_OK: i32 = 0;
/// Exit code for usage, input or runtime errors.
pub const EXIT_ERROR: i32 = 1;
/// Exit code for a run that ended without a solution.
pub const EXIT_NO_SOLUTION: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lbt", version, about = "Sampling-based motion planning with bounded-suboptimality roadmaps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one planner on a scenario file.
    Plan(PlanArgs),
    /// Run a benchmark spec and write results.csv and summary.csv.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("budget").required(true).args(["iterations", "time"])))]
struct PlanArgs {
    #[arg(long)]
    scenario: PathBuf,
    /// rrt, rrg, rrt_star, rrt_rrt_star, rrt_rrt_star_fresh, lbt_rrt, lazy_lbt_rrt, afmt, lbt_afmt
    #[arg(long, default_value = "lbt_rrt")]
    planner: String,
    #[arg(long, default_value_t = 0.4)]
    epsilon: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    iterations: Option<u64>,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    time: Option<f64>,
    #[arg(long)]
    out: PathBuf,
    /// Also write roadmap.svg.
    #[arg(long)]
    svg: bool,
    /// Audit every iteration against a shadow RRG and append the report to trace.csv.
    #[arg(long)]
    check: bool,
    #[arg(long)]
    goal_bias: Option<f64>,
    #[arg(long)]
    eta: Option<f64>,
    /// Initial batch size for afmt and lbt_afmt.
    #[arg(long)]
    n0: Option<usize>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Benchmark spec (JSON).
    spec: PathBuf,
    /// Read budgets as iteration counts, making the results deterministic.
    #[arg(long)]
    iterations: bool,
    /// Override the spec's output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    threads: Option<usize>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_ERROR
                }
            };
        }
    };
    let result = match cli.command {
        Command::Plan(a) => plan(a, stdout),
        Command::Bench(a) => bench(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn plan(a: PlanArgs, stdout: &mut dyn Write) -> Result<i32> {
    let scenario = Scenario::load(&a.scenario)?;
    let mut kind = PlannerKind::parse(&a.planner, a.epsilon)?;
    if let Some(n0) = a.n0 {
        kind = match kind {
            PlannerKind::Afmt { .. } => PlannerKind::Afmt { n0 },
            PlannerKind::LbtAfmt { epsilon, .. } => PlannerKind::LbtAfmt { epsilon, n0 },
            k => k,
        };
    }
    let stop = match (a.iterations, a.time) {
        (Some(n), _) => StopCondition::iterations(n),
        (None, Some(t)) => StopCondition::time(t),
        (None, None) => unreachable!("clap requires a budget"),
    };
    let mut params = PlannerParams::for_scenario(&scenario).with_seed(a.seed).with_epsilon(a.epsilon).with_stop(stop);
    if let Some(b) = a.goal_bias {
        params.goal_bias = b;
    }
    if let Some(e) = a.eta {
        params.eta = e;
    }
    params.validate()?;

    let (out, report) = if a.check {
        let (o, r) = run_checked(kind, &scenario, &params)?;
        (o, Some(r))
    } else {
        (run(kind, &scenario, &params)?, None)
    };

    std::fs::create_dir_all(&a.out)?;
    let mut trace = out.trace.to_csv();
    trace.push_str(&out.trace.footer());
    if let Some(r) = &report {
        trace.push_str(&r.footer());
    }
    std::fs::write(a.out.join("trace.csv"), trace)?;
    let mut waypoints = String::new();
    if let Some(p) = &out.path {
        for q in &p.waypoints {
            waypoints.push_str(&format!("{q}\n"));
        }
    }
    std::fs::write(a.out.join("path.txt"), waypoints)?;
    if a.svg {
        std::fs::write(a.out.join("roadmap.svg"), emit_svg(&out.roadmap, &scenario, out.path.as_ref())?)?;
    }

    if let Some(r) = &report {
        writeln!(stdout, "check: {} iterations, {} violations", r.iterations_checked, r.violation_count)?;
    }
    match out.trace.status {
        Status::Solved => {
            let cost = out.trace.best_cost().expect("solved trace has a cost");
            writeln!(stdout, "{kind}: solved, cost {cost} after {} iterations", out.trace.iterations)?;
            Ok(EXIT_OK)
        }
        Status::NoSolution => {
            writeln!(stdout, "{kind}: no solution after {} iterations", out.trace.iterations)?;
            Ok(EXIT_NO_SOLUTION)
        }
    }
}

fn bench(a: BenchArgs, stdout: &mut dyn Write) -> Result<i32> {
    let mut spec = BenchmarkSpec::load(&a.spec)?;
    if a.iterations {
        spec.budget_unit = BudgetUnit::Iterations;
    }
    if let Some(out) = a.out {
        spec.output_dir = out;
    }
    if a.threads.is_some() {
        spec.threads = a.threads;
    }
    let report = run_benchmark(&spec)?;
    writeln!(
        stdout,
        "{} runs, {} cells; wrote {} and {}",
        report.rows.len(),
        report.summary.len(),
        report.results_path.display(),
        report.summary_path.display()
    )?;
    Ok(EXIT_OK)
}

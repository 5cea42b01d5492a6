use super::scenarios;
use crate::cspace::Scenario;
use crate::error::{Error, Result};
use crate::planners::{run, PlannerKind, PlannerParams, StopCondition};
use crate::postprocess::{path_cost, shortcut};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::path::{Path as FsPath, PathBuf};

/// Exact header of `results.csv`.
pub const RESULTS_HEADER: &str =
    "scenario,planner,epsilon,budget_s,seed,success,cost_raw,cost_shortcut,cost_norm,samples,lp_calls,cc_calls,delta_hat,vertices,edges";

/// Exact header of `summary.csv`.
pub const SUMMARY_HEADER: &str = "scenario,planner,epsilon,budget_s,runs,successes,success_rate,median_cost_norm,mean_cost_norm";

fn default_shortcut() -> usize {
    100
}

/// How the numbers in `budgets` are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BudgetUnit {
    #[default]
    Seconds,
    Iterations,
}

/// One planner line of a benchmark spec. LBT variants get one cell per epsilon.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlannerEntry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub epsilons: Vec<f64>,
    /// Initial batch size for the FMT* variants.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n0: Option<usize>,
}

impl PlannerEntry {
    pub fn new(name: &str, epsilons: &[f64]) -> PlannerEntry {
        PlannerEntry {
            name: name.into(),
            epsilons: epsilons.to_vec(),
            n0: None,
        }
    }
}

/// JSON benchmark description consumed by `lbt bench`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchmarkSpec {
    /// Scenario file, relative to the spec file; a bundled scenario name also works.
    pub scenario: String,
    pub planners: Vec<PlannerEntry>,
    pub budgets: Vec<f64>,
    #[serde(default)]
    pub budget_unit: BudgetUnit,
    pub runs: usize,
    #[serde(default)]
    pub base_seed: u64,
    #[serde(default = "default_shortcut")]
    pub shortcut_iterations: usize,
    pub output_dir: PathBuf,
    /// Worker threads; all cores when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
}

impl BenchmarkSpec {
    pub fn from_json(text: &str) -> Result<BenchmarkSpec> {
        let spec: BenchmarkSpec = serde_json::from_str(text)
            .map_err(|e| Error::InvalidArgument(format!("benchmark spec line {} column {}: {e}", e.line(), e.column())))?;
        spec.validate()?;
        Ok(spec)
    }

    /// Reads a spec; relative `scenario` and `output_dir` resolve against its directory.
    pub fn load(path: impl AsRef<FsPath>) -> Result<BenchmarkSpec> {
        let path = path.as_ref();
        let mut spec = BenchmarkSpec::from_json(&std::fs::read_to_string(path)?)?;
        let dir = path.parent().unwrap_or(FsPath::new(""));
        let candidate = dir.join(&spec.scenario);
        if candidate.exists() {
            spec.scenario = candidate.to_string_lossy().into_owned();
        }
        if spec.output_dir.is_relative() {
            spec.output_dir = dir.join(&spec.output_dir);
        }
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::InvalidArgument("runs must be at least 1".into()));
        }
        if self.budgets.is_empty() {
            return Err(Error::InvalidArgument("budgets must not be empty".into()));
        }
        if self.budgets.iter().any(|b| !(b.is_finite() && *b > 0.0)) {
            return Err(Error::InvalidArgument("budgets must be positive".into()));
        }
        if self.budgets.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument("budgets must be strictly increasing".into()));
        }
        if self.budget_unit == BudgetUnit::Iterations && self.budgets.iter().any(|b| b.fract() != 0.0) {
            return Err(Error::InvalidArgument("iteration budgets must be whole numbers".into()));
        }
        if self.planners.is_empty() {
            return Err(Error::InvalidArgument("planner list is empty".into()));
        }
        self.cells().map(|_| ())
    }

    /// `(planner, epsilon)` cells in spec order.
    pub fn cells(&self) -> Result<Vec<PlannerKind>> {
        let mut out = Vec::new();
        for entry in &self.planners {
            let base = PlannerKind::parse(&entry.name, 0.0)?;
            if base.epsilon().is_none() {
                if !entry.epsilons.is_empty() {
                    return Err(Error::InvalidArgument(format!("planner {} takes no epsilon", entry.name)));
                }
                out.push(with_n0(base, entry.n0));
                continue;
            }
            let eps: &[f64] = if entry.epsilons.is_empty() { &[0.4] } else { &entry.epsilons };
            for &e in eps {
                if !(e >= 0.0) {
                    return Err(Error::InvalidArgument(format!("epsilon must be nonnegative, got {e}")));
                }
                out.push(with_n0(PlannerKind::parse(&entry.name, e)?, entry.n0));
            }
        }
        Ok(out)
    }

    fn resolve_scenario(&self) -> Result<Scenario> {
        if FsPath::new(&self.scenario).exists() {
            return Scenario::load(&self.scenario);
        }
        scenarios::bundled(&self.scenario)
            .ok_or_else(|| Error::InvalidArgument(format!("scenario {:?} is neither a file nor a bundled name", self.scenario)))
    }
}

fn with_n0(kind: PlannerKind, n0: Option<usize>) -> PlannerKind {
    match (kind, n0) {
        (PlannerKind::Afmt { .. }, Some(n0)) => PlannerKind::Afmt { n0 },
        (PlannerKind::LbtAfmt { epsilon, .. }, Some(n0)) => PlannerKind::LbtAfmt { epsilon, n0 },
        (k, _) => k,
    }
}

/// One line of `results.csv`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub scenario: String,
    pub planner: String,
    /// Decimal epsilon, or `n/a`.
    pub epsilon: String,
    pub budget_s: f64,
    pub seed: u64,
    pub success: bool,
    pub cost_raw: Option<f64>,
    pub cost_shortcut: Option<f64>,
    pub cost_norm: Option<f64>,
    pub samples: u64,
    pub lp_calls: u64,
    pub cc_calls: u64,
    pub delta_hat: u64,
    pub vertices: u64,
    pub edges: u64,
}

/// One line of `summary.csv`; cost statistics cover successful runs only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub scenario: String,
    pub planner: String,
    pub epsilon: String,
    pub budget_s: f64,
    pub runs: usize,
    pub successes: usize,
    pub success_rate: f64,
    pub median_cost_norm: Option<f64>,
    pub mean_cost_norm: Option<f64>,
}

/// Median of a non-empty slice (mean of the middle pair for even length).
pub fn median(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    Some(if v.len() % 2 == 1 { v[m] } else { 0.5 * (v[m - 1] + v[m]) })
}

/// Runs one seeded planner, shortcuts the result and fills a row.
///
/// Shortcutting draws from stream 1 of the seed so that it never perturbs the
/// planner's sample sequence.
pub fn execute_run(kind: PlannerKind, scenario: &Scenario, params: &PlannerParams, shortcut_iterations: usize, budget: f64) -> Result<ResultRow> {
    let out = run(kind, scenario, params)?;
    let c = out.trace.counters;
    let (cost_raw, cost_shortcut) = match &out.path {
        Some(path) => {
            let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
            rng.set_stream(1);
            let short = shortcut(scenario, path, shortcut_iterations, params.delta, &mut rng);
            (Some(path_cost(scenario.space(), path)), Some(path_cost(scenario.space(), &short)))
        }
        None => (None, None),
    };
    let best = scenario.best_known().map(|b| b.cost);
    Ok(ResultRow {
        scenario: scenario.name().to_string(),
        planner: kind.label().to_string(),
        epsilon: kind.epsilon().map_or_else(|| "n/a".to_string(), |e| e.to_string()),
        budget_s: budget,
        seed: params.seed,
        success: out.path.is_some(),
        cost_raw,
        cost_shortcut,
        cost_norm: cost_shortcut.zip(best).map(|(c, b)| c / b),
        samples: c.samples,
        lp_calls: c.lp_calls,
        cc_calls: c.cc_calls,
        delta_hat: c.delta_hat,
        vertices: c.vertices,
        edges: c.edges,
    })
}

/// Per-cell aggregation of `rows`, in first-appearance order.
pub fn summarize(rows: &[ResultRow]) -> Vec<SummaryRow> {
    let mut out: Vec<SummaryRow> = Vec::new();
    let mut costs: Vec<Vec<f64>> = Vec::new();
    for r in rows {
        let i = match out
            .iter()
            .position(|s| s.planner == r.planner && s.epsilon == r.epsilon && s.budget_s == r.budget_s && s.scenario == r.scenario)
        {
            Some(i) => i,
            None => {
                out.push(SummaryRow {
                    scenario: r.scenario.clone(),
                    planner: r.planner.clone(),
                    epsilon: r.epsilon.clone(),
                    budget_s: r.budget_s,
                    runs: 0,
                    successes: 0,
                    success_rate: 0.0,
                    median_cost_norm: None,
                    mean_cost_norm: None,
                });
                costs.push(Vec::new());
                out.len() - 1
            }
        };
        out[i].runs += 1;
        if r.success {
            out[i].successes += 1;
        }
        if let Some(c) = r.cost_norm {
            costs[i].push(c);
        }
    }
    for (s, c) in out.iter_mut().zip(&costs) {
        s.success_rate = s.successes as f64 / s.runs as f64;
        s.median_cost_norm = median(c);
        s.mean_cost_norm = (!c.is_empty()).then(|| c.iter().sum::<f64>() / c.len() as f64);
    }
    out
}

/// Serializes rows with a header line.
pub fn to_csv<T: Serialize>(rows: &[T], header: &str) -> Result<String> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let body = String::from_utf8(w.into_inner().map_err(|e| Error::InvalidArgument(e.to_string()))?)
        .expect("csv output is UTF-8");
    Ok(format!("{header}\n{body}"))
}

/// Parses `results.csv` text back into rows.
pub fn parse_results(text: &str) -> Result<Vec<ResultRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
    if header.join(",") != RESULTS_HEADER {
        return Err(Error::InvalidArgument(format!("unexpected results header {:?}", header.join(","))));
    }
    r.deserialize().map(|row| row.map_err(Error::from)).collect()
}

/// Output of a finished benchmark.
#[derive(Debug, Clone)]
pub struct BenchReport {
    pub rows: Vec<ResultRow>,
    pub summary: Vec<SummaryRow>,
    pub results_path: PathBuf,
    pub summary_path: PathBuf,
}

/// Runs every `(cell, budget, seed)` and writes `results.csv` and `summary.csv`.
pub fn run_benchmark(spec: &BenchmarkSpec) -> Result<BenchReport> {
    spec.validate()?;
    let scenario = spec.resolve_scenario()?;
    let cells = spec.cells()?;
    let mut jobs = Vec::new();
    for &kind in &cells {
        for &budget in &spec.budgets {
            for i in 0..spec.runs {
                jobs.push((kind, budget, spec.base_seed + i as u64));
            }
        }
    }
    let work = |(kind, budget, seed): &(PlannerKind, f64, u64)| {
        let stop = match spec.budget_unit {
            BudgetUnit::Seconds => StopCondition::time(*budget),
            BudgetUnit::Iterations => StopCondition::iterations(*budget as u64),
        };
        let params = PlannerParams::for_scenario(&scenario).with_seed(*seed).with_stop(stop);
        execute_run(*kind, &scenario, &params, spec.shortcut_iterations, *budget)
    };
    // Indexed collection keeps job order regardless of scheduling.
    let rows: Vec<ResultRow> = match spec.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(|| jobs.par_iter().map(work).collect::<Result<_>>())?,
        None => jobs.par_iter().map(work).collect::<Result<_>>()?,
    };
    let summary = summarize(&rows);
    std::fs::create_dir_all(&spec.output_dir)?;
    let results_path = spec.output_dir.join("results.csv");
    let summary_path = spec.output_dir.join("summary.csv");
    std::fs::write(&results_path, to_csv(&rows, RESULTS_HEADER)?)?;
    std::fs::write(&summary_path, to_csv(&summary, SUMMARY_HEADER)?)?;
    Ok(BenchReport {
        rows,
        summary,
        results_path,
        summary_path,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> BenchmarkSpec {
        BenchmarkSpec {
            scenario: "empty".into(),
            planners: vec![PlannerEntry::new("rrt", &[]), PlannerEntry::new("lbt_rrt", &[0.2, 0.4])],
            budgets: vec![50.0, 100.0],
            budget_unit: BudgetUnit::Iterations,
            runs: 2,
            base_seed: 7,
            shortcut_iterations: 20,
            output_dir: PathBuf::from("unused"),
            threads: None,
        }
    }

    #[test]
    fn validation() {
        assert!(spec().validate().is_ok());
        let mut s = spec();
        s.runs = 0;
        assert!(s.validate().is_err());
        let mut s = spec();
        s.budgets = vec![2.0, 1.0];
        assert!(s.validate().is_err());
        let mut s = spec();
        s.budgets = vec![1.0, 1.0];
        assert!(s.validate().is_err());
        let mut s = spec();
        s.planners[0].epsilons = vec![0.1];
        assert!(s.validate().is_err());
        let mut s = spec();
        s.planners[0].name = "dijkstra".into();
        assert!(s.validate().is_err());
    }

    #[test]
    fn cells_expand_epsilons() {
        let cells = spec().cells().unwrap();
        assert_eq!(cells, vec![PlannerKind::Rrt, PlannerKind::Lbt { epsilon: 0.2 }, PlannerKind::Lbt { epsilon: 0.4 }]);
    }

    #[test]
    fn json_round_trip_and_defaults() {
        let text = r#"{"scenario": "empty", "planners": [{"name": "rrt"}], "budgets": [0.1], "runs": 1, "output_dir": "out"}"#;
        let s = BenchmarkSpec::from_json(text).unwrap();
        assert_eq!(s.shortcut_iterations, 100);
        assert_eq!(s.budget_unit, BudgetUnit::Seconds);
        let back = BenchmarkSpec::from_json(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
        assert!(BenchmarkSpec::from_json(r#"{"scenario": "x", "bogus": 1}"#).is_err());
    }

    #[test]
    fn median_examples() {
        assert_eq!(median(&[]), None);
        assert_eq!(median(&[3.0, 1.0, 2.0]), Some(2.0));
        assert_eq!(median(&[4.0, 1.0, 2.0, 3.0]), Some(2.5));
    }

    #[test]
    fn summary_counts() {
        let row = |planner: &str, success: bool, norm: Option<f64>| ResultRow {
            scenario: "s".into(),
            planner: planner.into(),
            epsilon: "n/a".into(),
            budget_s: 1.0,
            seed: 0,
            success,
            cost_raw: norm,
            cost_shortcut: norm,
            cost_norm: norm,
            samples: 0,
            lp_calls: 0,
            cc_calls: 0,
            delta_hat: 0,
            vertices: 0,
            edges: 0,
        };
        let rows = vec![row("a", true, Some(1.0)), row("a", false, None), row("a", true, Some(1.2)), row("b", false, None)];
        let s = summarize(&rows);
        assert_eq!(s.len(), 2);
        assert_eq!((s[0].runs, s[0].successes), (3, 2));
        assert!((s[0].success_rate - 2.0 / 3.0).abs() < 1e-15);
        assert!((s[0].median_cost_norm.unwrap() - 1.1).abs() < 1e-12);
        assert_eq!(s[1].success_rate, 0.0);
        assert_eq!(s[1].median_cost_norm, None);
    }

    #[test]
    fn csv_round_trip() {
        let s = crate::bench::scenarios::empty().unwrap();
        let p = PlannerParams::for_scenario(&s).with_stop(StopCondition::iterations(300));
        let rows = vec![
            execute_run(PlannerKind::Rrt, &s, &p, 10, 300.0).unwrap(),
            execute_run(PlannerKind::Lbt { epsilon: 0.25 }, &s, &p.clone().with_seed(3), 10, 300.0).unwrap(),
        ];
        let text = to_csv(&rows, RESULTS_HEADER).unwrap();
        assert!(text.starts_with(&format!("{RESULTS_HEADER}\n")));
        assert_eq!(parse_results(&text).unwrap(), rows);
    }
}

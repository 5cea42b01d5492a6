use lbt_planner::bench::scenarios;
use lbt_planner::cspace::geometry::Polygon;
use lbt_planner::cspace::{Configuration, GoalRegion, RobotModel, Scenario, SpaceDefinition};
use std::path::Path;
use std::process::{Command, Output};

fn lbt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lbt")).args(args).output().expect("spawn lbt")
}

fn write_scenario(dir: &Path, s: &Scenario) -> String {
    let p = dir.join(format!("{}.json", s.name()));
    std::fs::write(&p, s.to_json()).unwrap();
    p.to_string_lossy().into_owned()
}

/// Goal sealed inside a box of walls.
fn enclosed() -> Scenario {
    let walls = vec![
        Polygon::rect(6.0, 6.0, 9.0, 6.5),
        Polygon::rect(6.0, 8.5, 9.0, 9.0),
        Polygon::rect(6.0, 6.0, 6.5, 9.0),
        Polygon::rect(8.5, 6.0, 9.0, 9.0),
    ];
    Scenario::new(
        "enclosed",
        SpaceDefinition::euclidean(vec![[0.0, 10.0], [0.0, 10.0]]).unwrap(),
        RobotModel::Disc { radius: 0.1 },
        walls,
        Configuration::new(vec![1.0, 1.0]),
        GoalRegion {
            center: Configuration::new(vec![7.5, 7.5]),
            radius: 0.3,
        },
    )
    .unwrap()
}

#[test]
fn missing_scenario_is_a_usage_error() {
    let o = lbt(&["plan", "--iterations", "10", "--out", "/tmp/never"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--scenario"));
}

#[test]
fn unreadable_scenario_and_unknown_planner_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("o");
    let o = lbt(&["plan", "--scenario", "/nonexistent.json", "--iterations", "5", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let sc = write_scenario(dir.path(), &scenarios::empty().unwrap());
    let o = lbt(&["plan", "--scenario", &sc, "--planner", "bogus", "--iterations", "5", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let o = lbt(&["plan", "--scenario", &sc, "--epsilon", "-1", "--iterations", "5", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn unsolvable_scenario_exits_2_with_trace() {
    let dir = tempfile::tempdir().unwrap();
    let sc = write_scenario(dir.path(), &enclosed());
    let out = dir.path().join("run");
    let o = lbt(&["plan", "--scenario", &sc, "--planner", "lbt_rrt", "--iterations", "300", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}", String::from_utf8_lossy(&o.stderr));
    let trace = std::fs::read_to_string(out.join("trace.csv")).unwrap();
    assert!(trace.starts_with("elapsed_s,iteration,best_cost\n"));
    assert!(trace.contains("# status no_solution"));
    assert!(trace.contains("# iterations 300"));
    assert_eq!(std::fs::read_to_string(out.join("path.txt")).unwrap(), "");
}

#[test]
fn solved_run_writes_path_svg_and_clean_audit() {
    let dir = tempfile::tempdir().unwrap();
    let sc = write_scenario(dir.path(), &scenarios::home().unwrap());
    let out = dir.path().join("run");
    let o = lbt(&[
        "plan", "--scenario", &sc, "--planner", "lbt_rrt", "--epsilon", "0.2", "--seed", "3", "--iterations", "1500", "--out",
        out.to_str().unwrap(), "--svg", "--check",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert!(stdout.contains("1500 iterations, 0 violations"), "{stdout}");
    let trace = std::fs::read_to_string(out.join("trace.csv")).unwrap();
    assert!(trace.contains("# status solved"));
    let events = trace.lines().skip(1).filter(|l| !l.starts_with('#')).count();
    assert!(events >= 1);
    let waypoints = std::fs::read_to_string(out.join("path.txt")).unwrap();
    assert!(waypoints.lines().count() >= 2);
    let svg = std::fs::read_to_string(out.join("roadmap.svg")).unwrap();
    let doc = roxmltree::Document::parse(&svg).expect("well-formed svg");
    assert!(doc.descendants().any(|n| n.attribute("id") == Some("path")));
}

#[test]
fn bench_iterations_mode_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let spec = concat!(env!("CARGO_MANIFEST_DIR"), "/benchmarks/corridors_fmt.json");
    let mut outputs = Vec::new();
    for i in 0..2 {
        let out = dir.path().join(format!("b{i}"));
        let o = lbt(&["bench", spec, "--iterations", "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        outputs.push((std::fs::read(out.join("results.csv")).unwrap(), std::fs::read(out.join("summary.csv")).unwrap()));
    }
    assert_eq!(outputs[0], outputs[1]);
    let text = String::from_utf8(outputs[0].0.clone()).unwrap();
    // 2 planners x 3 budgets x 5 runs
    assert_eq!(text.lines().count(), 1 + 30);
}

#[test]
fn help_exits_0() {
    let o = lbt(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("bench"));
}

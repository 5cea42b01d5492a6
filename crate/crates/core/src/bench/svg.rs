use crate::cspace::{CoordKind, Path, Scenario};
use crate::error::{Error, Result};
use crate::planners::Roadmap;
use std::fmt::Write as _;

const WIDTH: f64 = 600.0;

/// Renders the workspace: obstacles filled, roadmap edges thin, the path in a
/// thick stroke, start in green and goal region in red. Only the position
/// coordinates are drawn, so SE(2) roadmaps appear projected.
pub fn emit_svg(roadmap: &Roadmap, scenario: &Scenario, path: Option<&Path>) -> Result<String> {
    let space = scenario.space();
    let kinds = space.kinds();
    let planar = kinds.len() >= 2
        && kinds[..2].iter().all(|k| *k == CoordKind::Euclidean)
        && kinds[2..].iter().all(|k| *k == CoordKind::Angular)
        && kinds.len() <= 3;
    if !planar {
        return Err(Error::Unsupported(format!("cannot draw a {}-dimensional space", kinds.len())));
    }
    let b = space.bounds();
    let (w, h) = (b[0][1] - b[0][0], b[1][1] - b[1][0]);
    let scale = WIDTH / w;
    let height = h * scale;
    let px = |p: [f64; 2]| ((p[0] - b[0][0]) * scale, height - (p[1] - b[1][0]) * scale);

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0}" height="{height:.0}" viewBox="0 0 {WIDTH:.0} {height:.0}">"#
    )
    .unwrap();
    writeln!(s, r#"<rect x="0" y="0" width="{WIDTH:.0}" height="{height:.0}" fill="white" stroke="black"/>"#).unwrap();
    s.push_str("<g id=\"obstacles\" fill=\"#555555\">\n");
    for o in scenario.obstacles() {
        let pts: Vec<String> = o
            .vertices()
            .iter()
            .map(|v| {
                let (x, y) = px(*v);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        writeln!(s, r#"<polygon points="{}"/>"#, pts.join(" ")).unwrap();
    }
    s.push_str("</g>\n<g id=\"roadmap\" stroke=\"#7799cc\" stroke-width=\"0.5\">\n");
    for &(u, v, _) in &roadmap.edges {
        let (x1, y1) = px(roadmap.vertices[u].position());
        let (x2, y2) = px(roadmap.vertices[v].position());
        writeln!(s, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#).unwrap();
    }
    s.push_str("</g>\n");
    if let Some(path) = path {
        let pts: Vec<String> = path
            .waypoints
            .iter()
            .map(|q| {
                let (x, y) = px(q.position());
                format!("{x:.2},{y:.2}")
            })
            .collect();
        writeln!(s, r##"<polyline id="path" points="{}" fill="none" stroke="#ff8800" stroke-width="3"/>"##, pts.join(" ")).unwrap();
    }
    let (gx, gy) = px(scenario.goal().center.position());
    writeln!(
        s,
        r#"<circle id="goal" cx="{gx:.2}" cy="{gy:.2}" r="{:.2}" fill="red" fill-opacity="0.5" stroke="red"/>"#,
        scenario.goal().radius * scale
    )
    .unwrap();
    let (sx, sy) = px(scenario.start().position());
    writeln!(s, r#"<circle id="start" cx="{sx:.2}" cy="{sy:.2}" r="5" fill="green"/>"#).unwrap();
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::scenarios;
    use crate::cspace::{geometry::Polygon, Configuration, GoalRegion, RobotModel, SpaceDefinition};
    use crate::planners::{run, PlannerKind, PlannerParams, StopCondition};

    #[test]
    fn empty_roadmap_draws_obstacles_only() {
        let s = scenarios::home().unwrap();
        let svg = emit_svg(&Roadmap::default(), &s, None).unwrap();
        assert_eq!(svg.matches("<polygon").count(), s.obstacles().len());
        assert!(!svg.contains("<line"));
        assert!(!svg.contains("id=\"path\""));
    }

    #[test]
    fn path_highlight_iff_path() {
        let s = scenarios::empty().unwrap();
        let p = PlannerParams::for_scenario(&s).with_stop(StopCondition::iterations(400));
        let out = run(PlannerKind::Rrt, &s, &p).unwrap();
        let path = out.path.as_ref().expect("free world is solved");
        let with = emit_svg(&out.roadmap, &s, Some(path)).unwrap();
        let without = emit_svg(&out.roadmap, &s, None).unwrap();
        assert!(with.contains("id=\"path\""));
        assert!(!without.contains("id=\"path\""));
        assert_eq!(with.matches("<line").count(), out.roadmap.edges.len());
        assert!(with.contains("fill=\"green\"") && with.contains("fill=\"red\""));
    }

    #[test]
    fn se2_is_drawn_and_higher_dimensions_rejected() {
        let se2 = Scenario::new(
            "se2",
            SpaceDefinition::se2([0.0, 4.0], [0.0, 4.0], 0.5).unwrap(),
            RobotModel::Polygon(Polygon::rect(-0.3, -0.1, 0.3, 0.1)),
            vec![Polygon::rect(1.8, 0.0, 2.2, 1.5)],
            Configuration::new(vec![0.5, 0.5, 0.0]),
            GoalRegion {
                center: Configuration::new(vec![3.5, 0.5, 0.0]),
                radius: 0.3,
            },
        )
        .unwrap();
        assert!(emit_svg(&Roadmap::default(), &se2, None).is_ok());
        let cube = Scenario::new(
            "cube",
            SpaceDefinition::euclidean(vec![[0.0, 1.0]; 3]).unwrap(),
            RobotModel::Point,
            vec![],
            Configuration::new(vec![0.1, 0.1, 0.1]),
            GoalRegion {
                center: Configuration::new(vec![0.9, 0.9, 0.9]),
                radius: 0.1,
            },
        )
        .unwrap();
        assert!(matches!(emit_svg(&Roadmap::default(), &cube, None), Err(Error::Unsupported(_))));
    }
}

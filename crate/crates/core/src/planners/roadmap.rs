use crate::cspace::Configuration;
use std::fmt::Write as _;

/// Snapshot of a planner's graph for dumping and drawing.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Roadmap {
    pub vertices: Vec<Configuration>,
    pub costs: Vec<f64>,
    /// Set for tree roadmaps.
    pub parent: Vec<Option<usize>>,
    /// Directed edges `(u, v, w)`.
    pub edges: Vec<(usize, usize, f64)>,
}

impl Roadmap {
    /// Roadmap of a tree: one edge per non-root vertex.
    pub fn from_tree(vertices: &[Configuration], costs: &[f64], parent: &[Option<usize>], weight: impl Fn(usize) -> f64) -> Roadmap {
        let edges = parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|u| (u, v, weight(v))))
            .collect();
        Roadmap {
            vertices: vertices.to_vec(),
            costs: costs.to_vec(),
            parent: parent.to_vec(),
            edges,
        }
    }

    pub fn is_tree(&self) -> bool {
        !self.parent.is_empty()
    }

    /// `# vertices` section (`id coords… cost parent`) then `# edges` (`u v w`).
    pub fn dump(&self) -> String {
        let mut s = String::from("# vertices\n");
        for (id, q) in self.vertices.iter().enumerate() {
            let cost = self.costs.get(id).copied().unwrap_or(f64::INFINITY);
            let parent = match self.parent.get(id).copied().flatten() {
                Some(p) => p.to_string(),
                None => "-".into(),
            };
            writeln!(s, "{id} {q} {cost} {parent}").unwrap();
        }
        s.push_str("# edges\n");
        for (u, v, w) in &self.edges {
            writeln!(s, "{u} {v} {w}").unwrap();
        }
        s
    }

    /// Parses [`dump`](Self::dump) output.
    pub fn parse_dump(text: &str) -> Option<Roadmap> {
        let mut r = Roadmap::default();
        let mut section = 0;
        let mut tree = false;
        for line in text.lines() {
            match line.trim() {
                "# vertices" => section = 1,
                "# edges" => section = 2,
                "" => {}
                l => {
                    let f: Vec<&str> = l.split_whitespace().collect();
                    if section == 1 {
                        if f.len() < 4 {
                            return None;
                        }
                        let n = f.len();
                        let coords: Option<Vec<f64>> = f[1..n - 2].iter().map(|x| x.parse().ok()).collect();
                        r.vertices.push(Configuration::new(coords?));
                        r.costs.push(f[n - 2].parse().ok()?);
                        let p = if f[n - 1] == "-" { None } else { Some(f[n - 1].parse().ok()?) };
                        tree |= p.is_some();
                        r.parent.push(p);
                    } else if section == 2 {
                        if f.len() != 3 {
                            return None;
                        }
                        r.edges.push((f[0].parse().ok()?, f[1].parse().ok()?, f[2].parse().ok()?));
                    } else {
                        return None;
                    }
                }
            }
        }
        if !tree {
            r.parent.clear();
        }
        Some(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dump_round_trip() {
        let vs = vec![Configuration::new(vec![0.0, 0.0]), Configuration::new(vec![1.0, 0.5])];
        let r = Roadmap::from_tree(&vs, &[0.0, 1.25], &[None, Some(0)], |_| 1.25);
        let text = r.dump();
        assert_eq!(text, "# vertices\n0 0 0 0 -\n1 1 0.5 1.25 0\n# edges\n0 1 1.25\n");
        assert_eq!(Roadmap::parse_dump(&text).unwrap(), r);
    }
}

/// Rooted tree over dense vertex ids with cost-to-come kept in sync.
#[derive(Debug, Clone, Default)]
pub struct Tree {
    parent: Vec<Option<usize>>,
    weight: Vec<f64>,
    cost: Vec<f64>,
    children: Vec<Vec<usize>>,
}

impl Tree {
    /// Tree holding only the root `0`.
    pub fn new() -> Tree {
        Tree {
            parent: vec![None],
            weight: vec![0.0],
            cost: vec![0.0],
            children: vec![Vec::new()],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn cost(&self, x: usize) -> f64 {
        self.cost[x]
    }

    pub fn costs(&self) -> &[f64] {
        &self.cost
    }

    pub fn parent(&self, x: usize) -> Option<usize> {
        self.parent[x]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// Weight of the edge from the parent of `x`.
    pub fn weight(&self, x: usize) -> f64 {
        self.weight[x]
    }

    /// Appends a leaf under `parent`; returns its id.
    pub fn add(&mut self, parent: usize, w: f64) -> usize {
        let id = self.parent.len();
        self.parent.push(Some(parent));
        self.weight.push(w);
        self.cost.push(self.cost[parent] + w);
        self.children.push(Vec::new());
        self.children[parent].push(id);
        id
    }

    fn is_ancestor(&self, a: usize, mut x: usize) -> bool {
        loop {
            if x == a {
                return true;
            }
            match self.parent[x] {
                Some(p) => x = p,
                None => return false,
            }
        }
    }

    /// Re-hangs `x` under `p` and refreshes the costs of its subtree.
    pub fn set_parent(&mut self, x: usize, p: usize, w: f64) {
        debug_assert!(!self.is_ancestor(x, p), "re-parenting {x} under its descendant {p}");
        if let Some(old) = self.parent[x] {
            let c = &mut self.children[old];
            if let Some(i) = c.iter().position(|&y| y == x) {
                c.swap_remove(i);
            }
        }
        self.parent[x] = Some(p);
        self.weight[x] = w;
        self.children[p].push(x);
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            let py = self.parent[y].expect("non-root");
            self.cost[y] = self.cost[py] + self.weight[y];
            stack.extend_from_slice(&self.children[y]);
        }
    }

    /// Vertex ids from the root to `x`.
    pub fn path_to(&self, mut x: usize) -> Vec<usize> {
        let mut out = vec![x];
        while let Some(p) = self.parent[x] {
            out.push(p);
            x = p;
        }
        out.reverse();
        out
    }

    #[cfg(test)]
    pub(crate) fn corrupt_cost(&mut self, x: usize, c: f64) {
        self.cost[x] = c;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reparent_refreshes_subtree() {
        let mut t = Tree::new();
        let a = t.add(0, 5.0);
        let b = t.add(a, 1.0);
        let c = t.add(0, 1.0);
        assert_eq!(t.cost(b), 6.0);
        t.set_parent(a, c, 1.0);
        assert_eq!(t.cost(a), 2.0);
        assert_eq!(t.cost(b), 3.0);
        assert_eq!(t.path_to(b), vec![0, c, a, b]);
    }
}

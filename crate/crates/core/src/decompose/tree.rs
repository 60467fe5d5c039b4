//! Shrinking view of a tree used by the tree decompositions: vertices are
//! deleted as parts are split off while labels stay those of the host.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::LabelledGraph;

#[derive(Clone, Debug)]
pub(crate) struct TreeView {
    adj: Vec<Vec<usize>>,
    alive: Vec<bool>,
    count: usize,
}

impl TreeView {
    pub fn new(t: &LabelledGraph) -> Result<Self> {
        if !t.is_tree() {
            return Err(Error::NotATree);
        }
        let adj = (0..t.n())
            .map(|v| {
                let mut a: Vec<usize> = t.neighbours(v).collect();
                a.sort_unstable();
                a
            })
            .collect();
        Ok(TreeView {
            adj,
            alive: vec![true; t.n()],
            count: t.n(),
        })
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive[v]
    }

    pub fn remove(&mut self, v: usize) {
        if self.alive[v] {
            self.alive[v] = false;
            self.count -= 1;
        }
    }

    pub fn remove_all(&mut self, vs: &[usize]) {
        for &v in vs {
            self.remove(v);
        }
    }

    /// Alive neighbours in increasing label order.
    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied().filter(|&w| self.alive[w])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbours(v).count()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.alive[u] && self.alive[v] && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> Vec<usize> {
        (0..self.alive.len()).filter(|&v| self.alive[v]).collect()
    }

    /// Edges of the alive tree with both ends in `xs`.
    pub fn induced_edges(&self, xs: &[usize]) -> usize {
        let mut c = 0;
        for (i, &a) in xs.iter().enumerate() {
            for &b in &xs[i + 1..] {
                if self.has_edge(a, b) {
                    c += 1;
                }
            }
        }
        c
    }

    /// Breadth-first distances from `s` within the alive tree.
    fn distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.alive.len()];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for w in self.neighbours(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            }
        }
        dist
    }

    /// Lexicographically smallest longest path of the alive tree.
    pub fn longest_path(&self) -> Vec<usize> {
        let Some(x) = (0..self.alive.len()).find(|&v| self.alive[v]) else {
            return Vec::new();
        };
        let far = |d: &[usize]| {
            (0..d.len())
                .filter(|&v| self.alive[v])
                .max_by_key(|&v| (d[v], std::cmp::Reverse(v)))
                .expect("nonempty")
        };
        let da = self.distances(far(&self.distances(x)));
        let b = far(&da);
        let db = self.distances(b);
        let diam = da[b];
        // every vertex's eccentricity is attained at one end of a diameter
        let s = (0..self.alive.len())
            .find(|&v| self.alive[v] && da[v].max(db[v]) == diam)
            .expect("diameter end");
        let ds = self.distances(s);
        let mut height = vec![0usize; self.alive.len()];
        let mut by_depth: Vec<usize> = self.vertices();
        by_depth.sort_by_key(|&v| std::cmp::Reverse(ds[v]));
        for &v in &by_depth {
            for w in self.neighbours(v) {
                if ds[w] == ds[v] + 1 {
                    height[v] = height[v].max(height[w] + 1);
                }
            }
        }
        let mut path = vec![s];
        let mut cur = s;
        while path.len() <= diam {
            let need = diam - path.len();
            cur = self
                .neighbours(cur)
                .find(|&w| ds[w] == ds[cur] + 1 && height[w] == need)
                .expect("continuation");
            path.push(cur);
        }
        path
    }

    /// Vertices of the component of `T - avoid` containing `start`.
    pub fn branch(&self, start: usize, avoid: usize) -> Vec<usize> {
        let mut out = vec![start];
        let mut stack = vec![(start, avoid)];
        while let Some((v, from)) = stack.pop() {
            for w in self.neighbours(v) {
                if w != from {
                    out.push(w);
                    stack.push((w, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Sizes of the branches at `t`, keyed by the neighbour they contain.
    pub fn branch_sizes(&self, t: usize) -> Vec<(usize, usize)> {
        self.neighbours(t)
            .map(|u| {
                let mut size = 0;
                let mut stack = vec![(u, t)];
                while let Some((v, from)) = stack.pop() {
                    size += 1;
                    for w in self.neighbours(v) {
                        if w != from {
                            stack.push((w, v));
                        }
                    }
                }
                (u, size)
            })
            .collect()
    }

    /// Whether the alive vertices outside `gone` induce a tree.
    pub fn is_tree_without(&self, gone: &[usize]) -> bool {
        let mut view = self.clone();
        view.remove_all(gone);
        let Some(s) = (0..view.alive.len()).find(|&v| view.alive[v]) else {
            return false;
        };
        let d = view.distances(s);
        (0..view.alive.len()).all(|v| !view.alive[v] || d[v] != usize::MAX)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn longest_path_is_lex_least() {
        // spider: centre 0 with legs 0-1-2, 0-3-4, 0-5
        let t = LabelledGraph::new(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]).unwrap();
        let v = TreeView::new(&t).unwrap();
        assert_eq!(v.longest_path(), vec![2, 1, 0, 3, 4]);
        assert_eq!(v.branch_sizes(0), vec![(1, 2), (3, 2), (5, 1)]);
        assert_eq!(v.branch(3, 0), vec![3, 4]);
        assert!(v.is_tree_without(&[5]));
        assert!(!v.is_tree_without(&[0]));
    }
}

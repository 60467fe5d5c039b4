use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::LabelledGraph;

/// Edge-disjoint paths of order 2 or 3 covering every edge exactly once.
/// Each part is a vertex sequence `[a, b]` or `[a, v, b]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathDecomposition {
    pub parts: Vec<Vec<usize>>,
}

impl PathDecomposition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Host edge indices of each part.
    pub fn part_edges(&self, g: &LabelledGraph) -> Vec<Vec<usize>> {
        self.parts
            .iter()
            .map(|p| {
                p.windows(2)
                    .map(|w| g.edge_index(w[0], w[1]).expect("part follows host edges"))
                    .collect()
            })
            .collect()
    }
}

/// Whether the edges of `g` form a single component; isolated vertices are
/// ignored.
pub fn edges_connected(g: &LabelledGraph) -> bool {
    g.components().iter().filter(|c| c.len() > 1).count() <= 1
}

/// Decomposes a connected graph into exactly `⌈m/2⌉` paths of order at
/// most 3.
///
/// A depth-first search tree is processed bottom-up. Every vertex collects
/// the non-tree edges to its ancestors and the tree edges its children
/// passed up unpaired, pairs them into 3-vertex paths through itself, and
/// either pairs a leftover edge with its parent edge or hands the parent
/// edge up. Only the root can be left with a single edge.
pub fn kotzig_p3(g: &LabelledGraph) -> Result<PathDecomposition> {
    if !edges_connected(g) {
        return Err(Error::Disconnected);
    }
    let Some(root) = (0..g.n()).find(|&v| g.degree(v) > 0) else {
        return Ok(PathDecomposition { parts: Vec::new() });
    };

    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut order = Vec::new();
    let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
    depth[root] = 0;
    order.push(root);
    while let Some(&mut (v, ref mut next)) = stack.last_mut() {
        let nbrs = g.incident(v);
        if *next == nbrs.len() {
            stack.pop();
            continue;
        }
        let (w, _) = nbrs[*next];
        *next += 1;
        if depth[w] == usize::MAX {
            depth[w] = depth[v] + 1;
            parent[w] = v;
            order.push(w);
            stack.push((w, 0));
        }
    }

    // pending[v]: far endpoints of edges at v that v must pair
    let mut pending: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, w) in g.edges() {
        if parent[w] == u || parent[u] == w {
            continue;
        }
        // non-tree edges of a DFS join an ancestor and a descendant
        if depth[u] > depth[w] {
            pending[u].push(w);
        } else {
            pending[w].push(u);
        }
    }

    let mut parts = Vec::with_capacity(g.m().div_ceil(2));
    for &v in order.iter().rev() {
        let mut list = std::mem::take(&mut pending[v]);
        list.sort_unstable();
        let mut it = list.chunks_exact(2);
        for pair in it.by_ref() {
            parts.push(vec![pair[0], v, pair[1]]);
        }
        let leftover = it.remainder().first().copied();
        let par = parent[v];
        match (leftover, par != usize::MAX) {
            (Some(x), true) => parts.push(vec![x, v, par]),
            (Some(x), false) => parts.push(vec![x, v]),
            (None, true) => pending[par].push(v),
            (None, false) => {}
        }
    }
    Ok(PathDecomposition { parts })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(g: &LabelledGraph) -> PathDecomposition {
        let d = kotzig_p3(g).unwrap();
        assert_eq!(d.len(), g.m().div_ceil(2));
        let mut seen = vec![false; g.m()];
        for es in d.part_edges(g) {
            for e in es {
                assert!(!seen[e], "edge {e} covered twice");
                seen[e] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
        assert!(d.parts.iter().filter(|p| p.len() == 2).count() <= 1);
        d
    }

    #[test]
    fn spec_examples() {
        let p5 = LabelledGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let d = check(&p5);
        assert!(d.parts.iter().all(|p| p.len() == 3));
        let k3 = LabelledGraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let d = check(&k3);
        assert_eq!(d.len(), 2);
        let k2 = LabelledGraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(check(&k2).len(), 1);
    }

    #[test]
    fn dense_graphs() {
        for n in 2..9 {
            let e: Vec<_> = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))).collect();
            check(&LabelledGraph::new(n, &e).unwrap());
        }
    }

    #[test]
    fn rejects_disconnected() {
        let g = LabelledGraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(kotzig_p3(&g), Err(Error::Disconnected)));
        // isolated vertices do not matter
        let g = LabelledGraph::new(4, &[(0, 1), (1, 2)]).unwrap();
        check(&g);
    }
}

use serde::Serialize;

use crate::graph::LabelledGraph;

/// Partition of the edges into induced matchings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrongColouring {
    pub classes: Vec<Vec<usize>>,
}

impl StrongColouring {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Edges at distance at most one from `e` (sharing a vertex or joined by an
/// edge), including `e` itself, sorted.
pub fn edge_closed_neighbourhood(g: &LabelledGraph, e: usize) -> Vec<usize> {
    let (u, v) = g.edge(e);
    let mut out = Vec::new();
    for x in [u, v] {
        for &(y, f) in g.incident(x) {
            out.push(f);
            for &(_, h) in g.incident(y) {
                out.push(h);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Greedy strong edge colouring: edges in index order each take the
/// smallest colour unused within edge distance one. Uses at most
/// `2Δ(Δ-1) + 1 ≤ 2Δ²` colours.
pub fn strong_edge_colouring(g: &LabelledGraph) -> StrongColouring {
    let mut colour = vec![usize::MAX; g.m()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut used = Vec::new();
    for e in 0..g.m() {
        used.clear();
        used.resize(classes.len() + 1, false);
        for f in edge_closed_neighbourhood(g, e) {
            if colour[f] != usize::MAX {
                used[colour[f]] = true;
            }
        }
        let c = used.iter().position(|&u| !u).expect("spare colour");
        if c == classes.len() {
            classes.push(Vec::new());
        }
        colour[e] = c;
        classes[c].push(e);
    }
    StrongColouring { classes }
}

/// True when `edges` are pairwise disjoint and no host edge joins
/// endpoints of two different members.
pub fn is_induced_matching(g: &LabelledGraph, edges: &[usize]) -> bool {
    let mut partner = vec![usize::MAX; g.n()];
    for &e in edges {
        let (u, v) = g.edge(e);
        if partner[u] != usize::MAX || partner[v] != usize::MAX {
            return false;
        }
        partner[u] = v;
        partner[v] = u;
    }
    for &e in edges {
        let (u, v) = g.edge(e);
        for x in [u, v] {
            for y in g.neighbours(x) {
                if partner[y] != usize::MAX && y != partner[x] {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let m = LabelledGraph::new(8, &[(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        assert_eq!(strong_edge_colouring(&m).len(), 1);
        let p4 = LabelledGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(strong_edge_colouring(&p4).len(), 3);
        let k3 = LabelledGraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(strong_edge_colouring(&k3).len(), 3);
    }

    #[test]
    fn classes_are_induced_matchings() {
        let g = LabelledGraph::new(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0), (0, 4), (2, 6)],
        )
        .unwrap();
        let c = strong_edge_colouring(&g);
        let d = g.max_degree();
        assert!(c.len() <= 2 * d * d);
        for class in &c.classes {
            assert!(is_induced_matching(&g, class));
        }
        assert_eq!(c.classes.iter().map(Vec::len).sum::<usize>(), g.m());
    }

    #[test]
    fn induced_matching_predicate() {
        let p4 = LabelledGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!is_induced_matching(&p4, &[0, 2]));
        assert!(is_induced_matching(&p4, &[1]));
    }
}

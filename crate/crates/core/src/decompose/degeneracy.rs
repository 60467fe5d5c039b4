use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::LabelledGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegeneracyOrdering {
    /// Vertices in removal order; each has at most `k` later neighbours.
    pub order: Vec<usize>,
    pub k: usize,
}

impl DegeneracyOrdering {
    /// `position[v]` is the index of `v` in the ordering.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Repeatedly removes a vertex of minimum remaining degree (smallest label
/// on ties). `k` is the largest degree seen at removal, i.e. the degeneracy.
pub fn degeneracy_ordering(g: &LabelledGraph) -> DegeneracyOrdering {
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..g.n()).map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut k = 0;
    while let Some((d, v)) = queue.pop_first() {
        k = k.max(d);
        removed[v] = true;
        order.push(v);
        for w in g.neighbours(v) {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    DegeneracyOrdering { order, k }
}

/// Largest number of later neighbours over the ordering.
pub fn forward_degree(g: &LabelledGraph, order: &[usize]) -> usize {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    (0..g.n())
        .map(|v| g.neighbours(v).filter(|&w| pos[w] > pos[v]).count())
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let tree = LabelledGraph::new(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(degeneracy_ordering(&tree).k, 1);
        let k4: Vec<_> = (0..4).flat_map(|a| ((a + 1)..4).map(move |b| (a, b))).collect();
        assert_eq!(degeneracy_ordering(&LabelledGraph::new(4, &k4).unwrap()).k, 3);
        // fan: hub 0 joined to the path 1-2-3-4
        let fan = LabelledGraph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]).unwrap();
        let d = degeneracy_ordering(&fan);
        assert_eq!(d.k, 2);
        assert_eq!(forward_degree(&fan, &d.order), 2);
    }
}

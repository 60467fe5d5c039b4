//! Labelled graphs, orientations and the algebra of inversions.
//!
//! Edges are indexed by their position in the lexicographically sorted list
//! of `(min, max)` endpoint pairs. An orientation stores one bit per edge:
//! bit `i` set means edge `i` points from its smaller to its larger label.
//! Inverting a vertex set `X` flips every edge with both ends in `X`, so a
//! sequence of inversions acts on an orientation as the XOR of their masks.

use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

use crate::bits::BitVector;
use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n` with canonical edge indexing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// `adj[v]` holds `(neighbour, edge index)` sorted by neighbour.
    adj: Vec<Vec<(usize, usize)>>,
}

impl LabelledGraph {
    /// Builds a graph, normalising each pair to `(min, max)` and sorting.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(LabelledGraph { n, edges, adj })
    }

    pub fn empty(n: usize) -> Self {
        LabelledGraph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    /// `(neighbour, edge index)` pairs, ascending by neighbour.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let list = &self.adj[u];
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|k| list[k].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbours(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected in the usual sense; the graphs on 0 or 1 vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// Induced subgraph on `vertices`, relabelled `0..k` in the given order.
    /// Returns the subgraph and, for each new edge, the host edge index.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (LabelledGraph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut pairs = Vec::new();
        for &v in vertices {
            for &(w, _) in &self.adj[v] {
                if local[w] != usize::MAX && v < w {
                    pairs.push((local[v], local[w]));
                }
            }
        }
        let sub = LabelledGraph::new(vertices.len(), &pairs).expect("induced subgraph is simple");
        let edge_map = sub
            .edges
            .iter()
            .map(|&(a, b)| self.edge_index(vertices[a], vertices[b]).expect("host edge"))
            .collect();
        (sub, edge_map)
    }

    /// Spanning subgraph keeping the edges selected by `mask`. Edge `i` of the
    /// result corresponds to host edge `map[i]`.
    pub fn edge_subgraph(&self, mask: &EdgeMask) -> (LabelledGraph, Vec<usize>) {
        let map: Vec<usize> = mask.bits().iter_ones().collect();
        let edges: Vec<(usize, usize)> = map.iter().map(|&i| self.edges[i]).collect();
        let mut adj = vec![Vec::new(); self.n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        (
            LabelledGraph {
                n: self.n,
                edges,
                adj,
            },
            map,
        )
    }

    pub fn vertex_set(&self, vertices: &[usize]) -> Result<InversionSet> {
        InversionSet::new(self.n, vertices.iter().copied())
    }

    /// Edges with both endpoints in `x`.
    pub fn inversion_mask(&self, x: &InversionSet) -> Result<EdgeMask> {
        if let Some(&v) = x.vertices().iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.mask_of_sorted(x.vertices()))
    }

    /// Same as [`inversion_mask`](Self::inversion_mask) for a sorted,
    /// in-range, duplicate-free vertex slice.
    pub fn mask_of_sorted(&self, xs: &[usize]) -> EdgeMask {
        let mut mask = BitVector::zeros(self.m());
        for &u in xs {
            for &(w, e) in &self.adj[u] {
                if w > u && xs.binary_search(&w).is_ok() {
                    mask.set(e, true);
                }
            }
        }
        EdgeMask(mask)
    }

    pub fn all_edges_mask(&self) -> EdgeMask {
        EdgeMask(BitVector::ones(self.m()))
    }
}

/// One labelled orientation of a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation(BitVector);

impl Orientation {
    pub fn new(bits: BitVector) -> Self {
        Orientation(bits)
    }

    /// Every edge oriented high→low.
    pub fn zeros(m: usize) -> Self {
        Orientation(BitVector::zeros(m))
    }

    pub fn from_u64(m: usize, value: u64) -> Self {
        Orientation(BitVector::from_u64(m, value))
    }

    pub fn bits(&self) -> &BitVector {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Tail and head of edge `i` under this orientation.
    pub fn arc(&self, g: &LabelledGraph, i: usize) -> (usize, usize) {
        let (u, v) = g.edge(i);
        if self.0.get(i) {
            (u, v)
        } else {
            (v, u)
        }
    }

    /// The orientation with every arc reversed.
    pub fn converse(&self) -> Orientation {
        Orientation(self.0.not())
    }

    pub fn flipped(&self, mask: &EdgeMask) -> Orientation {
        Orientation(self.0.xor(&mask.0))
    }

    pub fn flip_in_place(&mut self, mask: &EdgeMask) {
        self.0.xor_assign(&mask.0);
    }

    /// Restriction to a subgraph whose edge `i` is host edge `map[i]`.
    pub fn restrict(&self, map: &[usize]) -> Orientation {
        Orientation(BitVector::from_bools(map.iter().map(|&e| self.0.get(e))))
    }
}

/// Set of host edges, e.g. the edges reversed by an inversion or the
/// disagreement set of two orientations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeMask(BitVector);

impl EdgeMask {
    pub fn new(bits: BitVector) -> Self {
        EdgeMask(bits)
    }

    pub fn zeros(m: usize) -> Self {
        EdgeMask(BitVector::zeros(m))
    }

    pub fn from_edges(m: usize, edges: impl IntoIterator<Item = usize>) -> Self {
        let mut b = BitVector::zeros(m);
        for e in edges {
            b.set(e, true);
        }
        EdgeMask(b)
    }

    pub fn bits(&self) -> &BitVector {
        &self.0
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.get(e)
    }

    pub fn insert(&mut self, e: usize) {
        self.0.set(e, true);
    }

    pub fn remove(&mut self, e: usize) {
        self.0.set(e, false);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn count(&self) -> usize {
        self.0.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_zero()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter_ones()
    }

    pub fn xor(&self, other: &EdgeMask) -> EdgeMask {
        EdgeMask(self.0.xor(&other.0))
    }

    pub fn and(&self, other: &EdgeMask) -> EdgeMask {
        EdgeMask(self.0.and(&other.0))
    }

    pub fn complement(&self) -> EdgeMask {
        EdgeMask(self.0.not())
    }

    pub fn xor_assign(&mut self, other: &EdgeMask) {
        self.0.xor_assign(&other.0);
    }
}

/// Sorted, duplicate-free vertex set to be inverted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InversionSet(Vec<usize>);

impl InversionSet {
    pub fn new(n: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if let Some(&bad) = v.iter().find(|&&x| x >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        Ok(InversionSet(v))
    }

    /// Builds a set without a range check; duplicates are removed.
    pub fn from_vertices(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        InversionSet(v)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Ordered family of inversions. The provenance string is informational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InversionPlan {
    pub steps: Vec<InversionSet>,
    pub p: usize,
    #[serde(default)]
    pub provenance: String,
}

impl InversionPlan {
    pub fn new(p: usize, provenance: impl Into<String>) -> Self {
        InversionPlan {
            steps: Vec::new(),
            p,
            provenance: provenance.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, step: InversionSet) {
        self.steps.push(step);
    }

    /// Appends the steps of `other`; `p` and provenance of `self` are kept.
    pub fn extend(&mut self, other: &InversionPlan) {
        self.steps.extend(other.steps.iter().cloned());
    }

    /// XOR of the step masks: the set of edges the plan reverses.
    pub fn net_mask(&self, g: &LabelledGraph) -> Result<EdgeMask> {
        let mut acc = EdgeMask::zeros(g.m());
        for s in &self.steps {
            acc.xor_assign(&g.inversion_mask(s)?);
        }
        Ok(acc)
    }

    /// Maps every step through `labels` (local vertex -> host vertex).
    pub fn relabel(&self, labels: &[usize]) -> InversionPlan {
        InversionPlan {
            steps: self
                .steps
                .iter()
                .map(|s| InversionSet::from_vertices(s.vertices().iter().map(|&v| labels[v])))
                .collect(),
            p: self.p,
            provenance: self.provenance.clone(),
        }
    }
}

pub fn apply_plan(g: &LabelledGraph, o: &Orientation, plan: &InversionPlan) -> Result<Orientation> {
    if o.len() != g.m() {
        return Err(Error::LengthMismatch {
            expected: g.m(),
            got: o.len(),
        });
    }
    Ok(o.flipped(&plan.net_mask(g)?))
}

pub fn disagreement(o1: &Orientation, o2: &Orientation) -> Result<EdgeMask> {
    if o1.len() != o2.len() {
        return Err(Error::LengthMismatch {
            expected: o1.len(),
            got: o2.len(),
        });
    }
    Ok(EdgeMask(o1.0.xor(&o2.0)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// Step `index` has more than `p` vertices.
    Oversized { index: usize, size: usize },
    /// Step `index` names a vertex outside the host graph.
    OutOfRange { index: usize, vertex: usize },
    /// An orientation does not match the host edge count.
    LengthMismatch { expected: usize, got: usize },
    /// The plan is well formed but leaves these edges wrong.
    WrongResult { remaining: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanReport {
    pub valid: bool,
    pub length: usize,
    pub violations: Vec<Violation>,
}

/// Checks that every step has at most `p` vertices and that the plan takes
/// `o1` to `o2`. Never fails; problems are listed in the report.
pub fn verify_plan(
    g: &LabelledGraph,
    o1: &Orientation,
    o2: &Orientation,
    plan: &InversionPlan,
    p: usize,
) -> PlanReport {
    let mut violations = Vec::new();
    for o in [o1, o2] {
        if o.len() != g.m() {
            violations.push(Violation::LengthMismatch {
                expected: g.m(),
                got: o.len(),
            });
        }
    }
    let mut well_formed = violations.is_empty();
    for (index, step) in plan.steps.iter().enumerate() {
        if step.len() > p {
            violations.push(Violation::Oversized {
                index,
                size: step.len(),
            });
        }
        if let Some(&vertex) = step.vertices().iter().find(|&&v| v >= g.n()) {
            violations.push(Violation::OutOfRange { index, vertex });
            well_formed = false;
        }
    }
    if well_formed {
        let reached = o1.flipped(&plan.net_mask(g).expect("steps checked in range"));
        if reached != *o2 {
            let remaining = reached.bits().xor(o2.bits()).iter_ones().collect();
            violations.push(Violation::WrongResult { remaining });
        }
    }
    PlanReport {
        valid: violations.is_empty(),
        length: plan.len(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> LabelledGraph {
        LabelledGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn orient(s: &str) -> Orientation {
        Orientation::new(BitVector::from_bools(s.chars().map(|c| c == '1')))
    }

    fn plan(p: usize, steps: &[&[usize]]) -> InversionPlan {
        InversionPlan {
            steps: steps
                .iter()
                .map(|s| InversionSet::from_vertices(s.iter().copied()))
                .collect(),
            p,
            provenance: "test".into(),
        }
    }

    #[test]
    fn build_sorts_edges_lexicographically() {
        let g = k3();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.edge_index(2, 0), Some(1));
        let k2 = LabelledGraph::new(2, &[(1, 0)]).unwrap();
        assert_eq!(k2.edges(), &[(0, 1)]);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(
            LabelledGraph::new(3, &[(0, 0)]),
            Err(Error::SelfLoop(0))
        ));
        assert!(matches!(
            LabelledGraph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(
            LabelledGraph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
    }

    #[test]
    fn inversion_masks() {
        let g = k3();
        let all = g.inversion_mask(&g.vertex_set(&[0, 1, 2]).unwrap()).unwrap();
        assert_eq!(all.bits().to_string(), "111");
        let one = g.inversion_mask(&g.vertex_set(&[0, 1]).unwrap()).unwrap();
        assert_eq!(one.bits().to_string(), "100");
        let path = LabelledGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let none = path.inversion_mask(&path.vertex_set(&[0, 2]).unwrap()).unwrap();
        assert!(none.is_empty());
        assert!(g.vertex_set(&[0, 5]).is_err());
        assert!(g
            .inversion_mask(&InversionSet::from_vertices([0, 5]))
            .is_err());
    }

    #[test]
    fn apply_plan_examples() {
        let g = k3();
        let o = orient("000");
        assert_eq!(apply_plan(&g, &o, &plan(3, &[])).unwrap(), o);
        assert_eq!(
            apply_plan(&g, &o, &plan(3, &[&[0, 1, 2], &[0, 1, 2]])).unwrap(),
            o
        );
        assert_eq!(
            apply_plan(&g, &o, &plan(3, &[&[0, 1, 2], &[0, 1]])).unwrap(),
            orient("011")
        );
        assert!(apply_plan(&g, &orient("00"), &plan(3, &[])).is_err());
    }

    #[test]
    fn disagreement_examples() {
        let o = orient("010");
        assert!(disagreement(&o, &o).unwrap().is_empty());
        assert_eq!(disagreement(&o, &o.converse()).unwrap().count(), 3);
        assert_eq!(
            disagreement(&orient("000"), &orient("011"))
                .unwrap()
                .bits()
                .to_string(),
            "011"
        );
        assert!(disagreement(&orient("00"), &orient("000")).is_err());
    }

    #[test]
    fn verify_plan_examples() {
        let k2 = LabelledGraph::new(2, &[(0, 1)]).unwrap();
        let r = verify_plan(&k2, &orient("0"), &orient("1"), &plan(2, &[&[0, 1]]), 2);
        assert!(r.valid);
        assert_eq!(r.length, 1);

        let g = k3();
        let r = verify_plan(&g, &orient("000"), &orient("111"), &plan(2, &[&[0, 1, 2]]), 2);
        assert!(!r.valid);
        assert_eq!(r.violations, vec![Violation::Oversized { index: 0, size: 3 }]);

        let r = verify_plan(
            &g,
            &orient("000"),
            &orient("011"),
            &plan(3, &[&[0, 1, 2], &[0, 1]]),
            3,
        );
        assert!(r.valid);
        assert_eq!(r.length, 2);

        let r = verify_plan(&g, &orient("000"), &orient("011"), &plan(3, &[&[0, 1]]), 3);
        assert!(!r.valid);
        assert!(matches!(r.violations[0], Violation::WrongResult { .. }));
    }

    #[test]
    fn subgraphs_keep_edge_maps() {
        let g = LabelledGraph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let (sub, map) = g.induced_subgraph(&[2, 0, 1]);
        assert_eq!(sub.m(), 3);
        for (i, &(a, b)) in sub.edges().iter().enumerate() {
            let labels = [2, 0, 1];
            assert_eq!(g.edge_index(labels[a], labels[b]), Some(map[i]));
        }
        let mask = EdgeMask::from_edges(g.m(), [0, 4]);
        let (es, emap) = g.edge_subgraph(&mask);
        assert_eq!(es.m(), 2);
        assert_eq!(emap, vec![0, 4]);
        assert!(g.is_connected());
        assert!(!g.is_forest());
    }
}

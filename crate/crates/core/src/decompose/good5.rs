//! Good 5-sets and good 5-pairs of trees.
//!
//! A good 5-set is a 5-vertex set `X` with a root `t ∈ X` such that `T⟨X⟩`
//! is a tree and `T - (X ∖ {t})` is a tree. A good 5-pair is `(X1, X2)`
//! with roots `t1, t2` such that `T⟨X1⟩` has four edges, `T⟨X2⟩` three,
//! `T⟨X1 ∩ X2⟩` none, and removing `(X1 ∪ X2) ∖ {t1, t2}` leaves a tree.
//! Inverting `X` (or `X1` then `X2`) reverses exactly the edges that leave
//! with the removed vertices, which drives the five-vertex tree recursion.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::LabelledGraph;

use super::tree::TreeView;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Good5Witness {
    Set { x: Vec<usize>, root: usize },
    Pair { x1: Vec<usize>, x2: Vec<usize>, roots: (usize, usize) },
}

impl Good5Witness {
    /// Vertices deleted from the tree after the witness is inverted.
    pub fn removed(&self) -> Vec<usize> {
        match self {
            Good5Witness::Set { x, root } => x.iter().copied().filter(|v| v != root).collect(),
            Good5Witness::Pair { x1, x2, roots } => {
                let mut d: Vec<usize> = x1
                    .iter()
                    .chain(x2)
                    .copied()
                    .filter(|&v| v != roots.0 && v != roots.1)
                    .collect();
                d.sort_unstable();
                d.dedup();
                d
            }
        }
    }

    /// The sets to invert, in order.
    pub fn steps(&self) -> Vec<Vec<usize>> {
        match self {
            Good5Witness::Set { x, .. } => vec![x.clone()],
            Good5Witness::Pair { x1, x2, .. } => vec![x1.clone(), x2.clone()],
        }
    }
}

/// A witness together with the name of the case that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Good5Found {
    pub witness: Good5Witness,
    pub route: &'static str,
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

pub(crate) fn is_valid(view: &TreeView, w: &Good5Witness) -> bool {
    let alive = |xs: &[usize]| xs.iter().all(|&v| view.is_alive(v));
    match w {
        Good5Witness::Set { x, root } => {
            x.len() == 5
                && alive(x)
                && x.contains(root)
                && view.induced_edges(x) == 4
                && view.count() > 4
                && view.is_tree_without(&w.removed())
        }
        Good5Witness::Pair { x1, x2, roots } => {
            let inter: Vec<usize> = x1.iter().copied().filter(|v| x2.contains(v)).collect();
            let removed = w.removed();
            let in_union = |r: usize| x1.contains(&r) || x2.contains(&r);
            x1.len() <= 5
                && x2.len() <= 5
                && alive(x1)
                && alive(x2)
                && in_union(roots.0)
                && in_union(roots.1)
                && view.induced_edges(x1) == 4
                && view.induced_edges(x2) == 3
                && view.induced_edges(&inter) == 0
                // seven vertices go, taking exactly the seven reversed edges
                && removed.len() == 7
                && view.count() > 7
                && view.is_tree_without(&removed)
        }
    }
}

/// Checks the definitional invariants of a witness against the whole tree.
pub fn check_good5(t: &LabelledGraph, w: &Good5Witness) -> Result<()> {
    let view = TreeView::new(t)?;
    if is_valid(&view, w) {
        Ok(())
    } else {
        Err(Error::NoWitness(format!("invalid good 5 witness {w:?}")))
    }
}

struct Search<'a> {
    view: &'a TreeView,
}

impl Search<'_> {
    fn others(&self, v: usize, excl: &[usize]) -> Vec<usize> {
        self.view.neighbours(v).filter(|w| !excl.contains(w)).collect()
    }

    fn deg(&self, v: usize) -> usize {
        self.view.degree(v)
    }

    fn set(&self, x: Vec<usize>, root: usize, route: &'static str) -> Option<Good5Found> {
        let witness = Good5Witness::Set { x: sorted(x), root };
        is_valid(self.view, &witness).then_some(Good5Found { witness, route })
    }

    fn pair(&self, x1: Vec<usize>, x2: Vec<usize>, t1: usize, t2: usize, route: &'static str) -> Option<Good5Found> {
        let witness = Good5Witness::Pair {
            x1: sorted(x1),
            x2: sorted(x2),
            roots: (t1, t2),
        };
        is_valid(self.view, &witness).then_some(Good5Found { witness, route })
    }

    /// A vertex with at least four leaf neighbours.
    fn three_leaves(&self) -> Option<Good5Found> {
        for v in self.view.vertices() {
            let leaves: Vec<usize> = self.view.neighbours(v).filter(|&w| self.deg(w) == 1).collect();
            if leaves.len() >= 4 {
                let mut x = leaves[..4].to_vec();
                x.push(v);
                if let Some(f) = self.set(x, v, "four-leaves") {
                    return Some(f);
                }
            }
        }
        None
    }

    /// Longest path `v1 v2 …` with `d(v2) ≥ 3`.
    fn second_vertex(&self, path: &[usize]) -> Option<Good5Found> {
        let l = path.len();
        if l < 4 {
            return None;
        }
        let (v1, v2, v3, v4) = (path[0], path[1], path[2], path[3]);
        let (vl, vl1, vl2) = (path[l - 1], path[l - 2], path[l - 3]);
        match self.deg(v2) {
            4 => {
                let o = self.others(v2, &[v3]);
                return self.set(vec![o[0], o[1], o[2], v2, v3], v3, "v2-degree-4");
            }
            3 => {}
            _ => return None,
        }
        let u1 = self.others(v2, &[v1, v3])[0];
        if self.deg(v3) == 2 {
            return self.set(vec![u1, v1, v2, v3, v4], v4, "v2-degree-3/v3-degree-2");
        }
        let x1 = vec![u1, v1, v2, v3];
        let with = |w: usize| {
            let mut x = x1.clone();
            x.push(w);
            x
        };
        for w2 in self.others(v3, &[v2, v4]) {
            let found = match self.deg(w2) {
                1 => self.set(with(w2), v3, "v2-degree-3/w2-leaf"),
                2 => {
                    let w1 = self.others(w2, &[v3])[0];
                    if self.deg(vl1) >= 3 {
                        let wl = self.others(vl1, &[vl2, vl])[0];
                        self.pair(with(w2), vec![w1, w2, vl, wl, vl1], v3, vl1, "v2-degree-3/w2-degree-2/fork-far")
                    } else {
                        self.pair(with(w2), vec![w1, w2, vl, vl1, vl2], v3, vl2, "v2-degree-3/w2-degree-2/path-far")
                    }
                }
                3 => {
                    let o = self.others(w2, &[v3]);
                    self.pair(with(w2), vec![o[0], o[1], w2, vl, vl1], v3, vl1, "v2-degree-3/w2-degree-3")
                }
                _ => {
                    let o = self.others(w2, &[v3]);
                    self.set(vec![o[0], o[1], o[2], w2, v3], v3, "v2-degree-3/w2-degree-4")
                }
            };
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Longest path with `d(v2) = 2` and `d(v3) ≥ 3`.
    fn third_vertex(&self, path: &[usize]) -> Option<Good5Found> {
        if path.len() < 4 {
            return None;
        }
        let (v1, v2, v3, v4) = (path[0], path[1], path[2], path[3]);
        let ws = self.others(v3, &[v2, v4]);
        for &w2 in &ws {
            if self.deg(w2) >= 3 {
                let w1 = self.others(w2, &[v3])[0];
                let alt: Vec<usize> = [w1, w2].into_iter().chain(path[2..].iter().copied()).collect();
                if let Some(f) = self.second_vertex(&alt) {
                    return Some(f);
                }
            }
        }
        for &w2 in &ws {
            if self.deg(w2) == 2 {
                let w1 = self.others(w2, &[v3])[0];
                if let Some(f) = self.set(vec![v1, w1, v2, w2, v3], v3, "v3/pendant-path") {
                    return Some(f);
                }
            }
        }
        let leaves: Vec<usize> = ws.iter().copied().filter(|&w| self.deg(w) == 1).collect();
        match leaves.len() {
            0 => None,
            1 => self.set(vec![v1, v2, leaves[0], v3, v4], v4, "v3/one-leaf"),
            _ => self.set(vec![v1, v2, leaves[0], leaves[1], v3], v3, "v3/two-leaves"),
        }
    }

    /// Longest path with `d(v2) = d(v3) = 2`.
    fn fourth_vertex(&self, path: &[usize]) -> Option<Good5Found> {
        let l = path.len();
        if l < 5 {
            return None;
        }
        let (v1, v2, v3, v4, v5) = (path[0], path[1], path[2], path[3], path[4]);
        let (vl, vl1, vl2) = (path[l - 1], path[l - 2], path[l - 3]);
        if self.deg(v4) == 2 {
            return self.set(vec![v1, v2, v3, v4, v5], v5, "v4-degree-2");
        }
        for w3 in self.others(v4, &[v3, v5]) {
            let x1 = vec![v1, v2, v3, w3, v4];
            if self.deg(w3) == 1 {
                if let Some(f) = self.set(x1, v4, "w3-leaf") {
                    return Some(f);
                }
                continue;
            }
            let ws = self.others(w3, &[v4]);
            if let Some(&w2) = ws.iter().find(|&&w| self.deg(w) >= 2) {
                let w1 = self.others(w2, &[w3])[0];
                let alt: Vec<usize> = [w1, w2, w3].into_iter().chain(path[3..].iter().copied()).collect();
                let found = self
                    .second_vertex(&alt)
                    .or_else(|| self.third_vertex(&alt))
                    .or_else(|| self.pair(x1.clone(), vec![w1, w2, w3, vl, vl1], v4, vl1, "w3/path-through-w3"));
                if found.is_some() {
                    return found;
                }
                continue;
            }
            let found = match ws.len() {
                // the published roots (v4, w3) leave w3v4 reversed twice;
                // keeping only v4 removes w3 as well
                3 => self.pair(x1, vec![ws[0], ws[1], ws[2], w3], v4, v4, "w3/three-leaves"),
                2 => self.pair(x1, vec![ws[0], ws[1], w3, vl, vl1], v4, vl1, "w3/two-leaves"),
                1 => {
                    let rev: Vec<usize> = path.iter().rev().copied().collect();
                    self.second_vertex(&rev)
                        .or_else(|| self.pair(x1, vec![ws[0], w3, vl, vl1, vl2], v4, vl2, "w3/one-leaf"))
                }
                _ => None,
            };
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn case_analysis(&self) -> Option<Good5Found> {
        if let Some(f) = self.three_leaves() {
            return Some(f);
        }
        let path = self.view.longest_path();
        let rev: Vec<usize> = path.iter().rev().copied().collect();
        for p in [&path, &rev] {
            if p.len() < 3 {
                continue;
            }
            let found = match (self.deg(p[1]), self.deg(p[2])) {
                (d2, _) if d2 >= 3 => self.second_vertex(p),
                (_, d3) if d3 >= 3 => self.third_vertex(p),
                _ => self.fourth_vertex(p),
            };
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Exhaustive: a root plus whole branches at it totalling four vertices.
    fn set_search(&self) -> Option<Good5Found> {
        for t in self.view.vertices() {
            let branches: Vec<(usize, usize)> =
                self.view.branch_sizes(t).into_iter().filter(|&(_, s)| s <= 4).collect();
            let mut chosen = Vec::new();
            if let Some(sel) = subset_sum(&branches, 0, 4, &mut chosen, &mut |sel| {
                let mut x = vec![t];
                for &(u, _) in sel {
                    x.extend(self.view.branch(u, t));
                }
                self.set(x, t, "search/set")
            }) {
                return Some(sel);
            }
        }
        None
    }

    /// Exhaustive: the removed seven vertices are whole branches at the two
    /// roots, and the seven edges they take split 4/3 between the sets.
    fn pair_search(&self) -> Option<Good5Found> {
        let verts = self.view.vertices();
        for &t1 in &verts {
            for &t2 in verts.iter().filter(|&&t2| t2 >= t1) {
                let roots = if t1 == t2 { vec![(t1, t1)] } else { vec![(t1, t2), (t2, t1)] };
                let mut branches = Vec::new();
                for (t, other) in roots {
                    for (u, s) in self.view.branch_sizes(t) {
                        if s <= 7 && (t == other || !self.view.branch(u, t).contains(&other)) {
                            branches.push(((u, t), s));
                        }
                    }
                }
                let mut chosen = Vec::new();
                let found = subset_sum(&branches, 0, 7, &mut chosen, &mut |sel| {
                    let mut d = Vec::new();
                    for &((u, t), _) in sel {
                        d.extend(self.view.branch(u, t));
                    }
                    let mut edges = Vec::new();
                    for &a in &d {
                        for b in self.view.neighbours(a) {
                            if !d.contains(&b) || a < b {
                                edges.push((a, b));
                            }
                        }
                    }
                    if edges.len() != 7 {
                        return None;
                    }
                    for mask in 0u32..128 {
                        if mask.count_ones() != 4 {
                            continue;
                        }
                        let ends = |want: bool| {
                            let mut xs = Vec::new();
                            for (i, &(a, b)) in edges.iter().enumerate() {
                                if (mask >> i & 1 == 1) == want {
                                    xs.push(a);
                                    xs.push(b);
                                }
                            }
                            xs
                        };
                        if let Some(f) = self.pair(ends(true), ends(false), t1, t2, "search/pair") {
                            return Some(f);
                        }
                    }
                    None
                });
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }
}

/// Enumerates subsets of `items` (from index `from`) whose sizes sum to
/// `target`, stopping at the first for which `visit` returns a value.
fn subset_sum<T: Copy, R, F: FnMut(&[(T, usize)]) -> Option<R>>(
    items: &[(T, usize)],
    from: usize,
    target: usize,
    chosen: &mut Vec<(T, usize)>,
    visit: &mut F,
) -> Option<R> {
    if target == 0 {
        return visit(chosen);
    }
    for i in from..items.len() {
        if items[i].1 <= target {
            chosen.push(items[i]);
            let r = subset_sum(items, i + 1, target - items[i].1, chosen, visit);
            chosen.pop();
            if r.is_some() {
                return r;
            }
        }
    }
    None
}

pub(crate) fn find_good5_in(view: &TreeView) -> Result<Good5Found> {
    if view.count() < 5 {
        return Err(Error::InvalidParameter(format!(
            "good 5 witness needs at least 5 vertices, tree has {}",
            view.count()
        )));
    }
    let s = Search { view };
    s.case_analysis()
        .or_else(|| s.set_search())
        .or_else(|| s.pair_search())
        .ok_or_else(|| Error::NoWitness("tree has no good 5-set or 5-pair".into()))
}

/// Finds a good 5-set or good 5-pair. The proof's longest-path case
/// analysis runs first; exhaustive set and pair searches back it up. Every
/// returned witness has been checked.
pub fn find_good5(t: &LabelledGraph) -> Result<Good5Found> {
    find_good5_in(&TreeView::new(t)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::generate::{random_tree, spider5};

    #[test]
    fn spec_examples() {
        let p5 = LabelledGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let f = find_good5(&p5).unwrap();
        assert_eq!(f.witness, Good5Witness::Set { x: vec![0, 1, 2, 3, 4], root: 4 });
        let star = LabelledGraph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let f = find_good5(&star).unwrap();
        assert_eq!(f.witness, Good5Witness::Set { x: vec![0, 1, 2, 3, 4], root: 0 });
        let sp = spider5(1).unwrap();
        let f = find_good5(&sp).unwrap();
        check_good5(&sp, &f.witness).unwrap();
    }

    #[test]
    fn small_trees_are_rejected() {
        let p4 = LabelledGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(find_good5(&p4).is_err());
    }

    #[test]
    fn random_trees() {
        for seed in 0..400 {
            let n = 5 + (seed as usize * 13) % 56;
            let t = random_tree(n, seed);
            let f = find_good5(&t).unwrap();
            check_good5(&t, &f.witness).unwrap();
        }
    }
}

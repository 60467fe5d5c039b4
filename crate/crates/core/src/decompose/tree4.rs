//! Decomposition of a tree into edge-disjoint induced subtrees of order at
//! most four, at most `⌈3(n-1)/8⌉` of them.
//!
//! Each round looks at the lexicographically least longest path
//! `v1 … vt` and splits off either one part removing three vertices (three
//! edges) or three parts removing eight vertices (eight edges), depending on
//! the degrees near the ends of the path.

use crate::error::{Error, Result};
use crate::graph::LabelledGraph;

use super::tree::TreeView;

enum End {
    Done { parts: Vec<Vec<usize>>, removed: Vec<usize> },
    /// Both ends of the analysis lead here: `v3` has degree 3 and its third
    /// neighbour `w2` (of degree 2) continues to the leaf `w1`.
    Degree3 { w2: usize, w1: usize },
}

fn others(view: &TreeView, v: usize, excl: &[usize]) -> Vec<usize> {
    view.neighbours(v).filter(|w| !excl.contains(w)).collect()
}

/// Case where `v2` has all neighbours but `v3` as leaves and degree ≥ 3.
fn at_second(view: &TreeView, v2: usize, v3: usize) -> Option<End> {
    let leaves = others(view, v2, &[v3]);
    match view.degree(v2) {
        d if d >= 4 => {
            let l = &leaves[..3];
            Some(End::Done {
                parts: vec![vec![l[0], l[1], l[2], v2]],
                removed: l.to_vec(),
            })
        }
        3 => Some(End::Done {
            parts: vec![vec![leaves[0], leaves[1], v2, v3]],
            removed: vec![leaves[0], leaves[1], v2],
        }),
        _ => None,
    }
}

fn end_case(view: &TreeView, path: &[usize]) -> End {
    let (v1, v2, v3) = (path[0], path[1], path[2]);
    if let Some(done) = at_second(view, v2, v3) {
        return done;
    }
    let v4 = path[3];
    if view.degree(v3) == 2 {
        return End::Done {
            parts: vec![vec![v1, v2, v3, v4]],
            removed: vec![v1, v2, v3],
        };
    }
    let ws = others(view, v3, &[v2, v4]);
    if let Some(&w) = ws.iter().find(|&&w| view.degree(w) >= 3) {
        return at_second(view, w, v3).expect("degree at least 3");
    }
    if let Some(&w) = ws.iter().find(|&&w| view.degree(w) == 1) {
        return End::Done {
            parts: vec![vec![v1, v2, v3, w]],
            removed: vec![v1, v2, w],
        };
    }
    // every other neighbour of v3 starts a pendant path of length two
    let far = |w: usize| others(view, w, &[v3])[0];
    let t = path.len();
    match view.degree(v3) {
        d if d >= 5 => {
            let (w2, x2, y2) = (ws[0], ws[1], ws[2]);
            let (w1, x1, y1) = (far(w2), far(x2), far(y2));
            End::Done {
                parts: vec![vec![v1, v2, v3, w2], vec![x1, x2, v3, y2], vec![w1, w2, y1, y2]],
                removed: vec![v1, w1, x1, y1, v2, w2, x2, y2],
            }
        }
        4 => {
            let (w2, x2) = (ws[0], ws[1]);
            let (w1, x1) = (far(w2), far(x2));
            End::Done {
                parts: vec![
                    vec![v1, v2, v3, w2],
                    vec![x1, x2, v3, v4],
                    vec![w1, w2, path[t - 2], path[t - 1]],
                ],
                removed: vec![v1, w1, x1, v2, w2, x2, v3, path[t - 1]],
            }
        }
        _ => End::Degree3 { w2: ws[0], w1: far(ws[0]) },
    }
}

/// Splits the tree into parts; see the module documentation.
pub fn tree4_decomposition(t: &LabelledGraph) -> Result<Vec<Vec<usize>>> {
    let mut view = TreeView::new(t)?;
    let mut parts = Vec::new();
    loop {
        if view.count() <= 4 {
            if view.count() >= 2 {
                parts.push(view.vertices());
            }
            break;
        }
        let path = view.longest_path();
        let (new_parts, removed) = match end_case(&view, &path) {
            End::Done { parts, removed } => (parts, removed),
            End::Degree3 { w2, w1 } => {
                let rev: Vec<usize> = path.iter().rev().copied().collect();
                match end_case(&view, &rev) {
                    End::Done { parts, removed } => (parts, removed),
                    End::Degree3 { w2: wt1, w1: wt } => {
                        let l = path.len();
                        let v = |i: usize| path[i - 1];
                        if l == 5 {
                            // the whole tree: a path of five plus a pendant
                            // path of two at the middle
                            (
                                vec![vec![v(1), v(2), v(3), v(4)], vec![v(3), w2], vec![w1, w2, v(4), v(5)]],
                                view.vertices(),
                            )
                        } else {
                            (
                                vec![
                                    vec![v(1), v(2), v(3), w2],
                                    vec![v(l), v(l - 1), v(l - 2), wt1],
                                    vec![w1, w2, wt1, wt],
                                ],
                                vec![v(1), w1, v(2), w2, v(l), wt, v(l - 1), wt1],
                            )
                        }
                    }
                }
            }
        };
        for mut p in new_parts {
            p.sort_unstable();
            parts.push(p);
        }
        view.remove_all(&removed);
    }
    check_tree4_parts(t, &parts)?;
    Ok(parts)
}

/// Bound on the number of parts: `⌈3(n-1)/8⌉`.
pub fn tree4_bound(n: usize) -> usize {
    (3 * n.saturating_sub(1)).div_ceil(8)
}

/// Definitional check: parts of order ≤ 4 whose induced edge sets are
/// pairwise disjoint and cover every edge, within the count bound.
pub fn check_tree4_parts(t: &LabelledGraph, parts: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; t.m()];
    for p in parts {
        if p.len() > 4 {
            return Err(Error::NoWitness(format!("tree4 part {p:?} has more than 4 vertices")));
        }
        for (i, &a) in p.iter().enumerate() {
            for &b in &p[i + 1..] {
                if let Some(e) = t.edge_index(a, b) {
                    if seen[e] {
                        return Err(Error::Overlap(format!("edge {:?} lies in two tree4 parts", t.edge(e))));
                    }
                    seen[e] = true;
                }
            }
        }
    }
    if let Some(e) = seen.iter().position(|&s| !s) {
        return Err(Error::NoWitness(format!("edge {:?} not covered by tree4 parts", t.edge(e))));
    }
    if parts.len() > tree4_bound(t.n()) {
        return Err(Error::NoWitness(format!(
            "{} tree4 parts exceed the bound {}",
            parts.len(),
            tree4_bound(t.n())
        )));
    }
    Ok(())
}

//! Vertex-by-vertex planners: degeneracy order and greedy star splitting.

use serde_json::Value;

use super::{details, finish, Builder, PlannerReport};
use crate::decompose::degeneracy_ordering;
use crate::error::{Error, Result};
use crate::graph::{LabelledGraph, Orientation};

/// In degeneracy order, invert each vertex with its disagreeing later
/// neighbours. Needs `p ≥ k + 1` for degeneracy `k`; at most `n - 1` steps.
pub fn plan_degenerate(g: &LabelledGraph, p: usize, o1: &Orientation, o2: &Orientation) -> Result<PlannerReport> {
    let ord = degeneracy_ordering(g);
    if p < ord.k + 1 {
        return Err(Error::InvalidParameter(format!(
            "degenerate planner needs p >= {} for degeneracy {}, got {p}",
            ord.k + 1,
            ord.k
        )));
    }
    let pos = ord.positions();
    let mut b = Builder::new(g, o1, o2, p, "degenerate")?;
    for &v in &ord.order {
        let mut step = vec![v];
        step.extend(
            g.incident(v)
                .iter()
                .filter(|&&(w, e)| pos[w] > pos[v] && b.diff[e])
                .map(|&(w, _)| w),
        );
        b.invert(&step);
    }
    let bound = g.n().saturating_sub(1);
    let d = details([("degeneracy", Value::from(ord.k))]);
    finish(g, o1, o2, b.plan, bound, "degenerate", d)
}

/// `⌊(m + (p-2)(n-1)) / (p-1)⌋`.
pub fn procedure1_bound(m: usize, n: usize, p: usize) -> usize {
    (m + (p - 2) * n.saturating_sub(1)) / (p - 1)
}

/// Removes vertices by descending degree (ties by label); each vertex's
/// disagreeing remaining edges are reversed `p - 1` at a time by star
/// inversions, before the rest of the graph is handled.
pub fn plan_procedure1(g: &LabelledGraph, p: usize, o1: &Orientation, o2: &Orientation) -> Result<PlannerReport> {
    if p < 3 {
        return Err(Error::InvalidParameter(format!("procedure1 needs p >= 3, got {p}")));
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut removed = vec![false; g.n()];
    let mut b = Builder::new(g, o1, o2, p, "procedure1")?;
    for &v in &order {
        let wrong: Vec<usize> = g
            .incident(v)
            .iter()
            .filter(|&&(w, e)| !removed[w] && b.diff[e])
            .map(|&(w, _)| w)
            .collect();
        for chunk in wrong.chunks(p - 1) {
            let mut step = vec![v];
            step.extend_from_slice(chunk);
            b.invert(&step);
        }
        removed[v] = true;
    }
    let bound = procedure1_bound(g.m(), g.n(), p);
    finish(g, o1, o2, b.plan, bound, "procedure1", details([]))
}

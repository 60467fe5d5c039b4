//! Constructive planners. Each turns an upper-bound argument into a plan
//! transforming one orientation into another; every plan is verified and
//! checked against its bound before it is returned.

mod connected;
mod planar;
mod reduction;
mod simple;
mod tree;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

pub use connected::plan_connected3;
pub use planar::{plan_planar_small, planar_small_bound};
pub use reduction::{plan_planar_general, plan_uppergen, psi, uppergen_bound, ReductionOptions};
pub use simple::{plan_degenerate, plan_procedure1, procedure1_bound};
pub use tree::{conv_bound_for, conv_plan_tree, lift_conv_to_id, TreeRoute};

use crate::decompose::{degeneracy_ordering, edges_connected};
use crate::error::{Error, Result};
use crate::graph::{
    apply_plan, disagreement, verify_plan, EdgeMask, InversionPlan, InversionSet, LabelledGraph, Orientation,
};

/// A verified plan, the length its construction guarantees, and which
/// sub-strategy produced it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PlannerReport {
    pub plan: InversionPlan,
    pub bound: usize,
    pub route: String,
    pub details: BTreeMap<String, Value>,
}

/// Tracks the current disagreement with the target while steps are
/// emitted, so later steps are chosen against the post-step state.
pub(crate) struct Builder<'a> {
    pub g: &'a LabelledGraph,
    pub diff: Vec<bool>,
    pub plan: InversionPlan,
    mark: Vec<bool>,
}

impl<'a> Builder<'a> {
    pub fn new(g: &'a LabelledGraph, o1: &Orientation, o2: &Orientation, p: usize, name: &str) -> Result<Self> {
        let d = disagreement(o1, o2)?;
        if d.len() != g.m() {
            return Err(Error::LengthMismatch {
                expected: g.m(),
                got: d.len(),
            });
        }
        Ok(Builder {
            g,
            diff: (0..g.m()).map(|e| d.contains(e)).collect(),
            plan: InversionPlan::new(p, name),
            mark: vec![false; g.n()],
        })
    }

    /// Builder for reversing every edge.
    pub fn converse(g: &'a LabelledGraph, p: usize, name: &str) -> Self {
        Builder {
            g,
            diff: vec![true; g.m()],
            plan: InversionPlan::new(p, name),
            mark: vec![false; g.n()],
        }
    }

    pub fn disagrees(&self, u: usize, v: usize) -> bool {
        self.g.edge_index(u, v).is_some_and(|e| self.diff[e])
    }

    pub fn remaining(&self) -> usize {
        self.diff.iter().filter(|&&d| d).count()
    }

    /// Inverts `xs` (no-op for fewer than two vertices).
    pub fn invert(&mut self, xs: &[usize]) {
        let set = InversionSet::from_vertices(xs.iter().copied());
        if set.len() < 2 {
            return;
        }
        for &v in set.vertices() {
            self.mark[v] = true;
        }
        for &v in set.vertices() {
            for &(w, e) in self.g.incident(v) {
                if w > v && self.mark[w] {
                    self.diff[e] = !self.diff[e];
                }
            }
        }
        for &v in set.vertices() {
            self.mark[v] = false;
        }
        self.plan.push(set);
    }

    /// Inverts the endpoints of `e` if it still disagrees.
    pub fn fix_edge(&mut self, e: usize) {
        if self.diff[e] {
            let (u, v) = self.g.edge(e);
            self.invert(&[u, v]);
        }
    }
}

/// Verifies the plan and its length against `bound`, then packages it.
pub(crate) fn finish(
    g: &LabelledGraph,
    o1: &Orientation,
    o2: &Orientation,
    plan: InversionPlan,
    bound: usize,
    route: impl Into<String>,
    details: BTreeMap<String, Value>,
) -> Result<PlannerReport> {
    let route = route.into();
    let report = verify_plan(g, o1, o2, &plan, plan.p);
    if !report.valid {
        return Err(Error::NoWitness(format!(
            "planner {route} produced an invalid plan: {:?}",
            report.violations
        )));
    }
    if plan.len() > bound {
        return Err(Error::NoWitness(format!(
            "planner {route} produced {} steps, above its bound {bound}",
            plan.len()
        )));
    }
    Ok(PlannerReport {
        plan,
        bound,
        route,
        details,
    })
}

/// Applies `plan_h` (steps inside `V(H)`, where `H` is spanned by
/// `h_edges`), then plans the induced subgraph on `i_vertices` from the
/// intermediate orientation. `E(H)` and `E(I)` must partition `E(g)`.
pub fn compose_subgraph_then_induced<F>(
    g: &LabelledGraph,
    o1: &Orientation,
    o2: &Orientation,
    h_edges: &EdgeMask,
    plan_h: &InversionPlan,
    i_vertices: &[usize],
    planner_i: F,
) -> Result<InversionPlan>
where
    F: FnOnce(&LabelledGraph, &Orientation, &Orientation) -> Result<InversionPlan>,
{
    let mut in_h = vec![false; g.n()];
    for e in h_edges.iter() {
        let (u, v) = g.edge(e);
        in_h[u] = true;
        in_h[v] = true;
    }
    for step in &plan_h.steps {
        if let Some(&v) = step.vertices().iter().find(|&&v| v >= g.n() || !in_h[v]) {
            return Err(Error::Overlap(format!("H-plan step touches vertex {v} outside V(H)")));
        }
    }
    let mut iv = i_vertices.to_vec();
    iv.sort_unstable();
    iv.dedup();
    let (sub, map) = g.induced_subgraph(&iv);
    let mut covered = h_edges.clone();
    for &e in &map {
        if h_edges.contains(e) {
            return Err(Error::Overlap(format!("edge {:?} lies in both H and I", g.edge(e))));
        }
        covered.insert(e);
    }
    if covered.count() != g.m() {
        return Err(Error::Overlap("H and I do not cover every edge".into()));
    }
    let mid = apply_plan(g, o1, plan_h)?;
    let plan_i = planner_i(&sub, &mid.restrict(&map), &o2.restrict(&map))?;
    let mut plan = plan_h.clone();
    plan.extend(&plan_i.relabel(&iv));
    Ok(plan)
}

/// Planner choice for [`plan_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    Auto,
    Uppergen,
    Connected3,
    Degenerate,
    Procedure1,
    Tree,
    Planar,
}

#[derive(Clone, Debug, Default)]
pub struct PlanOptions {
    /// Trust that the graph is planar (enables the planar planners).
    pub planar: bool,
    pub reduction: ReductionOptions,
}

/// Outcome of one candidate in [`best_plan`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub name: String,
    pub length: Option<usize>,
    pub bound: Option<usize>,
    pub error: Option<String>,
}

/// Names of the planners applicable to `g` and `p`.
pub fn applicable_planners(g: &LabelledGraph, p: usize, planar: bool) -> Vec<&'static str> {
    let mut out = Vec::new();
    if p >= 2 {
        out.push("uppergen");
    }
    if p >= 3 {
        out.push("procedure1");
        if edges_connected(g) {
            out.push("connected3");
        }
        if g.is_forest() {
            out.push("tree");
        }
    }
    if p > degeneracy_ordering(g).k {
        out.push("degenerate");
    }
    if planar {
        if (3..=5).contains(&p) {
            out.push("planar-small");
        }
        if p >= 2 {
            out.push("planar-general");
        }
    }
    out
}

/// Runs one named planner.
pub fn run_planner(
    name: &str,
    g: &LabelledGraph,
    p: usize,
    o1: &Orientation,
    o2: &Orientation,
    opts: &PlanOptions,
) -> Result<PlannerReport> {
    match name {
        "uppergen" => plan_uppergen(g, p, o1, o2, &opts.reduction),
        "procedure1" => plan_procedure1(g, p, o1, o2),
        "connected3" => {
            if p < 3 {
                return Err(Error::InvalidParameter(format!("connected3 needs p >= 3, got {p}")));
            }
            plan_connected3(g, o1, o2, false)
        }
        "tree" => lift_conv_to_id(g, p, o1, o2),
        "degenerate" => plan_degenerate(g, p, o1, o2),
        "planar-small" => plan_planar_small(g, p, o1, o2, opts.planar),
        "planar-general" => plan_planar_general(g, p, o1, o2, &opts.reduction),
        other => Err(Error::InvalidParameter(format!("unknown planner {other:?}"))),
    }
}

/// Runs every applicable planner concurrently and keeps the shortest plan,
/// ties broken by planner name. All candidates are listed in the details.
pub fn best_plan(
    g: &LabelledGraph,
    p: usize,
    o1: &Orientation,
    o2: &Orientation,
    opts: &PlanOptions,
) -> Result<PlannerReport> {
    let names = applicable_planners(g, p, opts.planar);
    if names.is_empty() {
        return Err(Error::InvalidParameter(format!("no planner applies for p = {p}")));
    }
    let results: Vec<(&str, Result<PlannerReport>)> =
        names.par_iter().map(|&n| (n, run_planner(n, g, p, o1, o2, opts))).collect();
    let candidates: Vec<Candidate> = results
        .iter()
        .map(|(n, r)| Candidate {
            name: n.to_string(),
            length: r.as_ref().ok().map(|r| r.plan.len()),
            bound: r.as_ref().ok().map(|r| r.bound),
            error: r.as_ref().err().map(|e| e.to_string()),
        })
        .collect();
    let best = results
        .into_iter()
        .filter_map(|(n, r)| r.ok().map(|r| (n, r)))
        .min_by(|a, b| a.1.plan.len().cmp(&b.1.plan.len()).then(a.0.cmp(b.0)));
    let Some((name, mut report)) = best else {
        return Err(Error::NoWitness(format!("every planner failed: {candidates:?}")));
    };
    report.details.insert("winner_route".into(), Value::from(report.route.clone()));
    report.route = name.to_string();
    report
        .details
        .insert("candidates".into(), serde_json::to_value(&candidates)?);
    Ok(report)
}

/// Dispatches on a [`Strategy`].
pub fn plan_with(
    strategy: Strategy,
    g: &LabelledGraph,
    p: usize,
    o1: &Orientation,
    o2: &Orientation,
    opts: &PlanOptions,
) -> Result<PlannerReport> {
    let name = match strategy {
        Strategy::Auto => return best_plan(g, p, o1, o2, opts),
        Strategy::Uppergen => "uppergen",
        Strategy::Connected3 => "connected3",
        Strategy::Degenerate => "degenerate",
        Strategy::Procedure1 => "procedure1",
        Strategy::Tree => "tree",
        Strategy::Planar => {
            if (3..=5).contains(&p) {
                "planar-small"
            } else {
                "planar-general"
            }
        }
    };
    run_planner(name, g, p, o1, o2, opts)
}

pub(crate) fn details<const N: usize>(pairs: [(&str, Value); N]) -> BTreeMap<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

#[cfg(test)]
mod tests;

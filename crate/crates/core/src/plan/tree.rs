//! Converse plans for trees and their lift to arbitrary orientation pairs
//! of forests.
//!
//! Reversing a whole tree uses one of four routes: short paths (`p = 3`),
//! induced 4-vertex pieces (`p = 4`), good 5-sets and 5-pairs (`p = 5`), or
//! repeated dense extraction (`p ≥ 6`). Every route applicable to `p` runs;
//! the reported bound is the best guarantee among them.

use serde::Serialize;
use serde_json::Value;

use super::{details, finish, Builder, PlannerReport};
use crate::decompose::{
    extract_within, extraction_threshold, find_good5_in, kotzig_p3, tree4_bound, tree4_decomposition, TreeView,
};
use crate::error::{Error, Result};
use crate::graph::{InversionPlan, InversionSet, LabelledGraph, Orientation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TreeRoute {
    Tree2,
    Tree4,
    Tree5,
    Extract,
}

impl TreeRoute {
    pub const ALL: [TreeRoute; 4] = [TreeRoute::Tree2, TreeRoute::Tree4, TreeRoute::Tree5, TreeRoute::Extract];

    pub fn name(self) -> &'static str {
        match self {
            TreeRoute::Tree2 => "tree2",
            TreeRoute::Tree4 => "tree4",
            TreeRoute::Tree5 => "tree5",
            TreeRoute::Extract => "extract",
        }
    }

    fn min_p(self) -> usize {
        match self {
            TreeRoute::Tree2 => 3,
            TreeRoute::Tree4 => 4,
            TreeRoute::Tree5 => 5,
            TreeRoute::Extract => 6,
        }
    }
}

/// Guaranteed converse length of `route` on an `n`-vertex tree, or `None`
/// when the route needs a larger cap.
pub fn conv_bound_for(route: TreeRoute, n: usize, p: usize) -> Option<usize> {
    if p < route.min_p() {
        return None;
    }
    let e = n.saturating_sub(1);
    Some(match route {
        TreeRoute::Tree2 => e.div_ceil(2),
        TreeRoute::Tree4 => tree4_bound(n),
        TreeRoute::Tree5 => (2 * e).div_ceil(7),
        TreeRoute::Extract => {
            let thr = extraction_threshold(p);
            let mut k = 0;
            while (k as f64) * thr < e as f64 - 1e-9 {
                k += 1;
            }
            k
        }
    })
}

fn route_steps(t: &LabelledGraph, p: usize, route: TreeRoute) -> Result<Vec<Vec<usize>>> {
    match route {
        TreeRoute::Tree2 => Ok(kotzig_p3(t)?.parts),
        TreeRoute::Tree4 => tree4_decomposition(t),
        TreeRoute::Tree5 => {
            let mut view = TreeView::new(t)?;
            let mut steps = Vec::new();
            while view.count() > 5 {
                let found = find_good5_in(&view)?;
                steps.extend(found.witness.steps());
                view.remove_all(&found.witness.removed());
            }
            steps.push(view.vertices());
            Ok(steps)
        }
        TreeRoute::Extract => {
            let mut alive = vec![true; t.n()];
            let root = 0;
            let mut steps = Vec::new();
            loop {
                let left: Vec<usize> = (0..t.n()).filter(|&v| alive[v]).collect();
                if left.len() <= p {
                    steps.push(left);
                    return Ok(steps);
                }
                let set = extract_within(t, &alive, root, p)?;
                // drop the set's edges and keep the root's piece
                let mut in_x = vec![false; t.n()];
                for &v in &set.x {
                    in_x[v] = true;
                }
                let mut keep = vec![false; t.n()];
                keep[root] = true;
                let mut stack = vec![root];
                while let Some(v) = stack.pop() {
                    for w in t.neighbours(v) {
                        if alive[w] && !keep[w] && !(in_x[v] && in_x[w]) {
                            keep[w] = true;
                            stack.push(w);
                        }
                    }
                }
                alive = keep;
                steps.push(set.x);
            }
        }
    }
}

/// Plan reversing every edge of the tree `t` with `(≤p)`-inversions.
pub fn conv_plan_tree(t: &LabelledGraph, p: usize) -> Result<PlannerReport> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if p < 3 {
        return Err(Error::InvalidParameter(format!("tree planner needs p >= 3, got {p}")));
    }
    let o1 = Orientation::zeros(t.m());
    let o2 = o1.converse();
    let mut best: Option<(TreeRoute, InversionPlan)> = None;
    let mut bound = usize::MAX;
    let mut d = details([]);
    for route in TreeRoute::ALL {
        let Some(rb) = conv_bound_for(route, t.n(), p) else {
            continue;
        };
        bound = bound.min(rb);
        let mut b = Builder::converse(t, p, route.name());
        if t.m() > 0 {
            for s in route_steps(t, p, route)? {
                b.invert(&s);
            }
        }
        d.insert(format!("{}_length", route.name()), Value::from(b.plan.len()));
        d.insert(format!("{}_bound", route.name()), Value::from(rb));
        if best.as_ref().is_none_or(|(_, plan)| b.plan.len() < plan.len()) {
            best = Some((route, b.plan));
        }
    }
    let (route, plan) = best.expect("tree2 applies for p >= 3");
    finish(t, &o1, &o2, plan, bound, route.name(), d)
}

/// Transforms `o1` into `o2` on a forest: the components of the
/// disagreement are reversed by converse plans, and since components on the
/// same side of the 2-colouring of their adjacency forest share no edge,
/// steps from different components on one side are packed together.
pub fn lift_conv_to_id(f: &LabelledGraph, p: usize, o1: &Orientation, o2: &Orientation) -> Result<PlannerReport> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    if p < 3 {
        return Err(Error::InvalidParameter(format!("tree planner needs p >= 3, got {p}")));
    }
    let b = Builder::new(f, o1, o2, p, "tree")?;
    let n = f.n();
    // components of (V, E≠)
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        comp[s] = id;
        let mut members = vec![s];
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            i += 1;
            for &(w, e) in f.incident(v) {
                if b.diff[e] && comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    // 2-colour the forest of components joined by agreeing edges
    let mut side = vec![u8::MAX; comps.len()];
    for s in 0..comps.len() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(c) = stack.pop() {
            for &v in &comps[c] {
                for &(w, e) in f.incident(v) {
                    let c2 = comp[w];
                    if !b.diff[e] && side[c2] == u8::MAX {
                        side[c2] = 1 - side[c];
                        stack.push(c2);
                    }
                }
            }
        }
    }
    let mut bound = 0;
    let mut nontrivial = 0;
    let mut routes = std::collections::BTreeSet::new();
    let mut per_side: [Vec<(usize, Vec<usize>)>; 2] = [Vec::new(), Vec::new()];
    for (c, members) in comps.iter().enumerate() {
        if members.len() < 2 {
            continue;
        }
        nontrivial += 1;
        let (sub, _) = f.induced_subgraph(members);
        let rep = conv_plan_tree(&sub, p)?;
        bound += rep.bound;
        routes.insert(rep.route.clone());
        for step in rep.plan.relabel(members).steps {
            per_side[side[c] as usize].push((c, step.vertices().to_vec()));
        }
    }
    let mut plan = InversionPlan::new(p, "tree");
    let mut unpacked = 0;
    for steps in &mut per_side {
        unpacked += steps.len();
        // first-fit decreasing; a bin holds at most one step per component
        steps.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.0.cmp(&b.0)));
        let mut bins: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for (c, s) in steps.iter() {
            match bins.iter_mut().find(|(cs, vs)| vs.len() + s.len() <= p && !cs.contains(c)) {
                Some((cs, vs)) => {
                    cs.push(*c);
                    vs.extend_from_slice(s);
                }
                None => bins.push((vec![*c], s.clone())),
            }
        }
        for (_, vs) in bins {
            plan.push(InversionSet::from_vertices(vs));
        }
    }
    let d = details([
        ("components", Value::from(nontrivial)),
        ("unpacked_steps", Value::from(unpacked)),
        ("component_routes", Value::from(routes.into_iter().collect::<Vec<_>>())),
    ]);
    finish(f, o1, o2, plan, bound, "tree", d)
}

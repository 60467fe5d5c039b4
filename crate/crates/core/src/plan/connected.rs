//! `(≤3)`-inversion plans for connected graphs with at most `⌈3m/4⌉`
//! steps, via two routes:
//!
//! * A: remove an inclusion-minimal triangle transversal `F`, decompose the
//!   (connected, triangle-free) rest into `⌈(m-|F|)/2⌉` short paths, fix
//!   each path with one inversion, then fix `F` edge by edge:
//!   `⌈(m+|F|)/2⌉` steps.
//! * B: decompose the whole graph into short paths; path `i` owns the
//!   edges its vertices induce among those not owned earlier. Fixing in
//!   reverse order, each owner needs one inversion, or two for a triangle
//!   with exactly two disagreeing edges.

use serde_json::Value;

use super::{details, finish, Builder, PlannerReport};
use crate::decompose::{kotzig_p3, min_triangle_transversal};
use crate::error::{Error, Result};
use crate::graph::{InversionPlan, LabelledGraph, Orientation};

fn route_a(g: &LabelledGraph, o1: &Orientation, o2: &Orientation, exact: bool) -> Result<(InversionPlan, usize)> {
    let f = min_triangle_transversal(g, exact)?;
    let (h, map) = g.edge_subgraph(&f.complement());
    let paths = kotzig_p3(&h)?;
    let mut b = Builder::new(g, o1, o2, 3, "connected3/transversal")?;
    for part in &paths.parts {
        let edges: Vec<usize> = part
            .windows(2)
            .map(|w| map[h.edge_index(w[0], w[1]).expect("path edge")])
            .collect();
        let wrong: Vec<usize> = edges.iter().copied().filter(|&e| b.diff[e]).collect();
        match wrong.len() {
            0 => {}
            1 => b.fix_edge(wrong[0]),
            // both edges of a 3-vertex path; a third edge between its ends
            // would close a triangle, so it lies in F and is fixed below
            _ => b.invert(part),
        }
    }
    for e in f.iter() {
        b.fix_edge(e);
    }
    Ok((b.plan, f.count()))
}

fn route_b(g: &LabelledGraph, o1: &Orientation, o2: &Orientation) -> Result<(InversionPlan, usize, usize)> {
    let paths = kotzig_p3(g)?;
    let mut owned = vec![false; g.m()];
    let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::with_capacity(paths.len());
    for part in &paths.parts {
        let mut mine = Vec::new();
        for (i, &a) in part.iter().enumerate() {
            for &c in &part[i + 1..] {
                if let Some(e) = g.edge_index(a, c) {
                    if !owned[e] {
                        owned[e] = true;
                        mine.push(e);
                    }
                }
            }
        }
        groups.push((part.clone(), mine));
    }
    let mut b = Builder::new(g, o1, o2, 3, "connected3/paths")?;
    let mut triangles = 0;
    for (verts, mine) in groups.iter().rev() {
        let wrong: Vec<usize> = mine.iter().copied().filter(|&e| b.diff[e]).collect();
        if mine.len() == 3 {
            triangles += 1;
        }
        match (mine.len(), wrong.len()) {
            (_, 0) => {}
            (_, 1) => b.fix_edge(wrong[0]),
            (3, 2) => {
                b.fix_edge(wrong[0]);
                b.fix_edge(wrong[1]);
            }
            // a whole path, or a whole triangle
            _ => b.invert(verts),
        }
    }
    Ok((b.plan, paths.len(), triangles))
}

/// Runs both routes and keeps the shorter plan (route A on ties). `exact`
/// uses a minimum triangle transversal, tightening route A to
/// `⌈(m+τ₃)/2⌉`.
pub fn plan_connected3(g: &LabelledGraph, o1: &Orientation, o2: &Orientation, exact: bool) -> Result<PlannerReport> {
    if !crate::decompose::edges_connected(g) {
        return Err(Error::Disconnected);
    }
    let (plan_a, f) = route_a(g, o1, o2, exact)?;
    let (plan_b, paths, triangles) = route_b(g, o1, o2)?;
    let m = g.m();
    let bound_a = (m + f).div_ceil(2);
    let bound_b = paths + triangles;
    let d = details([
        ("transversal_size", Value::from(f)),
        ("route_a_length", Value::from(plan_a.len())),
        ("route_a_bound", Value::from(bound_a)),
        ("route_b_length", Value::from(plan_b.len())),
        ("route_b_paths", Value::from(paths)),
        ("route_b_bound", Value::from(bound_b)),
        ("route_b_triangle_cases", Value::from(triangles)),
    ]);
    let bound = (3 * m).div_ceil(4);
    if plan_b.len() < plan_a.len() {
        finish(g, o1, o2, plan_b, bound, "connected3/paths", d)
    } else {
        finish(g, o1, o2, plan_a, bound, "connected3/transversal", d)
    }
}

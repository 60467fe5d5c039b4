//! Small-cap planner for planar graphs (`p ∈ {3, 4, 5}`): greedily spend
//! each inversion on as many disagreeing edges as one set can reverse
//! without side effects.
//!
//! 1. a triangle with all three edges disagreeing: invert it;
//! 2. a 4-cycle `v1v2v3v4` with all four edges disagreeing: invert
//!    `{v1,v2,v3}` then `{v3,v4,v1}` (the diagonal `v1v3`, if present, is
//!    reversed twice);
//! 3. disagreeing `xy, yz` with `xz ∉ E`: invert `{x,y,z}`;
//! 4. (`p ≥ 4`) disagreeing `wx, yz` with no edges between them: invert
//!    `{w,x,y,z}`;
//!
//! and finally every remaining disagreeing edge on its own. Each step only
//! removes edges from the disagreement, so one pass per step is enough.

use serde_json::Value;

use super::{details, finish, Builder, PlannerReport};
use crate::error::{Error, Result};
use crate::graph::{LabelledGraph, Orientation};

/// Disagreeing neighbours of `v`, ascending.
fn wrong_nbrs(b: &Builder, v: usize) -> Vec<usize> {
    let mut out: Vec<usize> = b.g.incident(v).iter().filter(|&&(_, e)| b.diff[e]).map(|&(w, _)| w).collect();
    out.sort_unstable();
    out
}

fn find_triangle(b: &Builder) -> Option<[usize; 3]> {
    for v in 0..b.g.n() {
        let nb = wrong_nbrs(b, v);
        for (i, &x) in nb.iter().enumerate() {
            if x < v {
                continue;
            }
            for &y in &nb[i + 1..] {
                if b.disagrees(x, y) {
                    return Some([v, x, y]);
                }
            }
        }
    }
    None
}

fn find_four_cycle(b: &Builder) -> Option<[usize; 4]> {
    for v1 in 0..b.g.n() {
        let nb = wrong_nbrs(b, v1);
        for (i, &v2) in nb.iter().enumerate() {
            for &v4 in &nb[i + 1..] {
                let n4 = wrong_nbrs(b, v4);
                if let Some(&v3) = wrong_nbrs(b, v2).iter().find(|&&v3| v3 != v1 && n4.binary_search(&v3).is_ok()) {
                    return Some([v1, v2, v3, v4]);
                }
            }
        }
    }
    None
}

fn find_open_path(b: &Builder) -> Option<[usize; 3]> {
    for y in 0..b.g.n() {
        let nb = wrong_nbrs(b, y);
        for (i, &x) in nb.iter().enumerate() {
            if let Some(&z) = nb[i + 1..].iter().find(|&&z| !b.g.has_edge(x, z)) {
                return Some([x, y, z]);
            }
        }
    }
    None
}

fn find_separated_pair(b: &Builder) -> Option<[usize; 4]> {
    let g = b.g;
    let wrong: Vec<usize> = (0..g.m()).filter(|&e| b.diff[e]).collect();
    for (i, &e) in wrong.iter().enumerate() {
        let (w, x) = g.edge(e);
        for &f in &wrong[i + 1..] {
            let (y, z) = g.edge(f);
            if [w, x].iter().all(|&a| a != y && a != z && !g.has_edge(a, y) && !g.has_edge(a, z)) {
                return Some([w, x, y, z]);
            }
        }
    }
    None
}

/// Planar bound: `⌊(11n - 16)/6⌋` for `p = 3`, `⌊(4n + 10)/3⌋` for
/// `p ∈ {4, 5}`.
pub fn planar_small_bound(n: usize, p: usize) -> usize {
    if p == 3 {
        (11 * n).saturating_sub(16) / 6
    } else {
        (4 * n + 10) / 3
    }
}

/// Runs steps 1, 2, 3 (and 4 when `p ≥ 4`), then single edges. When
/// `planar` is set the reported bound is [`planar_small_bound`]; otherwise
/// the procedure still runs and the bound is its own length.
pub fn plan_planar_small(
    g: &LabelledGraph,
    p: usize,
    o1: &Orientation,
    o2: &Orientation,
    planar: bool,
) -> Result<PlannerReport> {
    if !(3..=5).contains(&p) {
        return Err(Error::InvalidParameter(format!("planar-small needs p in 3..=5, got {p}")));
    }
    let mut b = Builder::new(g, o1, o2, p, "planar-small")?;
    let mut counts = [0usize; 5];
    while let Some(t) = find_triangle(&b) {
        b.invert(&t);
        counts[0] += 1;
    }
    while let Some([v1, v2, v3, v4]) = find_four_cycle(&b) {
        b.invert(&[v1, v2, v3]);
        b.invert(&[v3, v4, v1]);
        counts[1] += 1;
    }
    while let Some(t) = find_open_path(&b) {
        b.invert(&t);
        counts[2] += 1;
    }
    if p >= 4 {
        while let Some(q) = find_separated_pair(&b) {
            b.invert(&q);
            counts[3] += 1;
        }
    }
    for e in 0..g.m() {
        if b.diff[e] {
            b.fix_edge(e);
            counts[4] += 1;
        }
    }
    let bound = if planar {
        planar_small_bound(g.n(), p)
    } else {
        b.plan.len()
    };
    let d = details([
        ("triangles", Value::from(counts[0])),
        ("four_cycles", Value::from(counts[1])),
        ("open_paths", Value::from(counts[2])),
        ("separated_pairs", Value::from(counts[3])),
        ("singles", Value::from(counts[4])),
        ("planar_bound_claimed", Value::from(planar)),
    ]);
    let route = if planar { "planar-small" } else { "planar-small/unclaimed" };
    finish(g, o1, o2, b.plan, bound, route, d)
}

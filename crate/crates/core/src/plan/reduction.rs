//! The reduction loop behind the general and planar upper bounds.
//!
//! With `q = ⌊p/2⌋`: while some vertex has at least `q` remaining edges,
//! split them into `⌊d/q⌋` groups and invert the centre with the
//! still-disagreeing neighbours of each group, then delete the centre's
//! edges. Otherwise, while the remainder has an induced matching of size
//! `q`, set it aside (it is fixed by a single inversion at the very end, in
//! reverse order). When neither applies the remainder is small and is
//! finished directly.

use petgraph::algo::maximum_matching;
use petgraph::graph::UnGraph;
use serde_json::Value;

use super::{details, finish, Builder, PlannerReport};
use crate::decompose::{find_induced_matching, strong_edge_colouring};
use crate::error::{Error, Result};
use crate::graph::{EdgeMask, InversionPlan, LabelledGraph, Orientation};
use crate::oracle::{Oracle, OracleConfig};

#[derive(Clone, Debug)]
pub struct ReductionOptions {
    /// Also try the exact oracle on the stalled remainder and keep the
    /// shorter finish.
    pub residue_oracle: bool,
    pub oracle: OracleConfig,
}

impl Default for ReductionOptions {
    fn default() -> Self {
        ReductionOptions {
            residue_oracle: true,
            oracle: OracleConfig::with_max_edges(18),
        }
    }
}

/// Additive constant `Ψ_p` with `id^{≤p}(G) ≤ ⌈m/⌊p/2⌋⌉ + Ψ_p`, where known:
/// 0 for `p ≤ 5`, 1 for `6 ≤ p ≤ 9`.
pub fn psi(p: usize) -> Option<usize> {
    match p {
        0..=5 => Some(0),
        6..=9 => Some(1),
        _ => None,
    }
}

/// `⌈m/q⌉ + ⌊p²/2⌋` with `q = ⌊p/2⌋`.
pub fn uppergen_bound(m: usize, p: usize) -> usize {
    m.div_ceil(p / 2) + p * p / 2
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Stall {
    StrongColouring,
    VertexCover,
}

struct Outcome<'a> {
    builder: Builder<'a>,
    star_steps: usize,
    matchings: usize,
    stall_steps: usize,
    stall_method: &'static str,
    residue_edges: usize,
}

fn remainder_graph(g: &LabelledGraph, in_r: &[bool]) -> (LabelledGraph, Vec<usize>) {
    g.edge_subgraph(&EdgeMask::from_edges(g.m(), (0..g.m()).filter(|&e| in_r[e])))
}

/// Steps finishing the stalled remainder, planned against the current
/// disagreement without applying them.
fn stall_steps(b: &Builder, in_r: &[bool], method: Stall) -> Vec<Vec<usize>> {
    let g = b.g;
    let (r, map) = remainder_graph(g, in_r);
    match method {
        Stall::StrongColouring => strong_edge_colouring(&r)
            .classes
            .iter()
            .map(|class| {
                class
                    .iter()
                    .filter(|&&e| b.diff[map[e]])
                    .flat_map(|&e| {
                        let (u, v) = r.edge(e);
                        [u, v]
                    })
                    .collect::<Vec<usize>>()
            })
            .filter(|z| !z.is_empty())
            .collect(),
        Stall::VertexCover => {
            let mut ug: UnGraph<(), ()> = UnGraph::with_capacity(g.n(), r.m());
            let nodes: Vec<_> = (0..g.n()).map(|_| ug.add_node(())).collect();
            for &(u, v) in r.edges() {
                ug.add_edge(nodes[u], nodes[v], ());
            }
            let matching = maximum_matching(&ug);
            let mut cover: Vec<usize> = matching
                .edges()
                .flat_map(|(a, c)| [a.index(), c.index()])
                .collect();
            cover.sort_unstable();
            let mut pos = vec![usize::MAX; g.n()];
            for (i, &v) in cover.iter().enumerate() {
                pos[v] = i;
            }
            // vertices outside the cover come after it
            let mut steps = Vec::new();
            let mut diff = b.diff.clone();
            for &v in &cover {
                let mut step = vec![v];
                for &(w, e) in r.incident(v) {
                    if pos[w] > pos[v] && diff[map[e]] {
                        step.push(w);
                    }
                }
                // edges between forward neighbours are flipped as well
                for i in 0..step.len() {
                    for j in i + 1..step.len() {
                        if let Some(e) = g.edge_index(step[i], step[j]) {
                            diff[e] = !diff[e];
                        }
                    }
                }
                if step.len() > 1 {
                    steps.push(step);
                }
            }
            steps
        }
    }
}

/// Exact finish of the remainder by the oracle, if it fits the budget.
fn oracle_steps(b: &Builder, in_r: &[bool], p: usize, cfg: &OracleConfig) -> Option<Vec<Vec<usize>>> {
    let g = b.g;
    let mut verts: Vec<usize> = (0..g.m())
        .filter(|&e| in_r[e])
        .flat_map(|e| {
            let (u, v) = g.edge(e);
            [u, v]
        })
        .collect();
    verts.sort_unstable();
    verts.dedup();
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in verts.iter().enumerate() {
        local[v] = i;
    }
    let edges: Vec<(usize, usize)> = (0..g.m())
        .filter(|&e| in_r[e])
        .map(|e| {
            let (u, v) = g.edge(e);
            (local[u], local[v])
        })
        .collect();
    let h = LabelledGraph::new(verts.len(), &edges).ok()?;
    if h.m() > cfg.max_edges {
        return None;
    }
    let diff: Vec<bool> = h
        .edges()
        .iter()
        .map(|&(a, c)| b.diff[g.edge_index(verts[a], verts[c]).expect("host edge")])
        .collect();
    let oracle = Oracle::new(&h, p, cfg).ok()?;
    let source = Orientation::new(crate::bits::BitVector::from_bools(diff));
    let res = oracle.distance(&source, &Orientation::zeros(h.m())).ok()?;
    let plan: InversionPlan = res.witness_plan?;
    Some(
        plan.relabel(&verts)
            .steps
            .iter()
            .map(|s| s.vertices().to_vec())
            .collect(),
    )
}

fn run<'a>(
    g: &'a LabelledGraph,
    p: usize,
    o1: &Orientation,
    o2: &Orientation,
    opts: &ReductionOptions,
    stall: Stall,
    name: &str,
) -> Result<Outcome<'a>> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("{name} needs p >= 2, got {p}")));
    }
    let q = p / 2;
    let mut b = Builder::new(g, o1, o2, p, name)?;
    let mut in_r = vec![true; g.m()];
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut left = g.m();
    let mut stack: Vec<Vec<usize>> = Vec::new();
    let mut out_stats = (0usize, 0usize, 0usize, "none", 0usize);
    if b.remaining() == 0 {
        left = 0;
    }
    while left > 0 {
        let v = (0..g.n()).max_by_key(|&v| (deg[v], std::cmp::Reverse(v))).expect("vertices");
        if deg[v] >= q {
            let nbrs: Vec<(usize, usize)> = g.incident(v).iter().copied().filter(|&(_, e)| in_r[e]).collect();
            let t = nbrs.len() / q;
            for i in 0..t {
                let group = if i + 1 == t { &nbrs[i * q..] } else { &nbrs[i * q..(i + 1) * q] };
                let mut step = vec![v];
                step.extend(group.iter().filter(|&&(_, e)| b.diff[e]).map(|&(w, _)| w));
                if step.len() > 1 {
                    b.invert(&step);
                    out_stats.0 += 1;
                }
            }
            for &(w, e) in &nbrs {
                in_r[e] = false;
                deg[w] -= 1;
                left -= 1;
            }
            deg[v] = 0;
            continue;
        }
        let (r, map) = remainder_graph(g, &in_r);
        if let Some(mm) = find_induced_matching(&r, q) {
            let host: Vec<usize> = mm.iter().map(|&e| map[e]).collect();
            for &e in &host {
                let (a, c) = g.edge(e);
                in_r[e] = false;
                deg[a] -= 1;
                deg[c] -= 1;
                left -= 1;
            }
            stack.push(host);
            out_stats.1 += 1;
            continue;
        }
        // stalled: Δ < q and no induced matching of size q
        out_stats.4 = left;
        let mut steps = stall_steps(&b, &in_r, stall);
        out_stats.3 = match stall {
            Stall::StrongColouring => "strong-colouring",
            Stall::VertexCover => "vertex-cover",
        };
        if opts.residue_oracle {
            if let Some(exact) = oracle_steps(&b, &in_r, p, &opts.oracle) {
                if exact.len() < steps.len() {
                    steps = exact;
                    out_stats.3 = "oracle";
                }
            }
        }
        out_stats.2 = steps.len();
        for s in &steps {
            b.invert(s);
        }
        break;
    }
    for m in stack.iter().rev() {
        let z: Vec<usize> = m
            .iter()
            .filter(|&&e| b.diff[e])
            .flat_map(|&e| {
                let (u, v) = g.edge(e);
                [u, v]
            })
            .collect();
        b.invert(&z);
    }
    Ok(Outcome {
        builder: b,
        star_steps: out_stats.0,
        matchings: out_stats.1,
        stall_steps: out_stats.2,
        stall_method: out_stats.3,
        residue_edges: out_stats.4,
    })
}

fn outcome_details(o: &Outcome, p: usize, m: usize) -> Vec<(&'static str, Value)> {
    let len = o.builder.plan.len();
    let q = p / 2;
    let psi_check = match psi(p) {
        _ if o.stall_method == "none" => "pass",
        Some(c) if o.stall_method == "oracle" => {
            if len <= m.div_ceil(q) + c {
                "pass"
            } else {
                "fail"
            }
        }
        _ => "skipped",
    };
    vec![
        ("star_steps", Value::from(o.star_steps)),
        ("matchings", Value::from(o.matchings)),
        ("stall_steps", Value::from(o.stall_steps)),
        ("stall_method", Value::from(o.stall_method)),
        ("residue_edges", Value::from(o.residue_edges)),
        ("psi_check", Value::from(psi_check)),
    ]
}

/// General upper bound `⌈m/⌊p/2⌋⌉ + ⌊p²/2⌋`; a stalled remainder is
/// finished by one inversion per strong colour class (or exactly, when the
/// oracle is enabled and shorter).
pub fn plan_uppergen(
    g: &LabelledGraph,
    p: usize,
    o1: &Orientation,
    o2: &Orientation,
    opts: &ReductionOptions,
) -> Result<PlannerReport> {
    let o = run(g, p, o1, o2, opts, Stall::StrongColouring, "uppergen")?;
    let mut d = details([]);
    for (k, v) in outcome_details(&o, p, g.m()) {
        d.insert(k.into(), v);
    }
    let route = format!("uppergen/{}", o.stall_method);
    finish(g, o1, o2, o.builder.plan, uppergen_bound(g.m(), p), route, d)
}

/// Planar upper bound `⌈m/⌊p/2⌋⌉ + 8⌊p/2⌋ - 8`; a stalled remainder is
/// finished through the vertex cover formed by a maximum matching.
pub fn plan_planar_general(
    g: &LabelledGraph,
    p: usize,
    o1: &Orientation,
    o2: &Orientation,
    opts: &ReductionOptions,
) -> Result<PlannerReport> {
    let o = run(g, p, o1, o2, opts, Stall::VertexCover, "planar-general")?;
    let mut d = details([]);
    for (k, v) in outcome_details(&o, p, g.m()) {
        d.insert(k.into(), v);
    }
    let q = p / 2;
    let bound = g.m().div_ceil(q) + 8 * q - 8;
    let route = format!("planar-general/{}", o.stall_method);
    finish(g, o1, o2, o.builder.plan, bound, route, d)
}

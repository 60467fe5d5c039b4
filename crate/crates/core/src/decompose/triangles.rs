//! Triangle transversals (edge sets meeting every triangle) and
//! edge-disjoint triangle packings.

use crate::error::{Error, Result};
use crate::graph::{EdgeMask, LabelledGraph};

/// Largest edge count accepted by the exact branch-and-bound modes.
pub const EXACT_TRIANGLE_CAP: usize = 40;

/// Every triangle as its three edge indices, sorted; triangles are listed in
/// lexicographic order of their vertex triples.
pub fn triangles(g: &LabelledGraph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        for &(w, f) in g.incident(u) {
            if w <= v {
                continue;
            }
            if let Some(h) = g.edge_index(v, w) {
                let mut t = [e, f, h];
                t.sort_unstable();
                out.push(t);
            }
        }
    }
    out
}

fn edge_mask_from(m: usize, keep: &[bool]) -> EdgeMask {
    EdgeMask::from_edges(m, keep.iter().enumerate().filter(|(_, &k)| k).map(|(i, _)| i))
}

/// Inclusion-minimal triangle transversal of size at most `⌊m/2⌋`, or a
/// minimum one when `exact` is set (requires `m <= EXACT_TRIANGLE_CAP`).
///
/// Heuristic: hill-climb a bipartition until every vertex has at least half
/// its edges crossing, take the non-crossing edges, then drop every edge
/// whose return would create no triangle. Minimality is what keeps `g ∖ F`
/// connected when `g` is.
pub fn min_triangle_transversal(g: &LabelledGraph, exact: bool) -> Result<EdgeMask> {
    if exact {
        return exact_transversal(g);
    }
    let n = g.n();
    let mut side = vec![false; n];
    for v in 0..n {
        let same_true = g.neighbours(v).filter(|&w| w < v && side[w]).count();
        let same_false = g.neighbours(v).filter(|&w| w < v && !side[w]).count();
        side[v] = same_true < same_false;
    }
    loop {
        let mut moved = false;
        for v in 0..n {
            let same = g.neighbours(v).filter(|&w| side[w] == side[v]).count();
            if 2 * same > g.degree(v) {
                side[v] = !side[v];
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    let mut in_f: Vec<bool> = g.edges().iter().map(|&(u, v)| side[u] == side[v]).collect();
    prune(g, &mut in_f);
    Ok(edge_mask_from(g.m(), &in_f))
}

/// Removes from `in_f` every edge whose return creates no triangle.
fn prune(g: &LabelledGraph, in_f: &mut [bool]) {
    for e in 0..g.m() {
        if !in_f[e] {
            continue;
        }
        let (u, v) = g.edge(e);
        let closes = g.incident(u).iter().any(|&(w, f)| {
            w != v && !in_f[f] && g.edge_index(v, w).is_some_and(|h| !in_f[h])
        });
        if !closes {
            in_f[e] = false;
        }
    }
}

fn exact_transversal(g: &LabelledGraph) -> Result<EdgeMask> {
    if g.m() > EXACT_TRIANGLE_CAP {
        return Err(Error::BudgetExceeded(format!(
            "exact triangle transversal needs m <= {EXACT_TRIANGLE_CAP}, graph has {}",
            g.m()
        )));
    }
    let tris: Vec<u64> = triangles(g)
        .iter()
        .map(|t| t.iter().fold(0u64, |a, &e| a | 1 << e))
        .collect();
    let start = min_triangle_transversal(g, false)?;
    let mut best = start.iter().fold(0u64, |a, e| a | 1 << e);

    // Branch on the edges of the first unhit triangle; in branch i the
    // earlier edges are forbidden so each transversal is generated once.
    fn rec(tris: &[u64], chosen: u64, forbidden: u64, best: &mut u64) {
        let Some(&t) = tris.iter().find(|&&t| t & chosen == 0) else {
            if chosen.count_ones() < best.count_ones() {
                *best = chosen;
            }
            return;
        };
        // disjoint unhit triangles each need their own edge
        let mut used = chosen;
        let mut lower = 0;
        for &s in tris {
            if s & chosen == 0 && s & used == 0 {
                used |= s;
                lower += 1;
            }
        }
        if chosen.count_ones() + lower >= best.count_ones() {
            return;
        }
        let mut forb = forbidden;
        let mut rest = t & !forbidden;
        while rest != 0 {
            let e = rest & rest.wrapping_neg();
            rest &= rest - 1;
            rec(tris, chosen | e, forb, best);
            forb |= e;
        }
    }
    rec(&tris, 0, 0, &mut best);
    Ok(EdgeMask::from_edges(g.m(), (0..g.m()).filter(|&e| best >> e & 1 == 1)))
}

/// Edge-disjoint triangles: a greedy maximal packing in triangle order, or a
/// maximum one when `exact` is set (requires `m <= EXACT_TRIANGLE_CAP`).
pub fn triangle_packing(g: &LabelledGraph, exact: bool) -> Result<Vec<[usize; 3]>> {
    let tris = triangles(g);
    let mut used = vec![false; g.m()];
    let mut greedy = Vec::new();
    for t in &tris {
        if t.iter().all(|&e| !used[e]) {
            for &e in t {
                used[e] = true;
            }
            greedy.push(*t);
        }
    }
    if !exact {
        return Ok(greedy);
    }
    if g.m() > EXACT_TRIANGLE_CAP {
        return Err(Error::BudgetExceeded(format!(
            "exact triangle packing needs m <= {EXACT_TRIANGLE_CAP}, graph has {}",
            g.m()
        )));
    }
    let masks: Vec<u64> = tris.iter().map(|t| t.iter().fold(0u64, |a, &e| a | 1 << e)).collect();
    let live0 = masks.iter().fold(0u64, |a, &t| a | t);
    let mut best: Vec<usize> = tris
        .iter()
        .enumerate()
        .filter(|(_, t)| greedy.contains(t))
        .map(|(i, _)| i)
        .collect();

    // Branch on the lowest live edge: cover it by one of its triangles, or
    // declare it unused.
    fn rec(masks: &[u64], live: u64, current: &mut Vec<usize>, best: &mut Vec<usize>) {
        if current.len() + (live.count_ones() as usize) / 3 <= best.len() {
            return;
        }
        // an edge is live only while some triangle of live edges uses it
        let mut reach = 0u64;
        for &t in masks {
            if t & live == t {
                reach |= t;
            }
        }
        let live = live & reach;
        if live == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        if current.len() + (live.count_ones() as usize) / 3 <= best.len() {
            return;
        }
        let e = live & live.wrapping_neg();
        for (i, &t) in masks.iter().enumerate() {
            if t & e != 0 && t & live == t {
                current.push(i);
                rec(masks, live & !t, current, best);
                current.pop();
            }
        }
        rec(masks, live & !e, current, best);
    }
    let mut cur = Vec::new();
    rec(&masks, live0, &mut cur, &mut best);
    best.sort_unstable();
    Ok(best.into_iter().map(|i| tris[i]).collect())
}

/// Whether `g` minus the edges in `f` has no triangle.
pub fn is_triangle_free_without(g: &LabelledGraph, f: &EdgeMask) -> bool {
    triangles(g).iter().all(|t| t.iter().any(|&e| f.contains(e)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> LabelledGraph {
        let e: Vec<_> = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))).collect();
        LabelledGraph::new(n, &e).unwrap()
    }

    fn check_transversal(g: &LabelledGraph, f: &EdgeMask) {
        assert!(is_triangle_free_without(g, f));
        assert!(f.count() <= g.m() / 2);
        for e in f.iter() {
            let mut fewer = f.clone();
            fewer.remove(e);
            assert!(!is_triangle_free_without(g, &fewer), "edge {e} is removable");
        }
        if g.is_connected() {
            let (h, _) = g.edge_subgraph(&f.complement());
            assert!(h.is_connected());
        }
    }

    #[test]
    fn transversal_examples() {
        let path = LabelledGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(min_triangle_transversal(&path, false).unwrap().count(), 0);
        for exact in [false, true] {
            let f = min_triangle_transversal(&complete(3), exact).unwrap();
            assert_eq!(f.count(), 1);
            let f = min_triangle_transversal(&complete(4), exact).unwrap();
            assert_eq!(f.count(), 2);
            check_transversal(&complete(4), &f);
        }
        for n in 3..9 {
            check_transversal(&complete(n), &min_triangle_transversal(&complete(n), false).unwrap());
        }
        // τ₃(K_n) = m − ⌊n²/4⌋
        let f = min_triangle_transversal(&complete(6), true).unwrap();
        assert_eq!(f.count(), 15 - 9);
    }

    #[test]
    fn packing_examples() {
        let path = LabelledGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(triangle_packing(&path, false).unwrap().is_empty());
        assert_eq!(triangle_packing(&complete(4), false).unwrap().len(), 1);
        assert_eq!(triangle_packing(&complete(4), true).unwrap().len(), 1);
        let two = LabelledGraph::new(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert_eq!(triangle_packing(&two, false).unwrap().len(), 2);
        // K7 has a Steiner triple system: 7 disjoint triangles
        assert_eq!(triangle_packing(&complete(7), true).unwrap().len(), 7);
    }

    #[test]
    fn exact_cap_is_enforced() {
        assert!(min_triangle_transversal(&complete(10), true).is_err());
    }
}

//! Bidirectional search for a single distance when `2^m` states do not fit.
//!
//! Balls around zero are grown layer by layer in a hash map. Because the
//! graph is a Cayley graph, the ball around the target is the zero ball
//! shifted by the target, so a midpoint `x` with both `x` and `target ^ x`
//! in the ball closes a path.

use std::collections::HashMap;

use crate::error::{Error, Result};

pub(crate) struct MeetResult {
    pub distance: usize,
    pub path: Vec<u64>,
    pub states: u64,
}

pub(crate) fn meet_in_the_middle(gens: &[u64], target: u64, state_budget: usize) -> Result<MeetResult> {
    let mut dist: HashMap<u64, u8> = HashMap::new();
    dist.insert(0, 0);
    if target == 0 {
        return Ok(MeetResult {
            distance: 0,
            path: Vec::new(),
            states: 1,
        });
    }
    let mut layer: Vec<u64> = vec![0];
    let mut k: usize = 0;
    let mut best: Option<(usize, u64)> = None;
    loop {
        // Midpoints in layer k paired with the other half already in the ball.
        for &x in &layer {
            if let Some(&j) = dist.get(&(target ^ x)) {
                let cand = k + j as usize;
                if best.is_none_or(|(b, _)| cand < b) {
                    best = Some((cand, x));
                }
            }
        }
        if let Some((b, x)) = best {
            // Any path not yet seen has its midpoint beyond layer k.
            if b <= 2 * k + 1 {
                let mut path = walk_back(&dist, gens, x);
                path.reverse();
                let mut rest = walk_back(&dist, gens, target ^ x);
                rest.reverse();
                // 0 -> x, then x -> x ^ (target ^ x) = target
                path.extend(rest);
                debug_assert_eq!(path.iter().fold(0, |a, g| a ^ g), target);
                return Ok(MeetResult {
                    distance: b,
                    path,
                    states: dist.len() as u64,
                });
            }
        }
        let mut next = Vec::new();
        for &x in &layer {
            for &g in gens {
                let y = x ^ g;
                if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(y) {
                    e.insert((k + 1) as u8);
                    next.push(y);
                }
            }
            if dist.len() > state_budget {
                return Err(Error::BudgetExceeded(format!(
                    "meet-in-the-middle search exceeded {state_budget} stored states"
                )));
            }
        }
        if next.is_empty() {
            return Err(Error::NoWitness("target unreachable from zero".into()));
        }
        next.sort_unstable();
        layer = next;
        k += 1;
    }
}

/// Path from `x` back to zero inside the stored ball.
fn walk_back(dist: &HashMap<u64, u8>, gens: &[u64], x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut cur = x;
    let mut d = dist[&cur];
    while d > 0 {
        let g = *gens
            .iter()
            .find(|&&g| dist.get(&(cur ^ g)) == Some(&(d - 1)))
            .expect("stored ball is closed under predecessors");
        out.push(g);
        cur ^= g;
        d -= 1;
    }
    out
}

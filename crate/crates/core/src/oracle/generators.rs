use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeMask, InversionSet, LabelledGraph};

/// Distinct nonzero edge masks of all (≤p)-inversions of a graph, sorted
/// ascending as integers (bit `i` = edge `i`), each with a smallest witness.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    m: usize,
    p: usize,
    masks: Vec<u64>,
    witnesses: Vec<InversionSet>,
}

impl GeneratorSet {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn raw_masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn mask(&self, i: usize) -> EdgeMask {
        EdgeMask::new(crate::bits::BitVector::from_u64(self.m, self.masks[i]))
    }

    pub fn witness(&self, i: usize) -> &InversionSet {
        &self.witnesses[i]
    }

    pub fn witness_of(&self, mask: u64) -> Option<&InversionSet> {
        self.masks
            .binary_search(&mask)
            .ok()
            .map(|i| &self.witnesses[i])
    }
}

/// Default cap on the number of vertex subsets visited while enumerating.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 200_000_000;

/// Enumerates every (≤p)-subset of the non-isolated vertices and records the
/// distinct nonzero masks. Among sets producing the same mask the witness is
/// the smallest one, ties broken lexicographically.
pub fn generator_masks(g: &LabelledGraph, p: usize) -> Result<GeneratorSet> {
    generator_masks_with_budget(g, p, DEFAULT_ENUMERATION_BUDGET)
}

pub fn generator_masks_with_budget(
    g: &LabelledGraph,
    p: usize,
    budget: u64,
) -> Result<GeneratorSet> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("p must be at least 2, got {p}")));
    }
    if g.m() > 64 {
        return Err(Error::BudgetExceeded(format!(
            "mask generators need m <= 64, graph has {} edges",
            g.m()
        )));
    }
    let active: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    // local index -> [(earlier local index, edge bit)]
    let mut back: Vec<Vec<(usize, u64)>> = vec![Vec::new(); active.len()];
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in active.iter().enumerate() {
        local[v] = i;
    }
    for (i, &v) in active.iter().enumerate() {
        for &(w, e) in g.incident(v) {
            if local[w] < i {
                back[i].push((local[w], 1u64 << e));
            }
        }
    }

    let mut best: HashMap<u64, Vec<usize>> = HashMap::new();
    let mut visited: u64 = 0;
    let mut chosen: Vec<usize> = Vec::with_capacity(p);
    let mut in_set = vec![false; active.len()];

    struct Ctx<'a> {
        back: &'a [Vec<(usize, u64)>],
        active: &'a [usize],
        p: usize,
        budget: u64,
    }

    fn rec(
        ctx: &Ctx<'_>,
        start: usize,
        mask: u64,
        chosen: &mut Vec<usize>,
        in_set: &mut [bool],
        best: &mut HashMap<u64, Vec<usize>>,
        visited: &mut u64,
    ) -> Result<()> {
        for i in start..ctx.active.len() {
            *visited += 1;
            if *visited > ctx.budget {
                return Err(Error::BudgetExceeded(format!(
                    "generator enumeration visited more than {} subsets",
                    ctx.budget
                )));
            }
            let mut next = mask;
            for &(j, bit) in &ctx.back[i] {
                if in_set[j] {
                    next |= bit;
                }
            }
            chosen.push(i);
            in_set[i] = true;
            if next != 0 {
                let labels: Vec<usize> = chosen.iter().map(|&k| ctx.active[k]).collect();
                match best.get_mut(&next) {
                    Some(w) => {
                        if (labels.len(), &labels) < (w.len(), w) {
                            *w = labels;
                        }
                    }
                    None => {
                        best.insert(next, labels);
                    }
                }
            }
            if chosen.len() < ctx.p {
                rec(ctx, i + 1, next, chosen, in_set, best, visited)?;
            }
            chosen.pop();
            in_set[i] = false;
        }
        Ok(())
    }

    let ctx = Ctx {
        back: &back,
        active: &active,
        p,
        budget,
    };
    rec(&ctx, 0, 0, &mut chosen, &mut in_set, &mut best, &mut visited)?;

    let mut pairs: Vec<(u64, Vec<usize>)> = best.into_iter().collect();
    pairs.sort_unstable_by_key(|(m, _)| *m);
    let (masks, witnesses) = pairs
        .into_iter()
        .map(|(m, w)| (m, InversionSet::from_vertices(w)))
        .unzip();
    Ok(GeneratorSet {
        m: g.m(),
        p,
        masks,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mask_strings(gs: &GeneratorSet) -> Vec<String> {
        let mut v: Vec<String> = (0..gs.len()).map(|i| gs.mask(i).bits().to_string()).collect();
        v.sort();
        v
    }

    #[test]
    fn k2_single_generator() {
        let g = LabelledGraph::new(2, &[(0, 1)]).unwrap();
        let gs = generator_masks(&g, 2).unwrap();
        assert_eq!(mask_strings(&gs), vec!["1"]);
        assert_eq!(gs.witness(0).vertices(), &[0, 1]);
    }

    #[test]
    fn k3_generators() {
        let g = LabelledGraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let gs = generator_masks(&g, 3).unwrap();
        assert_eq!(mask_strings(&gs), vec!["001", "010", "100", "111"]);
        // p = 2 drops the whole-triangle mask
        assert_eq!(generator_masks(&g, 2).unwrap().len(), 3);
    }

    #[test]
    fn path_generators_and_minimal_witness() {
        let g = LabelledGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let gs = generator_masks(&g, 3).unwrap();
        assert_eq!(mask_strings(&gs), vec!["01", "10", "11"]);
        assert_eq!(gs.witness_of(0b11).unwrap().vertices(), &[0, 1, 2]);

        // isolated vertex 3 never appears in witnesses
        let g = LabelledGraph::new(4, &[(0, 1), (1, 2)]).unwrap();
        let gs = generator_masks(&g, 4).unwrap();
        assert_eq!(gs.len(), 3);
        assert!((0..gs.len()).all(|i| !gs.witness(i).vertices().contains(&3)));
    }

    #[test]
    fn witnesses_reproduce_masks() {
        let g = LabelledGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap();
        let gs = generator_masks(&g, 4).unwrap();
        for i in 0..gs.len() {
            assert!(gs.witness(i).len() <= 4);
            assert_eq!(g.inversion_mask(gs.witness(i)).unwrap(), gs.mask(i));
        }
    }

    #[test]
    fn rejects_p_below_two() {
        let g = LabelledGraph::new(2, &[(0, 1)]).unwrap();
        assert!(generator_masks(&g, 1).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let edges: Vec<(usize, usize)> = (0..6)
            .flat_map(|a| ((a + 1)..6).map(move |b| (a, b)))
            .collect();
        let g = LabelledGraph::new(6, &edges).unwrap();
        assert!(matches!(
            generator_masks_with_budget(&g, 6, 10),
            Err(Error::BudgetExceeded(_))
        ));
    }
}

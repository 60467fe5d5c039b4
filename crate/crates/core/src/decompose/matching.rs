use std::collections::HashSet;

use crate::bits::BitVector;
use crate::graph::LabelledGraph;

use super::strong::edge_closed_neighbourhood;

/// Induced matching of exactly `q` edges, or `None` if there is none.
///
/// Exact search: for the first available edge `e`, some induced matching of
/// size `q` (if any exists) uses an edge of the closed neighbourhood of `e`,
/// because otherwise `e` could be swapped in. So branching over that
/// neighbourhood is complete; failed states are memoised.
pub fn find_induced_matching(g: &LabelledGraph, q: usize) -> Option<Vec<usize>> {
    find_induced_matching_in(g, q, &BitVector::ones(g.m()))
}

/// As [`find_induced_matching`] but restricted to the edges in `allowed`;
/// edges outside `allowed` still count as joins.
pub fn find_induced_matching_in(g: &LabelledGraph, q: usize, allowed: &BitVector) -> Option<Vec<usize>> {
    if q == 0 {
        return Some(Vec::new());
    }
    let nbhd: Vec<Vec<usize>> = (0..g.m()).map(|e| edge_closed_neighbourhood(g, e)).collect();
    let mut failed: HashSet<(BitVector, usize)> = HashSet::new();

    fn rec(
        nbhd: &[Vec<usize>],
        avail: &BitVector,
        q: usize,
        failed: &mut HashSet<(BitVector, usize)>,
    ) -> Option<Vec<usize>> {
        if q == 0 {
            return Some(Vec::new());
        }
        if avail.count_ones() < q || failed.contains(&(avail.clone(), q)) {
            return None;
        }
        let e = avail.iter_ones().next()?;
        for &f in &nbhd[e] {
            if !avail.get(f) {
                continue;
            }
            let mut rest = avail.clone();
            for &h in &nbhd[f] {
                rest.set(h, false);
            }
            if let Some(mut found) = rec(nbhd, &rest, q - 1, failed) {
                found.push(f);
                return Some(found);
            }
        }
        failed.insert((avail.clone(), q));
        None
    }

    rec(&nbhd, allowed, q, &mut failed).map(|mut v| {
        v.sort_unstable();
        v
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::strong::is_induced_matching;

    #[test]
    fn spec_examples() {
        let two = LabelledGraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(find_induced_matching(&two, 2), Some(vec![0, 1]));
        let k4: Vec<_> = (0..4).flat_map(|a| ((a + 1)..4).map(move |b| (a, b))).collect();
        let k4 = LabelledGraph::new(4, &k4).unwrap();
        assert_eq!(find_induced_matching(&k4, 2), None);
        let p5 = LabelledGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let m = find_induced_matching(&p5, 2).unwrap();
        assert_eq!(m, vec![0, 3]);
        assert!(is_induced_matching(&p5, &m));
        assert_eq!(find_induced_matching(&p5, 3), None);
    }

    #[test]
    fn cycles() {
        for n in 3..13 {
            let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            let c = LabelledGraph::new(n, &e).unwrap();
            // the induced matching number of C_n is ⌊n/3⌋
            let best = (1..=n).take_while(|&q| find_induced_matching(&c, q).is_some()).last().unwrap_or(0);
            assert_eq!(best, n / 3, "C_{n}");
        }
    }
}

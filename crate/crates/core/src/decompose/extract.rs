//! Extraction of a dense vertex set from a rooted tree: at most `p`
//! vertices spanning at least `p - √((2+√2)p)` edges, such that every
//! nontrivial piece left after deleting those edges contains the root.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::LabelledGraph;

/// `√(2 + √2)`: the constant in the `p - c√p` edge guarantee.
pub fn extraction_constant() -> f64 {
    (2.0 + std::f64::consts::SQRT_2).sqrt()
}

/// Edge guarantee `p - c√p` of the extraction.
pub fn extraction_threshold(p: usize) -> f64 {
    p as f64 - extraction_constant() * (p as f64).sqrt()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtractedSet {
    pub x: Vec<usize>,
    pub root: usize,
    pub edge_count: usize,
}

struct Rooted<'a> {
    adj: &'a [Vec<usize>],
    alive: Vec<bool>,
}

impl Rooted<'_> {
    fn subtree(&self, u: usize, parent: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![(u, parent)];
        while let Some((v, from)) = stack.pop() {
            out.push(v);
            for &w in &self.adj[v] {
                if w != from && self.alive[w] {
                    stack.push((w, v));
                }
            }
        }
        out
    }

    /// The recursion of the extraction lemma on the alive subtree rooted
    /// at `r`, which has at least `p` vertices.
    fn extract(mut self, mut r: usize, p: usize) -> Vec<usize> {
        let small = extraction_constant() * (p as f64).sqrt();
        loop {
            let mut children: Vec<(usize, Vec<usize>)> = self.adj[r]
                .iter()
                .filter(|&&c| self.alive[c])
                .map(|&c| (c, self.subtree(c, r)))
                .collect();
            let total = 1 + children.iter().map(|(_, s)| s.len()).sum::<usize>();
            if total == p {
                let mut all: Vec<usize> = children.into_iter().flat_map(|(_, s)| s).collect();
                all.push(r);
                return all;
            }
            children.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.0.cmp(&b.0)));
            if children.len() == 1 {
                // the root is a leaf: the child's subtree already has ≥ p
                // vertices and whatever it leaves behind still meets r
                self.alive[r] = false;
                r = children[0].0;
                continue;
            }
            let (rk, tk) = children.pop().expect("at least two children");
            if total - tk.len() >= p {
                for v in tk {
                    self.alive[v] = false;
                }
                continue;
            }
            let alpha = total - 1 - tk.len();
            if tk.len() as f64 <= small {
                let mut x: Vec<usize> = children.into_iter().flat_map(|(_, s)| s).collect();
                x.push(r);
                return x;
            }
            let mut x = if p - alpha <= 3 {
                vec![rk]
            } else {
                let mut alive = vec![false; self.alive.len()];
                for &v in &tk {
                    alive[v] = true;
                }
                Rooted { adj: self.adj, alive }.extract(rk, p - alpha)
            };
            x.extend(children.into_iter().flat_map(|(_, s)| s));
            return x;
        }
    }
}

/// Extracts the set for tree `t` rooted at `r` with cap `p ≥ 4`.
pub fn tree_extract_set(t: &LabelledGraph, r: usize, p: usize) -> Result<ExtractedSet> {
    extract_within(t, &vec![true; t.n()], r, p)
}

/// As [`tree_extract_set`] on the subtree induced by `alive`.
pub(crate) fn extract_within(t: &LabelledGraph, alive: &[bool], r: usize, p: usize) -> Result<ExtractedSet> {
    if !t.is_forest() {
        return Err(Error::NotATree);
    }
    if p < 4 {
        return Err(Error::InvalidParameter(format!("extraction needs p >= 4, got {p}")));
    }
    if r >= t.n() || !alive[r] {
        return Err(Error::VertexOutOfRange { vertex: r, n: t.n() });
    }
    let adj: Vec<Vec<usize>> = (0..t.n())
        .map(|v| {
            let mut a: Vec<usize> = t.neighbours(v).collect();
            a.sort_unstable();
            a
        })
        .collect();
    let rooted = Rooted {
        adj: &adj,
        alive: alive.to_vec(),
    };
    let size = rooted.subtree(r, usize::MAX).len();
    if size < p {
        return Err(Error::InvalidParameter(format!("tree has {size} vertices, fewer than p = {p}")));
    }
    let mut x = rooted.extract(r, p);
    x.sort_unstable();
    let edge_count = induced_edge_count(t, &x);
    let set = ExtractedSet { x, root: r, edge_count };
    check_extracted_within(t, alive, p, &set)?;
    Ok(set)
}

fn induced_edge_count(t: &LabelledGraph, x: &[usize]) -> usize {
    let mut c = 0;
    for (i, &a) in x.iter().enumerate() {
        for &b in &x[i + 1..] {
            if t.has_edge(a, b) {
                c += 1;
            }
        }
    }
    c
}

/// Checks properties (i)–(iii) of an extracted set against the whole tree.
pub fn check_extracted(t: &LabelledGraph, p: usize, set: &ExtractedSet) -> Result<()> {
    check_extracted_within(t, &vec![true; t.n()], p, set)
}

fn check_extracted_within(t: &LabelledGraph, alive: &[bool], p: usize, set: &ExtractedSet) -> Result<()> {
    let fail = |msg: String| Err(Error::NoWitness(msg));
    if set.x.len() > p {
        return fail(format!("extracted set has {} > {p} vertices", set.x.len()));
    }
    if set.x.iter().any(|&v| !alive[v]) {
        return fail("extracted set leaves the tree".into());
    }
    if set.edge_count != induced_edge_count(t, &set.x) {
        return fail("edge count does not match the set".into());
    }
    if (set.edge_count as f64) < extraction_threshold(p) - 1e-9 {
        return fail(format!(
            "extracted set spans {} edges, below {:.3}",
            set.edge_count,
            extraction_threshold(p)
        ));
    }
    // components of the tree minus the set's edges: walk from the root
    let in_x = |v: usize| set.x.binary_search(&v).is_ok();
    let mut seen = vec![false; t.n()];
    seen[set.root] = true;
    let mut stack = vec![set.root];
    while let Some(v) = stack.pop() {
        for w in t.neighbours(v) {
            if alive[w] && !seen[w] && !(in_x(v) && in_x(w)) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    for (a, b) in t.edges().iter().copied() {
        if alive[a] && alive[b] && !(in_x(a) && in_x(b)) && !seen[a] {
            return fail(format!("edge ({a}, {b}) remains away from the root"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::generate::random_tree;

    #[test]
    fn spec_examples() {
        let p6 = LabelledGraph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let s = tree_extract_set(&p6, 0, 6).unwrap();
        assert_eq!(s.x, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(s.edge_count, 5);

        let star = LabelledGraph::new(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let s = tree_extract_set(&star, 0, 4).unwrap();
        assert_eq!(s.x.len(), 4);
        assert!(s.x.contains(&0));
        assert_eq!(s.edge_count, 3);

        let p10: Vec<_> = (0..9).map(|i| (i, i + 1)).collect();
        let p10 = LabelledGraph::new(10, &p10).unwrap();
        let s = tree_extract_set(&p10, 0, 6).unwrap();
        assert!(s.edge_count >= 2);
    }

    #[test]
    fn random_trees() {
        for seed in 0..300 {
            let n = 4 + (seed as usize * 11) % 120;
            let t = random_tree(n, seed);
            for p in [4, 6, 9, 13] {
                if p <= n {
                    let r = (seed as usize) % n;
                    tree_extract_set(&t, r, p).unwrap();
                }
            }
        }
    }

    #[test]
    fn errors() {
        let p3 = LabelledGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(tree_extract_set(&p3, 0, 4).is_err());
    }
}

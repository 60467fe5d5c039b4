//! Graph families: the extremal constructions behind the lower bounds plus
//! seeded random trees, connected graphs and planar triangulations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::LabelledGraph;

fn build(n: usize, edges: &[(usize, usize)]) -> LabelledGraph {
    LabelledGraph::new(n, edges).expect("generator produces a simple graph")
}

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

/// `k` disjoint edges `(2i, 2i+1)` plus `isolated` extra vertices.
pub fn matching(k: usize, isolated: usize) -> LabelledGraph {
    let e: Vec<_> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
    build(2 * k + isolated, &e)
}

pub fn complete(n: usize) -> LabelledGraph {
    let e: Vec<_> = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))).collect();
    build(n, &e)
}

pub fn path(n: usize) -> LabelledGraph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &e)
}

pub fn cycle(n: usize) -> Result<LabelledGraph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &e))
}

/// Star with centre 0 and `k` leaves.
pub fn star(k: usize) -> LabelledGraph {
    let e: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    build(k + 1, &e)
}

/// Spider with centre `x = 0`: `s = ⌊(n-1)/2⌋` legs of length two and
/// `ε = n - 1 - 2s` of length one. Legs `y_i = i`, feet `z_i = s + ε + i`.
pub fn spider4(n: usize) -> Result<LabelledGraph> {
    if n < 2 {
        return Err(invalid(format!("spider4 needs n >= 2, got {n}")));
    }
    let s = (n - 1) / 2;
    let eps = n - 1 - 2 * s;
    let mut e: Vec<_> = (1..=s + eps).map(|i| (0, i)).collect();
    e.extend((1..=s).map(|i| (i, s + eps + i)));
    Ok(build(n, &e))
}

/// Root `r = 0` and `q` branches of seven vertices: `x_j` joined to `r`,
/// two children `y_j^1, y_j^2` of `x_j`, each with two leaves. Branch `j`
/// (0-based) occupies labels `1 + 7j .. 8 + 7j` in the order
/// `x, y1, y2, z1, z2, z3, z4`.
pub fn spider5(q: usize) -> Result<LabelledGraph> {
    if q == 0 {
        return Err(invalid("spider5 needs q >= 1".into()));
    }
    let mut e = Vec::new();
    for j in 0..q {
        let b = 1 + 7 * j;
        let (x, y1, y2) = (b, b + 1, b + 2);
        e.extend([(0, x), (x, y1), (x, y2), (y1, b + 3), (y1, b + 4), (y2, b + 5), (y2, b + 6)]);
    }
    Ok(build(1 + 7 * q, &e))
}

/// `K2` on `{0, 1}` plus vertices `2..n` joined to both.
pub fn g2(n: usize) -> Result<LabelledGraph> {
    if n < 2 {
        return Err(invalid(format!("G2 needs n >= 2, got {n}")));
    }
    let mut e = vec![(0, 1)];
    for v in 2..n {
        e.push((0, v));
        e.push((1, v));
    }
    Ok(build(n, &e))
}

/// Cycle on `0..n-2` plus the two non-adjacent hubs `n-2` and `n-1`.
pub fn double_wheel(n: usize) -> Result<LabelledGraph> {
    if n < 5 {
        return Err(invalid(format!("double wheel needs n >= 5, got {n}")));
    }
    let c = n - 2;
    let mut e: Vec<_> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    for i in 0..c {
        e.push((i, c));
        e.push((i, c + 1));
    }
    Ok(build(n, &e))
}

/// Planar triangulation on `4q` vertices with every degree odd: start from
/// `K4` and repeatedly place a `K4` inside a face `u1u2u3`, joining the outer
/// triangle `v1v2v3` of the new `K4` by `u_i v_j` for `i ≠ j`.
pub fn odd_triangulation(q: usize) -> Result<LabelledGraph> {
    if q == 0 {
        return Err(invalid("odd triangulation needs q >= 1".into()));
    }
    let mut e = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut faces = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    for step in 1..q {
        let [u1, u2, u3] = faces.pop().expect("a face");
        let b = 4 * step;
        let (v1, v2, v3, v4) = (b, b + 1, b + 2, b + 3);
        e.extend([(v1, v2), (v1, v3), (v2, v3), (v1, v4), (v2, v4), (v3, v4)]);
        e.extend([(u1, v2), (u1, v3), (u2, v1), (u2, v3), (u3, v1), (u3, v2)]);
        faces.extend([
            [v1, v2, v4],
            [v2, v3, v4],
            [v1, v3, v4],
            [u1, u2, v3],
            [u2, u3, v1],
            [u1, u3, v2],
            [u1, v2, v3],
            [u2, v1, v3],
            [u3, v1, v2],
        ]);
    }
    Ok(build(4 * q, &e))
}

fn relabel(n: usize, edges: &mut [(usize, usize)], rng: &mut ChaCha8Rng) {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    for e in edges.iter_mut() {
        *e = (perm[e.0], perm[e.1]);
    }
}

/// Uniformly random recursive tree with shuffled labels.
pub fn random_tree(n: usize, seed: u64) -> LabelledGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    relabel(n, &mut e, &mut rng);
    build(n, &e)
}

/// Random connected graph: a random tree plus distinct extra edges, `m`
/// edges in total (capped at `n(n-1)/2`).
pub fn random_connected(n: usize, m: usize, seed: u64) -> Result<LabelledGraph> {
    if n == 0 || m + 1 < n {
        return Err(invalid(format!("a connected graph on {n} vertices needs at least {} edges", n.max(1) - 1)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = random_tree(n, rng.gen());
    let mut e: Vec<_> = tree.edges().to_vec();
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !tree.has_edge(a, b))
        .collect();
    missing.shuffle(&mut rng);
    let extra = m.saturating_sub(n - 1).min(missing.len());
    e.extend_from_slice(&missing[..extra]);
    Ok(build(n, &e))
}

/// Random planar triangulation: `K4`, then repeatedly split a random face
/// by a new vertex of degree three.
pub fn random_triangulation(n: usize, seed: u64) -> Result<LabelledGraph> {
    if n < 4 {
        return Err(invalid(format!("triangulation needs n >= 4, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut faces = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    for v in 4..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        e.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [a, c, v], [b, c, v]]);
    }
    relabel(n, &mut e, &mut rng);
    Ok(build(n, &e))
}

/// A named family with its size parameter, as accepted by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    Matching { k: usize },
    Complete { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Star { k: usize },
    Spider4 { n: usize },
    Spider5 { q: usize },
    G2 { n: usize },
    DoubleWheel { n: usize },
    OddTriangulation { q: usize },
    RandomTree { n: usize, seed: u64 },
    RandomConnected { n: usize, m: usize, seed: u64 },
    RandomTriangulation { n: usize, seed: u64 },
}

impl Family {
    /// Names accepted by [`Family::parse`].
    pub const NAMES: [&'static str; 13] = [
        "matching",
        "complete",
        "path",
        "cycle",
        "star",
        "spider4",
        "spider5",
        "g2",
        "double-wheel",
        "odd-triangulation",
        "random-tree",
        "random-connected",
        "random-triangulation",
    ];

    /// Builds a family from its name, a size (`n`, `k` or `q` as the family
    /// uses), an optional edge count and a seed.
    pub fn parse(name: &str, size: usize, m: Option<usize>, seed: u64) -> Result<Family> {
        Ok(match name {
            "matching" => Family::Matching { k: size },
            "complete" => Family::Complete { n: size },
            "path" => Family::Path { n: size },
            "cycle" => Family::Cycle { n: size },
            "star" => Family::Star { k: size },
            "spider4" => Family::Spider4 { n: size },
            "spider5" => Family::Spider5 { q: size },
            "g2" => Family::G2 { n: size },
            "double-wheel" => Family::DoubleWheel { n: size },
            "odd-triangulation" => Family::OddTriangulation { q: size },
            "random-tree" => Family::RandomTree { n: size, seed },
            "random-connected" => Family::RandomConnected {
                n: size,
                m: m.ok_or_else(|| invalid("random-connected needs an edge count".into()))?,
                seed,
            },
            "random-triangulation" => Family::RandomTriangulation { n: size, seed },
            other => return Err(invalid(format!("unknown family {other:?}"))),
        })
    }

    /// Whether every member is planar.
    pub fn is_planar(&self) -> bool {
        match self {
            Family::Complete { n } => *n <= 4,
            Family::RandomConnected { .. } => false,
            _ => true,
        }
    }
}

/// Generates a member of `family`.
pub fn generate(family: &Family) -> Result<LabelledGraph> {
    match *family {
        Family::Matching { k } => Ok(matching(k, 0)),
        Family::Complete { n } => Ok(complete(n)),
        Family::Path { n } => Ok(path(n)),
        Family::Cycle { n } => cycle(n),
        Family::Star { k } => Ok(star(k)),
        Family::Spider4 { n } => spider4(n),
        Family::Spider5 { q } => spider5(q),
        Family::G2 { n } => g2(n),
        Family::DoubleWheel { n } => double_wheel(n),
        Family::OddTriangulation { q } => odd_triangulation(q),
        Family::RandomTree { n, seed } => Ok(random_tree(n, seed)),
        Family::RandomConnected { n, m, seed } => random_connected(n, m, seed),
        Family::RandomTriangulation { n, seed } => random_triangulation(n, seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        assert_eq!(odd_triangulation(1).unwrap(), complete(4));
        let dw = double_wheel(7).unwrap();
        assert_eq!(dw.m(), 15);
        assert!(!dw.has_edge(5, 6));
        let sp = spider4(10).unwrap();
        assert_eq!(sp.degree(0), 5);
        assert_eq!(sp.m(), 9);
        assert_eq!((1..10).filter(|&v| sp.degree(v) == 1).count(), 5);
    }

    #[test]
    fn odd_triangulations() {
        for q in 1..=6 {
            let g = odd_triangulation(q).unwrap();
            assert_eq!(g.n(), 4 * q);
            assert_eq!(g.m(), 3 * g.n() - 6);
            assert!((0..g.n()).all(|v| g.degree(v) % 2 == 1));
        }
    }

    #[test]
    fn random_families_are_deterministic() {
        assert_eq!(random_tree(30, 5), random_tree(30, 5));
        assert!(random_tree(30, 5).is_tree());
        let g = random_connected(12, 30, 9).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.m(), 30);
        let t = random_triangulation(20, 3).unwrap();
        assert_eq!(t.m(), 3 * 20 - 6);
        assert_eq!(t, random_triangulation(20, 3).unwrap());
    }

    #[test]
    fn small_families() {
        assert_eq!(spider5(1).unwrap().m(), 7);
        assert_eq!(g2(5).unwrap().m(), 1 + 2 * 3);
        assert_eq!(matching(3, 2).n(), 8);
        assert!(Family::parse("nope", 3, None, 0).is_err());
    }
}

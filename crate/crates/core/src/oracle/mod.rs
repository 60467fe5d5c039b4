//! Exact (≤p)-inversion distances, diameters and converse numbers.
//!
//! The net effect of a plan is the XOR of its step masks, so the inversion
//! graph is the Cayley graph of `(Z/2)^m` generated by the distinct inversion
//! masks. Distances depend only on the disagreement mask and one search from
//! the zero state answers every query on a graph.

mod bfs;
pub mod generators;
mod mitm;

use std::time::{Duration, Instant};

use serde::Serialize;

pub use bfs::Exploration;
pub use generators::{generator_masks, generator_masks_with_budget, GeneratorSet, DEFAULT_ENUMERATION_BUDGET};

use crate::error::{Error, Result};
use crate::graph::{disagreement, InversionPlan, LabelledGraph, Orientation};

/// Resource limits. Anything beyond them is refused with
/// [`Error::BudgetExceeded`]; nothing is silently truncated.
#[derive(Clone, Debug)]
pub struct OracleConfig {
    /// Largest edge count for which the full `2^m` state space is searched.
    pub max_edges: usize,
    /// Largest edge count for single-distance meet-in-the-middle queries.
    pub mitm_max_edges: usize,
    /// Cap on stored states in meet-in-the-middle mode.
    pub mitm_state_budget: usize,
    /// Cap on vertex subsets visited while building generators.
    pub enumeration_budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_edges: 22,
            mitm_max_edges: 30,
            mitm_state_budget: 40_000_000,
            enumeration_budget: DEFAULT_ENUMERATION_BUDGET,
        }
    }
}

impl OracleConfig {
    pub fn with_max_edges(max_edges: usize) -> Self {
        OracleConfig {
            max_edges,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    Exhaustive,
    MeetInTheMiddle,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleStats {
    pub states_visited: u64,
    pub generators: usize,
    #[serde(serialize_with = "secs")]
    pub elapsed: Duration,
    pub mode: SearchMode,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// Exact answer with a witness plan taking `source` to `target`.
#[derive(Clone, Debug)]
pub struct OracleResult {
    /// `None` when the target is unreachable.
    pub value: Option<usize>,
    pub witness_plan: Option<InversionPlan>,
    pub source: Orientation,
    pub target: Orientation,
    pub stats: OracleStats,
}

/// Generators plus a completed search from the zero orientation.
pub struct Oracle {
    g: LabelledGraph,
    gens: GeneratorSet,
    exploration: Exploration,
    elapsed: Duration,
}

impl Oracle {
    /// Runs the full search. Refuses graphs with more than
    /// `cfg.max_edges` edges.
    pub fn new(g: &LabelledGraph, p: usize, cfg: &OracleConfig) -> Result<Oracle> {
        check_exhaustive(g, cfg)?;
        let start = Instant::now();
        let gens = generator_masks_with_budget(g, p, cfg.enumeration_budget)?;
        let exploration = Exploration::run(&gens, None);
        Ok(Oracle {
            g: g.clone(),
            gens,
            exploration,
            elapsed: start.elapsed(),
        })
    }

    pub fn graph(&self) -> &LabelledGraph {
        &self.g
    }

    pub fn p(&self) -> usize {
        self.gens.p()
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn exploration(&self) -> &Exploration {
        &self.exploration
    }

    /// Distance from the zero state to `mask`.
    pub fn distance_mask(&self, mask: u64) -> Option<usize> {
        self.exploration.distance(mask)
    }

    pub fn distance(&self, o1: &Orientation, o2: &Orientation) -> Result<OracleResult> {
        let t = disagreement(o1, o2)?.bits().to_u64();
        Ok(self.result_for(o1.clone(), o2.clone(), t))
    }

    pub fn diameter(&self) -> OracleResult {
        let t = self.exploration.farthest();
        let m = self.g.m();
        self.result_for(Orientation::zeros(m), Orientation::from_u64(m, t), t)
    }

    pub fn converse_number(&self) -> OracleResult {
        let m = self.g.m();
        let src = Orientation::zeros(m);
        let dst = src.converse();
        self.result_for(src, dst, all_ones(m))
    }

    fn result_for(&self, source: Orientation, target: Orientation, t: u64) -> OracleResult {
        let path = self.exploration.path_to(t);
        let witness_plan = path.as_ref().map(|p| self.plan_of(p));
        OracleResult {
            value: path.map(|p| p.len()),
            witness_plan,
            source,
            target,
            stats: OracleStats {
                states_visited: self.exploration.states_visited(),
                generators: self.gens.len(),
                elapsed: self.elapsed,
                mode: SearchMode::Exhaustive,
            },
        }
    }

    fn plan_of(&self, masks: &[u64]) -> InversionPlan {
        plan_from_masks(&self.gens, masks, "exact-oracle")
    }
}

fn plan_from_masks(gens: &GeneratorSet, masks: &[u64], provenance: &str) -> InversionPlan {
    let mut plan = InversionPlan::new(gens.p(), provenance);
    for &mk in masks {
        plan.push(gens.witness_of(mk).expect("path uses generators").clone());
    }
    plan
}

fn all_ones(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

fn check_exhaustive(g: &LabelledGraph, cfg: &OracleConfig) -> Result<()> {
    if g.m() > cfg.max_edges {
        return Err(Error::BudgetExceeded(format!(
            "exhaustive search needs m <= {} (graph has {} edges; raise --max-edges to override)",
            cfg.max_edges,
            g.m()
        )));
    }
    if g.m() > 40 {
        return Err(Error::BudgetExceeded(format!(
            "exhaustive search is limited to 40 edges, graph has {}",
            g.m()
        )));
    }
    Ok(())
}

/// Exact distance between two orientations. Uses a search that stops at the
/// target's layer when `m <= max_edges`, and meet-in-the-middle when
/// `m <= mitm_max_edges`.
pub fn distance(
    g: &LabelledGraph,
    p: usize,
    o1: &Orientation,
    o2: &Orientation,
    cfg: &OracleConfig,
) -> Result<OracleResult> {
    let t = disagreement(o1, o2)?;
    if t.len() != g.m() {
        return Err(Error::LengthMismatch {
            expected: g.m(),
            got: t.len(),
        });
    }
    if g.m() > cfg.max_edges.max(cfg.mitm_max_edges).min(64) {
        return Err(Error::BudgetExceeded(format!(
            "distance queries need m <= {} (graph has {} edges)",
            cfg.max_edges.max(cfg.mitm_max_edges),
            g.m()
        )));
    }
    let start = Instant::now();
    let t = t.bits().to_u64();
    let gens = generator_masks_with_budget(g, p, cfg.enumeration_budget)?;
    if g.m() <= cfg.max_edges && g.m() <= 40 {
        let ex = Exploration::run(&gens, Some(t));
        let path = ex.path_to(t);
        return Ok(OracleResult {
            value: path.as_ref().map(|p| p.len()),
            witness_plan: path.map(|p| plan_from_masks(&gens, &p, "exact-oracle")),
            source: o1.clone(),
            target: o2.clone(),
            stats: OracleStats {
                states_visited: ex.states_visited(),
                generators: gens.len(),
                elapsed: start.elapsed(),
                mode: SearchMode::Exhaustive,
            },
        });
    }
    let met = mitm::meet_in_the_middle(gens.raw_masks(), t, cfg.mitm_state_budget)?;
    Ok(OracleResult {
        value: Some(met.distance),
        witness_plan: Some(plan_from_masks(&gens, &met.path, "exact-oracle (meet-in-the-middle)")),
        source: o1.clone(),
        target: o2.clone(),
        stats: OracleStats {
            states_visited: met.states,
            generators: gens.len(),
            elapsed: start.elapsed(),
            mode: SearchMode::MeetInTheMiddle,
        },
    })
}

/// id^{≤p}(g): the eccentricity of the zero orientation.
pub fn diameter(g: &LabelledGraph, p: usize, cfg: &OracleConfig) -> Result<OracleResult> {
    Ok(Oracle::new(g, p, cfg)?.diameter())
}

/// conv^{≤p}(g): the distance from the zero orientation to all-ones.
pub fn converse_number(g: &LabelledGraph, p: usize, cfg: &OracleConfig) -> Result<OracleResult> {
    let zero = Orientation::zeros(g.m());
    distance(g, p, &zero, &zero.converse(), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_plan;
    use proptest::prelude::*;
    use std::collections::VecDeque;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    fn k3() -> LabelledGraph {
        LabelledGraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    fn path(n: usize) -> LabelledGraph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        LabelledGraph::new(n, &e).unwrap()
    }

    fn matching(k: usize) -> LabelledGraph {
        let e: Vec<_> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
        LabelledGraph::new(2 * k, &e).unwrap()
    }

    fn g2(n: usize) -> LabelledGraph {
        let mut e = vec![(0, 1)];
        for x in 2..n {
            e.push((0, x));
            e.push((1, x));
        }
        LabelledGraph::new(n, &e).unwrap()
    }

    fn check_witness(g: &LabelledGraph, p: usize, r: &OracleResult) {
        let plan = r.witness_plan.as_ref().unwrap();
        let rep = verify_plan(g, &r.source, &r.target, plan, p);
        assert!(rep.valid, "{rep:?}");
        assert_eq!(rep.length, r.value.unwrap());
    }

    #[test]
    fn k3_two_edges_needs_two_for_large_p() {
        let g = k3();
        for p in 6..=9 {
            let r = distance(&g, p, &Orientation::zeros(3), &Orientation::from_u64(3, 0b011), &cfg()).unwrap();
            assert_eq!(r.value, Some(2));
            check_witness(&g, p, &r);
        }
    }

    #[test]
    fn equal_orientations_are_at_distance_zero() {
        let g = k3();
        let o = Orientation::from_u64(3, 0b101);
        let r = distance(&g, 3, &o, &o, &cfg()).unwrap();
        assert_eq!(r.value, Some(0));
        assert!(r.witness_plan.unwrap().is_empty());
    }

    #[test]
    fn matching_converse() {
        let g = matching(3);
        let r = converse_number(&g, 4, &cfg()).unwrap();
        assert_eq!(r.value, Some(2));
        check_witness(&g, 4, &r);
        for k in 1..=4 {
            assert_eq!(converse_number(&matching(k), 3, &cfg()).unwrap().value, Some(k));
        }
    }

    #[test]
    fn spec_diameters() {
        assert_eq!(diameter(&k3(), 3, &cfg()).unwrap().value, Some(2));
        for n in 2..=8 {
            let r = diameter(&path(n), 3, &cfg()).unwrap();
            assert_eq!(r.value, Some((n - 1).div_ceil(2)));
            check_witness(&path(n), 3, &r);
        }
        let k2 = path(2);
        for p in 2..6 {
            assert_eq!(diameter(&k2, p, &cfg()).unwrap().value, Some(1));
        }
    }

    #[test]
    fn converse_examples() {
        assert_eq!(converse_number(&path(5), 3, &cfg()).unwrap().value, Some(2));
        assert_eq!(converse_number(&g2(4), 3, &cfg()).unwrap().value, Some(3));
    }

    #[test]
    fn edgeless_graph() {
        let g = LabelledGraph::empty(4);
        assert_eq!(diameter(&g, 3, &cfg()).unwrap().value, Some(0));
        assert_eq!(converse_number(&g, 3, &cfg()).unwrap().value, Some(0));
    }

    #[test]
    fn refuses_beyond_budget() {
        let g = path(12);
        let small = OracleConfig {
            max_edges: 5,
            mitm_max_edges: 5,
            ..cfg()
        };
        assert!(matches!(diameter(&g, 3, &small), Err(Error::BudgetExceeded(_))));
        assert!(matches!(converse_number(&g, 3, &small), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn meet_in_the_middle_agrees_with_bfs() {
        let g = LabelledGraph::new(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6), (0, 3), (2, 5), (1, 4)],
        )
        .unwrap();
        let oracle = Oracle::new(&g, 3, &cfg()).unwrap();
        let mitm_only = OracleConfig {
            max_edges: 0,
            ..cfg()
        };
        let zero = Orientation::zeros(g.m());
        for t in [0u64, 1, 0b1011, 0b11_1111_1111, 0b10_1010_0101] {
            let r = distance(&g, 3, &zero, &Orientation::from_u64(g.m(), t), &mitm_only).unwrap();
            assert_eq!(r.stats.mode, SearchMode::MeetInTheMiddle);
            assert_eq!(r.value, oracle.distance_mask(t));
            check_witness(&g, 3, &r);
        }
    }

    /// Plain BFS on the explicit inversion graph from every source.
    fn naive_diameter(g: &LabelledGraph, p: usize) -> usize {
        let gens = generator_masks(g, p).unwrap();
        let states = 1usize << g.m();
        let mut best = 0;
        for s in 0..states {
            let mut d = vec![usize::MAX; states];
            d[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &mk in gens.raw_masks() {
                    let y = x ^ mk as usize;
                    if d[y] == usize::MAX {
                        d[y] = d[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            best = best.max(*d.iter().max().unwrap());
        }
        best
    }

    #[test]
    fn single_source_matches_all_pairs() {
        let graphs = [k3(), path(5), g2(5), matching(3)];
        for g in &graphs {
            for p in 2..=4 {
                assert_eq!(diameter(g, p, &cfg()).unwrap().value, Some(naive_diameter(g, p)));
            }
        }
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        // P3 with p = 2: reversing both edges needs the masks 01 then 10.
        let g = path(3);
        let r = converse_number(&g, 2, &cfg()).unwrap();
        let plan = r.witness_plan.unwrap();
        assert_eq!(plan.steps[0].vertices(), &[0, 1]);
        assert_eq!(plan.steps[1].vertices(), &[1, 2]);
    }

    fn small_graph() -> impl Strategy<Value = LabelledGraph> {
        (3usize..7).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))).collect();
            let k = pairs.len();
            proptest::collection::vec(any::<bool>(), k).prop_map(move |keep| {
                let e: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).take(12).collect();
                LabelledGraph::new(n, &e).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn distance_properties(g in small_graph(), p in 2usize..5, a in any::<u64>(), b in any::<u64>(), c in any::<u64>(), z in any::<u64>()) {
            let m = g.m();
            let oracle = Oracle::new(&g, p, &cfg()).unwrap();
            let o = |x: u64| Orientation::from_u64(m, x);
            let d = |x: u64, y: u64| oracle.distance(&o(x), &o(y)).unwrap().value.unwrap();
            prop_assert_eq!(d(a, b), d(b, a));
            prop_assert!(d(a, c) <= d(a, b) + d(b, c));
            prop_assert_eq!(d(a, b), d(a ^ z, b ^ z));
            let r = oracle.distance(&o(a), &o(b)).unwrap();
            let rep = verify_plan(&g, &r.source, &r.target, r.witness_plan.as_ref().unwrap(), p);
            prop_assert!(rep.valid);
            let dia = oracle.diameter().value.unwrap();
            prop_assert!(d(a, b) <= dia);
            prop_assert!(oracle.converse_number().value.unwrap() <= dia);
            let next = Oracle::new(&g, p + 1, &cfg()).unwrap();
            prop_assert!(next.diameter().value.unwrap() <= dia);
        }
    }
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::bits::BitVector;
use crate::bounds::generate::*;
use crate::oracle::{self, OracleConfig};

fn random_orientation(m: usize, rng: &mut ChaCha8Rng) -> Orientation {
    Orientation::new(BitVector::from_bools((0..m).map(|_| rng.gen::<bool>())))
}

fn zeros_ones(g: &LabelledGraph) -> (Orientation, Orientation) {
    let z = Orientation::zeros(g.m());
    let o = z.converse();
    (z, o)
}

fn only(g: &LabelledGraph, edges: &[(usize, usize)]) -> Orientation {
    let mut bits = BitVector::zeros(g.m());
    for &(u, v) in edges {
        bits.set(g.edge_index(u, v).unwrap(), true);
    }
    Orientation::new(bits)
}

#[test]
fn uppergen_examples() {
    let opts = ReductionOptions::default();
    let m = matching(7, 0);
    let (z, o) = zeros_ones(&m);
    assert_eq!(plan_uppergen(&m, 4, &z, &o, &opts).unwrap().plan.len(), 4);

    let s = star(6);
    let (z, o) = zeros_ones(&s);
    let r = plan_uppergen(&s, 6, &z, &o, &opts).unwrap();
    assert_eq!(r.plan.len(), 2);
    assert_eq!(r.details["star_steps"], 2);
    assert_eq!(r.details["residue_edges"], 0);

    let e = LabelledGraph::empty(4);
    let z = Orientation::zeros(0);
    assert!(plan_uppergen(&e, 3, &z, &z, &opts).unwrap().plan.is_empty());
}

#[test]
fn connected3_examples() {
    for seed in 0..20 {
        let t = random_tree(15, seed);
        let (z, o) = zeros_ones(&t);
        assert_eq!(plan_connected3(&t, &z, &o, false).unwrap().plan.len(), 7);
    }
    let k3 = complete(3);
    let (z, o) = zeros_ones(&k3);
    let r = plan_connected3(&k3, &z, &o, false).unwrap();
    assert!(r.plan.len() <= 2);
    assert_eq!(plan_connected3(&k3, &z, &z, true).unwrap().plan.len(), 0);
    let two = matching(2, 0);
    let (z, o) = zeros_ones(&two);
    assert!(matches!(plan_connected3(&two, &z, &o, false), Err(Error::Disconnected)));
}

#[test]
fn degenerate_and_procedure1_examples() {
    let t = random_tree(12, 3);
    let (z, o) = zeros_ones(&t);
    assert!(plan_degenerate(&t, 2, &z, &o).unwrap().plan.len() <= 11);

    let g = g2(5).unwrap();
    let (z, o) = zeros_ones(&g);
    let r = plan_degenerate(&g, 3, &z, &o).unwrap();
    // full reversal is one shorter than the diameter for odd n
    let cfg = OracleConfig::default();
    assert_eq!(oracle::distance(&g, 3, &z, &o, &cfg).unwrap().value, Some(3));
    assert!(r.plan.len() <= 4);
    let far = oracle::diameter(&g, 3, &cfg).unwrap();
    assert_eq!(far.value, Some(4));
    let r = plan_degenerate(&g, 3, &far.source, &far.target).unwrap();
    assert_eq!(r.plan.len(), 4);

    let k4 = complete(4);
    let (z, o) = zeros_ones(&k4);
    assert!(matches!(plan_degenerate(&k4, 3, &z, &o), Err(Error::InvalidParameter(_))));
    let r = plan_procedure1(&k4, 3, &z, &o).unwrap();
    // 6/2 + (1/2)·3 = 4.5
    assert_eq!(r.bound, 4);
    assert!(r.plan.len() <= 4);

    let s = star(4);
    let (z, o) = zeros_ones(&s);
    assert_eq!(plan_procedure1(&s, 5, &z, &o).unwrap().plan.len(), 1);
    assert!(plan_procedure1(&s, 5, &z, &z).unwrap().plan.is_empty());
}

#[test]
fn tree_examples() {
    for n in 2..30 {
        let t = random_tree(n, n as u64);
        let r = conv_plan_tree(&t, 3).unwrap();
        assert_eq!(r.plan.len(), (n - 1).div_ceil(2));
    }
    let s = star(7);
    assert!(conv_plan_tree(&s, 4).unwrap().plan.len() <= 3);
    assert_eq!(conv_plan_tree(&path(5), 5).unwrap().plan.len(), 1);
    assert!(matches!(conv_plan_tree(&complete(3), 3), Err(Error::NotATree)));

    let p3 = path(3);
    let z = Orientation::zeros(2);
    let r = lift_conv_to_id(&p3, 3, &z, &only(&p3, &[(0, 1)])).unwrap();
    assert_eq!(r.plan.steps, vec![InversionSet::from_vertices([0, 1])]);
    assert!(lift_conv_to_id(&p3, 3, &z, &z).unwrap().plan.is_empty());

    let t = random_tree(25, 9);
    let (z, o) = zeros_ones(&t);
    for p in 3..=8 {
        assert_eq!(
            lift_conv_to_id(&t, p, &z, &o).unwrap().plan.len(),
            conv_plan_tree(&t, p).unwrap().plan.len()
        );
    }
}

#[test]
fn tree_routes_respect_bounds() {
    for seed in 0..60 {
        let n = 2 + (seed as usize * 7) % 150;
        let t = random_tree(n, seed);
        for p in 3..=10 {
            let r = conv_plan_tree(&t, p).unwrap();
            for route in TreeRoute::ALL {
                if let Some(b) = conv_bound_for(route, n, p) {
                    let len = r.details[&format!("{}_length", route.name())].as_u64().unwrap() as usize;
                    assert!(len <= b, "{} on n={n} p={p}: {len} > {b}", route.name());
                }
            }
        }
    }
}

#[test]
fn planar_small_examples() {
    let k3 = complete(3);
    let (z, o) = zeros_ones(&k3);
    assert_eq!(plan_planar_small(&k3, 3, &z, &o, true).unwrap().plan.len(), 1);

    let c4 = cycle(4).unwrap();
    let (z, o) = zeros_ones(&c4);
    let r = plan_planar_small(&c4, 3, &z, &o, true).unwrap();
    assert_eq!(r.plan.len(), 2);
    assert_eq!(r.details["four_cycles"], 1);

    let k4 = complete(4);
    let z = Orientation::zeros(6);
    let target = only(&k4, &[(0, 1), (0, 2), (0, 3)]);
    let r = plan_planar_small(&k4, 3, &z, &target, true).unwrap();
    assert_eq!(r.plan.len(), 3);
    assert!(r.plan.len() <= 5);
}

#[test]
fn wheel_diagonal_cancels() {
    // rim 0-1-2-3, hub 4, chord 0-2 as well: only the rim disagrees
    let g = LabelledGraph::new(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4), (0, 2)]).unwrap();
    let z = Orientation::zeros(g.m());
    let target = only(&g, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
    let r = plan_planar_small(&g, 3, &z, &target, true).unwrap();
    assert_eq!(r.details["four_cycles"], 1);
    assert_eq!(r.plan.len(), 2);
    let chord = g.edge_index(0, 2).unwrap();
    let flips = r
        .plan
        .steps
        .iter()
        .filter(|s| g.inversion_mask(s).unwrap().contains(chord))
        .count();
    assert_eq!(flips, 2);
    assert!(!r.plan.net_mask(&g).unwrap().contains(chord));
}

#[test]
fn planar_general_bound() {
    let opts = ReductionOptions::default();
    for seed in 0..10 {
        let g = random_triangulation(12 + seed as usize, seed).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (random_orientation(g.m(), &mut rng), random_orientation(g.m(), &mut rng));
        for p in 2..=10 {
            let r = plan_planar_general(&g, p, &a, &b, &opts).unwrap();
            assert!(r.plan.len() <= r.bound);
        }
    }
    let m = matching(5, 0);
    let (z, o) = zeros_ones(&m);
    assert_eq!(plan_planar_general(&m, 4, &z, &o, &opts).unwrap().plan.len(), 3);
}

#[test]
fn uppergen_stall_is_small() {
    let opts = ReductionOptions {
        residue_oracle: false,
        ..ReductionOptions::default()
    };
    let c5 = cycle(5).unwrap();
    let (z, o) = zeros_ones(&c5);
    for p in 6..=10 {
        let q = p / 2;
        let r = plan_uppergen(&c5, p, &z, &o, &opts).unwrap();
        assert!(r.plan.len() <= 2 * (q - 1) * (q - 1));
    }
}

#[test]
fn planners_never_beat_the_oracle() {
    let cfg = OracleConfig::default();
    let opts = PlanOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..25 {
        let n = 4 + i % 5;
        let m = (n - 1 + i % 6).min(n * (n - 1) / 2).min(14);
        let g = random_connected(n, m, i as u64).unwrap();
        let (a, b) = (random_orientation(g.m(), &mut rng), random_orientation(g.m(), &mut rng));
        for p in 2..=6 {
            let exact = oracle::distance(&g, p, &a, &b, &cfg).unwrap().value.unwrap();
            for name in applicable_planners(&g, p, false) {
                let r = run_planner(name, &g, p, &a, &b, &opts).unwrap();
                assert!(r.plan.len() >= exact, "{name} p={p}: {} < {exact}", r.plan.len());
            }
            let best = best_plan(&g, p, &a, &b, &opts).unwrap();
            assert!(best.plan.len() >= exact);
        }
    }
}

#[test]
fn best_plan_examples() {
    let opts = PlanOptions::default();
    let t = random_tree(11, 2);
    let (z, o) = zeros_ones(&t);
    let r = best_plan(&t, 3, &z, &o, &opts).unwrap();
    assert_eq!(r.plan.len(), 5);

    let k3 = complete(3);
    let z = Orientation::zeros(3);
    assert_eq!(best_plan(&k3, 3, &z, &z.converse(), &opts).unwrap().plan.len(), 1);
    assert!(best_plan(&k3, 3, &z, &z, &opts).unwrap().plan.is_empty());
}

#[test]
fn composition_examples() {
    let t = random_tree(9, 4);
    let (z, o) = zeros_ones(&t);
    let v = (0..9).max_by_key(|&v| t.degree(v)).unwrap();
    let h = EdgeMask::from_edges(t.m(), t.incident(v).iter().map(|&(_, e)| e));
    let mut plan_h = InversionPlan::new(3, "star");
    for &(w, _) in t.incident(v) {
        plan_h.push(InversionSet::from_vertices([v, w]));
    }
    let rest: Vec<usize> = (0..9).filter(|&w| w != v).collect();
    let plan = compose_subgraph_then_induced(&t, &z, &o, &h, &plan_h, &rest, |sub, a, b| {
        Ok(lift_conv_to_id(sub, 3, a, b)?.plan)
    })
    .unwrap();
    assert!(verify_plan(&t, &z, &o, &plan, 3).valid);

    let overlap = compose_subgraph_then_induced(&t, &z, &o, &h, &plan_h, &(0..9).collect::<Vec<_>>(), |_, _, _| {
        Ok(InversionPlan::new(3, "none"))
    });
    assert!(matches!(overlap, Err(Error::Overlap(_))));
}

//! Every constructive planner on one random orientation pair, next to the
//! exact distance.
//!
//! For a random connected graph with 16 edges and each cap `p`, runs all
//! applicable planners, prints their lengths and guaranteed bounds, the
//! winner chosen by `best_plan`, and the exact distance from the oracle.
//!
//! Usage: cargo run --release --example planners [seed]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use inversion_diameter::bits::BitVector;
use inversion_diameter::bounds::generate::random_connected;
use inversion_diameter::oracle::{self, OracleConfig};
use inversion_diameter::plan::{applicable_planners, best_plan, run_planner, PlanOptions};
use inversion_diameter::Orientation;

fn main() {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let g = random_connected(9, 16, seed).expect("valid size");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random = || Orientation::new(BitVector::from_bools((0..g.m()).map(|_| rng.gen::<bool>())));
    let (o1, o2) = (random(), random());
    println!("graph: n={} m={} edges={:?}", g.n(), g.m(), g.edges());
    println!("o1 = {}\no2 = {}", o1.bits(), o2.bits());

    let opts = PlanOptions::default();
    for p in 2..=8 {
        let exact = oracle::distance(&g, p, &o1, &o2, &OracleConfig::default()).unwrap();
        let mut cells = Vec::new();
        for name in applicable_planners(&g, p, false) {
            match run_planner(name, &g, p, &o1, &o2, &opts) {
                Ok(r) => cells.push(format!("{name}={}/{}", r.plan.len(), r.bound)),
                Err(e) => cells.push(format!("{name}=error({e})")),
            }
        }
        let best = best_plan(&g, p, &o1, &o2, &opts).unwrap();
        println!(
            "p={p}: exact={} best={} ({}, {})  [{}]",
            exact.value.unwrap(),
            best.plan.len(),
            best.route,
            best.details["winner_route"],
            cells.join(" ")
        );
    }
}

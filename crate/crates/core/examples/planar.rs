//! Planar planners on random triangulations.
//!
//! The small-cap procedure (triangles, 4-cycles, open paths, separated
//! pairs, then single edges) for `p ∈ {3,4,5}`, and the reduction loop with
//! a vertex-cover finish for larger caps, each against its planar bound.
//!
//! Usage: cargo run --release --example planar

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use inversion_diameter::bits::BitVector;
use inversion_diameter::bounds::generate::random_triangulation;
use inversion_diameter::plan::{plan_planar_general, plan_planar_small, ReductionOptions};
use inversion_diameter::Orientation;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in [8, 16, 24, 40] {
        let g = random_triangulation(n, n as u64).unwrap();
        let o1 = Orientation::zeros(g.m());
        let o2 = Orientation::new(BitVector::from_bools((0..g.m()).map(|_| rng.gen::<bool>())));
        for p in 3..=5 {
            let r = plan_planar_small(&g, p, &o1, &o2, true).unwrap();
            let d = &r.details;
            println!(
                "n={n:>2} m={:>3} p={p}: {:>3} steps (bound {:>3}) = {} triangles + 2x{} four-cycles + {} paths + {} pairs + {} singles",
                g.m(),
                r.plan.len(),
                r.bound,
                d["triangles"],
                d["four_cycles"],
                d["open_paths"],
                d["separated_pairs"],
                d["singles"]
            );
        }
        for p in [6, 8, 10] {
            let r = plan_planar_general(&g, p, &o1, &o2, &ReductionOptions::default()).unwrap();
            println!(
                "n={n:>2} m={:>3} p={p}: {:>3} steps (bound {:>3}) via {} ({} star steps, {} matchings)",
                g.m(),
                r.plan.len(),
                r.bound,
                r.route,
                r.details["star_steps"],
                r.details["matchings"]
            );
        }
    }
}

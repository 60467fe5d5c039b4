//! Reversing whole trees, and lifting converse plans to arbitrary
//! orientation pairs of a forest.
//!
//! For random trees of growing size, prints the length of each route
//! (short paths, 4-vertex pieces, good 5-sets/pairs, dense extraction)
//! against its guaranteed bound, then shows the lift on a pair that
//! disagrees on a few scattered subtrees.
//!
//! Usage: cargo run --release --example tree_converse

use inversion_diameter::bits::BitVector;
use inversion_diameter::bounds::generate::random_tree;
use inversion_diameter::plan::{conv_plan_tree, lift_conv_to_id, TreeRoute};
use inversion_diameter::Orientation;

fn main() {
    println!("{:>4} {:>2}  route: length/bound ...", "n", "p");
    for n in [10, 30, 60, 120, 200] {
        let t = random_tree(n, n as u64);
        for p in [3, 4, 5, 8, 12, 20] {
            let r = conv_plan_tree(&t, p).unwrap();
            let cells: Vec<String> = TreeRoute::ALL
                .iter()
                .filter_map(|route| {
                    let len = r.details.get(&format!("{}_length", route.name()))?;
                    let bound = &r.details[&format!("{}_bound", route.name())];
                    Some(format!("{}: {len}/{bound}", route.name()))
                })
                .collect();
            println!("{n:>4} {p:>2}  best {} via {}  [{}]", r.plan.len(), r.route, cells.join(", "));
        }
    }

    // disagreement on every third edge: many small components
    let t = random_tree(40, 1);
    let o1 = Orientation::zeros(t.m());
    let o2 = Orientation::new(BitVector::from_bools((0..t.m()).map(|e| e % 3 == 0)));
    for p in [3, 4, 6] {
        let r = lift_conv_to_id(&t, p, &o1, &o2).unwrap();
        println!(
            "lift p={p}: {} steps (bound {}), {} components, {} steps before packing",
            r.plan.len(),
            r.bound,
            r.details["components"],
            r.details["unpacked_steps"]
        );
    }
}

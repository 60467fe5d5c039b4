//! Exact inversion diameters and converse numbers by exhaustive search.
//!
//! Prints a small table: for a few graphs and caps, the diameter
//! `id^{≤p}`, the converse number `conv^{≤p}`, the number of distinct
//! inversion masks, and a witness plan for the farthest orientation.
//!
//! Usage: cargo run --release --example exact_oracle

use inversion_diameter::bounds::generate::{complete, g2, matching, path, spider5};
use inversion_diameter::oracle::{Oracle, OracleConfig};
use inversion_diameter::{verify_plan, LabelledGraph};

fn row(name: &str, g: &LabelledGraph, p: usize) {
    let oracle = Oracle::new(g, p, &OracleConfig::default()).expect("within the search budget");
    let far = oracle.diameter();
    let conv = oracle.converse_number();
    let plan = far.witness_plan.as_ref().expect("every orientation is reachable");
    assert!(verify_plan(g, &far.source, &far.target, plan, p).valid);
    let steps: Vec<String> = plan.steps.iter().map(|s| format!("{:?}", s.vertices())).collect();
    println!(
        "{name:<14} n={:<2} m={:<2} p={p:<2} masks={:<4} id={:<2} conv={:<2} farthest={} via {}",
        g.n(),
        g.m(),
        oracle.generators().len(),
        far.value.unwrap(),
        conv.value.unwrap(),
        far.target.bits(),
        steps.join(" ")
    );
}

fn main() {
    // K3 needs two inversions to reverse exactly two edges, whatever p is
    for p in 2..=9 {
        row("K3", &complete(3), p);
    }
    // matchings: ⌈m/⌊p/2⌋⌉
    for p in [2, 3, 4, 6] {
        row("matching(6)", &matching(6, 0), p);
    }
    // paths: ⌈(n-1)/2⌉ at p = 3
    for n in [5, 8, 11] {
        row(&format!("path({n})"), &path(n), 3);
    }
    // G²_n: conv is n-1 for even n and n-2 for odd n; id is n-1
    for n in 4..=7 {
        row(&format!("G2({n})"), &g2(n).unwrap(), 3);
    }
    row("spider5(1)", &spider5(1).unwrap(), 5);
}

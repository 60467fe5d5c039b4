//! Graph, orientation and plan files: write, read back, verify.
//!
//! Writes K4 with two orientations and a plan into a temporary directory,
//! prints each file, reloads them, verifies the plan, and shows the parse
//! errors (with line numbers) for a few malformed inputs.
//!
//! Usage: cargo run --example file_formats

use inversion_diameter::bounds::generate::complete;
use inversion_diameter::io;
use inversion_diameter::plan::{best_plan, PlanOptions};
use inversion_diameter::{verify_plan, Orientation};

fn main() {
    let dir = std::env::temp_dir().join(format!("invdiam-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g = complete(4);
    let o1 = Orientation::zeros(g.m());
    let o2 = io::parse_orientation("110100", Some(g.m())).unwrap();
    let plan = best_plan(&g, 3, &o1, &o2, &PlanOptions::default()).unwrap().plan;

    io::write_graph(&dir.join("k4.txt"), &g).unwrap();
    io::write_orientation(&dir.join("o1.txt"), &o1).unwrap();
    io::write_orientation(&dir.join("o2.txt"), &o2).unwrap();
    io::write_plan(&dir.join("plan.json"), &plan).unwrap();
    for f in ["k4.txt", "o1.txt", "o2.txt", "plan.json"] {
        println!("--- {f}\n{}", std::fs::read_to_string(dir.join(f)).unwrap().trim_end());
    }

    let g2 = io::read_graph(&dir.join("k4.txt")).unwrap();
    let a = io::read_orientation(&dir.join("o1.txt"), Some(g2.m())).unwrap();
    let b = io::read_orientation(&dir.join("o2.txt"), Some(g2.m())).unwrap();
    let p = io::read_plan(&dir.join("plan.json")).unwrap();
    assert_eq!((g2, a.clone(), b.clone(), p.clone()), (g.clone(), o1, o2, plan));
    println!("--- reloaded, verify: {:?}", verify_plan(&g, &a, &b, &p, p.p));

    for bad in ["4 2\n0 1\n1 1\n", "3 1\n0 1\n1 2\n", "2 1\n0 one\n"] {
        println!("{bad:?} -> {}", io::parse_graph(bad).unwrap_err());
    }
    println!("\"0101\" for 6 edges -> {}", io::parse_orientation("0101", Some(6)).unwrap_err());
    std::fs::remove_dir_all(&dir).unwrap();
}

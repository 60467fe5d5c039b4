//! A small cross-check corpus written as CSV to stdout.
//!
//! Trees, connected graphs and triangulations small enough for the exact
//! oracle, at caps 3 to 6: every row compares the lower bound, the exact
//! values and all planners. The summary goes to stderr.
//!
//! Usage: cargo run --release --example corpus_run > corpus.csv

use inversion_diameter::corpus::{run_corpus, CorpusSpec, FamilySpec};

fn main() {
    let fam = |family: &str, sizes: Vec<usize>, edges: Vec<usize>| FamilySpec {
        family: family.into(),
        sizes,
        edges,
        samples: 2,
    };
    let spec = CorpusSpec {
        families: vec![
            fam("random-tree", vec![6, 9, 12], vec![]),
            fam("random-connected", vec![6, 8], vec![10, 14]),
            fam("random-triangulation", vec![6, 7], vec![]),
            fam("g2", vec![4, 5, 6], vec![]),
        ],
        p_values: (3..=6).collect(),
        ..CorpusSpec::standard(1)
    };
    let report = run_corpus(&spec).unwrap();
    report.write_csv(std::io::stdout()).unwrap();
    eprintln!("{}", serde_json::to_string_pretty(&report.summary).unwrap());
    if !report.ok() {
        std::process::exit(1);
    }
}

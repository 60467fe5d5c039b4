//! Lower bounds with exactly checked rational weight certificates.
//!
//! Shows the double-wheel and spider certificates, how a cap lowered by
//! the smallest amount is rejected, the odd-degree bound on the odd
//! triangulations, and the bound chosen for a few graphs next to the exact
//! converse number.
//!
//! Usage: cargo run --release --example lower_bounds

use inversion_diameter::bounds::generate::{complete, double_wheel, odd_triangulation, spider4};
use inversion_diameter::bounds::{check_weight_certificate, lb_odd_degree, lower_bound, Weight, WeightCertificate};
use inversion_diameter::oracle::{converse_number, OracleConfig};

fn main() {
    for (n, p) in [(7, 3), (10, 4), (14, 6)] {
        let g = double_wheel(n).unwrap();
        let cert = WeightCertificate::double_wheel(n, p).unwrap();
        let check = check_weight_certificate(&g, p, &cert).unwrap();
        let mut lowered = cert.clone();
        lowered.cap -= Weight::new(1, 1_000_000);
        let rejected = !check_weight_certificate(&g, p, &lowered).unwrap().valid;
        println!(
            "DW{n} p={p}: total {} cap {} heaviest {} on {:?} -> conv >= {}; lowered cap rejected: {rejected}",
            cert.total(),
            cert.cap,
            check.heaviest.weight,
            check.heaviest.set,
            check.implied_bound
        );
    }

    let sp = spider4(11).unwrap();
    let cert = WeightCertificate::spider4(11).unwrap();
    let check = check_weight_certificate(&sp, 4, &cert).unwrap();
    println!("spider4(11): conv^{{<=4}} >= {} (valid {})", check.implied_bound, check.valid);

    for q in 1..=6 {
        let g = odd_triangulation(q).unwrap();
        let lb = lb_odd_degree(&g);
        println!("odd triangulation q={q}: n={} m={} lb={} (7n/6 - 2 = {})", g.n(), g.m(), lb.value, (7 * g.n()).div_ceil(6) - 2);
    }

    for (name, g) in [("K5", complete(5)), ("K6", complete(6)), ("DW8", double_wheel(8).unwrap())] {
        for p in [3, 4] {
            let lb = lower_bound(&g, p).unwrap();
            let exact = converse_number(&g, p, &OracleConfig::default()).unwrap();
            println!("{name} p={p}: lower bound {} ({}) <= conv {}", lb.value, lb.method, exact.value.unwrap());
        }
    }
}

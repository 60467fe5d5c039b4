//! The decomposition subroutines behind the planners, each checked against
//! its defining property.
//!
//! Usage: cargo run --release --example decompositions

use inversion_diameter::bounds::generate::{complete, random_connected, random_tree, random_triangulation};
use inversion_diameter::decompose::{
    check_extracted, check_good5, check_tree4_parts, degeneracy_ordering, find_good5, find_induced_matching,
    is_induced_matching, is_triangle_free_without, kotzig_p3, min_triangle_transversal, strong_edge_colouring,
    tree4_bound, tree4_decomposition, tree_extract_set, triangle_packing,
};

fn main() {
    let g = random_connected(12, 25, 3).unwrap();
    let paths = kotzig_p3(&g).unwrap();
    println!("kotzig: m={} -> {} paths of order <= 3: {:?}", g.m(), paths.len(), &paths.parts[..4]);

    let sc = strong_edge_colouring(&g);
    let delta = g.max_degree();
    assert!(sc.classes.iter().all(|c| is_induced_matching(&g, c)));
    println!("strong colouring: {} classes (2Δ² = {})", sc.classes.len(), 2 * delta * delta);

    let tri = random_triangulation(10, 4).unwrap();
    let heuristic = min_triangle_transversal(&tri, false).unwrap();
    let exact = min_triangle_transversal(&tri, true).unwrap();
    assert!(is_triangle_free_without(&tri, &exact));
    let packing = triangle_packing(&tri, true).unwrap();
    println!(
        "triangulation m={}: transversal heuristic {} exact {}, packing {}",
        tri.m(),
        heuristic.count(),
        exact.count(),
        packing.len()
    );
    println!("induced matching of size 3 in K6: {:?}", find_induced_matching(&complete(6), 3));
    println!("induced matching of size 3 in the triangulation: {:?}", find_induced_matching(&tri, 3));
    let ord = degeneracy_ordering(&tri);
    println!("degeneracy {} order {:?}", ord.k, ord.order);

    let t = random_tree(30, 8);
    let parts = tree4_decomposition(&t).unwrap();
    check_tree4_parts(&t, &parts).unwrap();
    println!("tree4: {} parts (bound {}): {:?}", parts.len(), tree4_bound(t.n()), parts);

    let found = find_good5(&t).unwrap();
    check_good5(&t, &found.witness).unwrap();
    println!("good5 via {}: {:?}", found.route, found.witness);

    for p in [6, 10, 16] {
        let set = tree_extract_set(&t, 0, p).unwrap();
        check_extracted(&t, p, &set).unwrap();
        println!("extract p={p}: {} vertices spanning {} edges: {:?}", set.x.len(), set.edge_count, set.x);
    }
}

//! Graph and tree decompositions consumed by the planners.

pub mod degeneracy;
pub mod extract;
pub mod good5;
pub mod kotzig;
pub mod matching;
pub mod strong;
mod tree;
pub mod tree4;
pub mod triangles;

pub(crate) use extract::extract_within;
pub(crate) use good5::find_good5_in;
pub(crate) use tree::TreeView;

pub use degeneracy::{degeneracy_ordering, forward_degree, DegeneracyOrdering};
pub use extract::{check_extracted, extraction_constant, extraction_threshold, tree_extract_set, ExtractedSet};
pub use good5::{check_good5, find_good5, Good5Found, Good5Witness};
pub use kotzig::{edges_connected, kotzig_p3, PathDecomposition};
pub use matching::{find_induced_matching, find_induced_matching_in};
pub use strong::{edge_closed_neighbourhood, is_induced_matching, strong_edge_colouring, StrongColouring};
pub use tree4::{check_tree4_parts, tree4_bound, tree4_decomposition};
pub use triangles::{
    is_triangle_free_without, min_triangle_transversal, triangle_packing, triangles, EXACT_TRIANGLE_CAP,
};

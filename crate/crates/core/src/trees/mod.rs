//! Trees, markings and the tree-sum formula for the potential.

mod marking;
mod potential;
mod tree;

pub use marking::{
    enum_marked, epsilon, labeled_stratum_sum, orbit_stratum_sum, stratum_class, vertex_factor,
    weighted_class, MarkedTree, WeightedMarking,
};
pub use potential::{tree_sum_potential, tree_sum_potential_upto, vertex_bound};
pub use tree::{enum_trees, Tree};

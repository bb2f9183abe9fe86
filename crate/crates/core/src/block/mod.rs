//! Block-graph machinery: block–cut decomposition, the elimination ordering
//! with the closure property, and the linear-time paired-domination solvers
//! for block graphs and trees.

mod decompose;
mod ordering;
mod solver;

pub use decompose::{block_cut_decomposition, is_block_graph, BlockDecomposition};
pub use ordering::{block_elimination_ordering, closure_property_holds, EliminationOrdering};
pub use solver::{mpdb, mpdb_labeled, mpdt, mpdt_labeled, VertexLabels};

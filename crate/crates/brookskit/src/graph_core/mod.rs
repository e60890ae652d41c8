//! Graph representation, formats and structural primitives.

pub mod bitset;
pub mod clique;
pub mod coloring;
pub mod digraph;
pub mod enumerate;
pub mod format;
pub mod graph;
pub mod structure;

pub use bitset::VertexSet;
pub use coloring::{greedy_color, Color, Coloring, ListAssignment};
pub use digraph::Digraph;
pub use graph::{named, Graph};

//! Graph coloring around Brooks' theorem: seven constructive Δ-coloring
//! strategies, list-coloring and kernel machinery, Alon–Tarsi counting,
//! online list coloring games, and exact oracles that referee all of them.

pub mod alon_tarsi;
pub mod brooks;
pub mod choosability;
pub mod error;
pub mod families;
pub mod graph_core;
pub mod limits;
pub mod oracle;
pub mod paintability;

pub use error::{Error, Result};
pub use graph_core::{Color, Coloring, Graph, ListAssignment, VertexSet};

//! List coloring: cycles from 2-lists, Gallai trees and their bad lists,
//! degree-choosability, kernel-perfect orientations, and the forest
//! extension behind the independency-tree strategy.

pub mod cycle;
pub mod degree;
pub mod gallai;
pub mod independency;
pub mod kernel;
pub mod rubin;
pub mod stiebitz;

pub use cycle::{cycle_list_color, CycleOutcome};
pub use degree::{degree_choose_color, even_cycle_in_graph, DegreeOutcome};
pub use gallai::gallai_bad_lists;
pub use independency::{find_independency_tree, IndependencyTree, TreeSearch};
pub use kernel::{
    brooks_list_color, kernel_color, kernel_orient, kernel_whittle, kernel_within, strategy_kernel, KernelCore,
};
pub use rubin::{rubin_even_cycle, EvenCycle};
pub use stiebitz::{stiebitz_color, strategy_independency, ForestExtension};

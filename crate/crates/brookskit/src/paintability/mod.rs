//! Online list coloring: exact game solving and the kernel painter.

pub mod game;
pub mod kernel;

pub use game::{chi_paint_exact, paint_game_solve, painter_wins, PaintGame, PaintSolution, Winner};
pub use kernel::{painter_kernel_strategy, Adversary, KernelPainter, PlayTrace, Round, Validation};

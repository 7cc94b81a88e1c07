//! Linear algebra over ℤ/N and over products of cyclic rings.

mod echelon;
mod smith;
mod system;

pub use echelon::{Echelon, SparseRow};
pub use smith::{smith_int, solve_mod, IntSmith, LinearSolution, ModMatrix};
pub use system::SparseSystem;

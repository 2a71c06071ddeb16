//! Exact linear algebra over the integers.

mod fiber;
mod group;
mod lattice;
mod matrix;
mod smith;

pub use fiber::{solve_fiber_representations, FiberRepresentation, MultipleFiber};
pub use group::{elements_equal, present_group, FgAbGroup, GroupElement};
pub use lattice::{lattice_index, PlaneVector};
pub use matrix::IntMatrix;
pub use smith::{smith_normal_form, SmithDecomposition};

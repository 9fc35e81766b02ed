//! Exact rational linear algebra and rational group representations.

mod matrix;
mod rational;
mod wmodule;

pub use matrix::{quotient_space, QMatrix, Quotient};
pub use rational::Q;
pub use wmodule::WModule;

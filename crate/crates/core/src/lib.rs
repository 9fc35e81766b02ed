//! Exact computations with rational Mackey functors for finite groups.
//!
//! The crate is organised bottom-up: [`qlin`] provides exact rational linear
//! algebra, [`grp`] finite groups and their subgroup lattices, [`burnside`]
//! the rational Burnside ring, [`mackey`] the functors themselves,
//! [`classify`] the splitting into Weyl-group modules and [`monoidal`] the
//! box product. [`cli`] is the command-line front end.

pub mod burnside;
pub mod cli;
pub mod classify;
pub mod error;
pub mod grp;
pub mod mackey;
pub mod monoidal;
pub mod qlin;

pub use error::{Error, Result};

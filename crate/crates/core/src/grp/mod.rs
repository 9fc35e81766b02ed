//! Finite groups, their subgroup lattices, cosets and finite G-sets.

pub mod builtin;
mod group;
mod gset;
mod lattice;

pub use group::{cycle_string, parse_cycles, FiniteGroup, GroupSpec, Quotient, DEFAULT_CAP};
pub use gset::{GSet, Induced, Orbit};
pub use lattice::{SubgroupId, SubgroupLattice, Weyl};

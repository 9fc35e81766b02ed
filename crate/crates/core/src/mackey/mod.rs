//! Mackey functors: the data model, the axiom checker, standard
//! constructions, the Burnside ring action and change of group.
//!
//! Conventions: cosets are left cosets `gK`, vectors are columns, and
//! `C_g` maps `M(G/H)` to `M(G/gHg⁻¹)`. A `G`-map `G/K → G/H` sending `eK`
//! to `aH` acts as `R^{aHa⁻¹}_K ∘ C_a` contravariantly and as
//! `C_{a⁻¹} ∘ I^{aHa⁻¹}_K` covariantly.

mod axioms;
mod change;
mod constructions;
mod functor;
pub mod io;
mod lewis;
mod morphism;
mod sets;

pub use axioms::{check_axioms, Axiom, AxiomReport, Violation};
pub use change::{eps_lower, eps_upper, evaluate_bottom, fp_unit, i_lower, i_upper, QuotientLattice};
pub use constructions::{
    burnside_action, burnside_mackey, change_basis, coconstant, constant, direct_sum, direct_sum_all, dual,
    fp_bases, fp_functor, fp_to_fq, fq_functor, fq_quotients, idempotent_part, zero,
};
pub use functor::MackeyFunctor;
pub use lewis::lewis_dot;
pub use morphism::{hom_space, MackeyMorphism};
pub use sets::{evaluate_at_set, morphism_at_set, pullback, pushforward, SetValue};

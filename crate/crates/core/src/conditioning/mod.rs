//! Revising a mass function on learning that the answer is not in `Ā`.
//!
//! The dedicated rules live in [`rules`]; the coefficient families that
//! generalize them (specializations and transfer matrices) live in
//! [`matrix`], and probability imaging on closest worlds in [`imaging`].

pub mod imaging;
pub mod matrix;
pub mod rules;

pub use imaging::{image_closest, ClosestWorldMap};
pub use matrix::{
    apply_specialization, canonical_specialization, image_general, transfer_matrix_for,
    CanonicalRule, SpecializationMatrix, TransferMatrix, TransferRule,
};
pub use rules::{condition_closed, condition_geometric, condition_open, condition_yager_kohlas};

use crate::mass::MassFunction;

/// Result of a conditioning (or normalized combination) step.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditioningOutcome {
    pub result: MassFunction,
    /// Mass that reached `∅` before any normalization or reallocation.
    pub conflict: f64,
    /// Factor applied to the surviving masses; `1` for unnormalized rules.
    pub normalization: f64,
}

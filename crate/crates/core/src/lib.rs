//! Belief functions on finite frames.
//!
//! Mass functions, their belief and plausibility tables, the family of
//! conditioning rules (Dempster open and closed world, Yager–Kohlas,
//! geometric, specialization, imaging), conjunctive combination, credal-set
//! bounds with upper/lower Bayesian conditioning, and the pignistic
//! transformation.
//!
//! ```
//! use belief_core::{belief, condition_closed, fixtures};
//!
//! let m = fixtures::voting_masses();
//! let cde = m.frame().parse_subset("c,d,e").unwrap();
//! let out = condition_closed(&m, cde).unwrap();
//! let c = m.frame().parse_subset("c").unwrap();
//! assert!((belief(&out.result).bel(c) - 15.0 / 87.0).abs() < 1e-12);
//! ```

pub mod cli;
pub mod combination;
pub mod conditioning;
pub mod credal;
pub mod error;
pub mod fixtures;
pub mod frame;
pub mod io;
pub mod lattice;
pub mod mass;
pub mod pignistic;

/// Comparison tolerance for sums and positivity checks.
pub const TOLERANCE: f64 = 1e-9;

pub use combination::{conjunctive, dempster_combine};
pub use conditioning::{
    apply_specialization, canonical_specialization, condition_closed, condition_geometric,
    condition_open, condition_yager_kohlas, image_closest, image_general, transfer_matrix_for,
    CanonicalRule, ClosestWorldMap, ConditioningOutcome, SpecializationMatrix, TransferMatrix,
    TransferRule,
};
pub use credal::{
    bounds, credal_vertices, fh_conditional, oracle_conditional, CredalVertex, IntervalBound,
};
pub use error::{BeliefError, Result};
pub use frame::{Frame, SubsetKey, MAX_FRAME_SIZE};
pub use lattice::{belief, masses_from_belief, BeliefView};
pub use mass::{from_counts, normalize, MassFunction, RandomSetCounts, World};
pub use pignistic::{pignistic, Distribution, PignisticDistribution};

//! Conjunctive combination of independent mass functions.

use crate::conditioning::ConditioningOutcome;
use crate::error::{BeliefError, Result};
use crate::mass::{normalize, MassFunction, World};
use crate::TOLERANCE;

/// Unnormalized rule: `m12(X) = Σ_{B∩C=X} m1(B) m2(C)`. Conflict stays on `∅`.
pub fn conjunctive(m1: &MassFunction, m2: &MassFunction) -> Result<MassFunction> {
    m2.ensure_frame(m1.frame())?;
    let mut out = vec![0.0; m1.frame().subset_count()];
    for (b, mb) in m1.focal() {
        for (c, mc) in m2.focal() {
            out[b.intersection(c).index()] += mb * mc;
        }
    }
    Ok(MassFunction::from_dense(m1.frame().clone(), World::Open, &out))
}

/// Dempster's rule: [`conjunctive`] then normalization.
pub fn dempster_combine(m1: &MassFunction, m2: &MassFunction) -> Result<ConditioningOutcome> {
    let joint = conjunctive(m1, m2)?;
    let conflict = joint.empty_mass();
    if 1.0 - conflict <= TOLERANCE {
        return Err(BeliefError::TotalConflict { conflict });
    }
    Ok(ConditioningOutcome {
        result: normalize(&joint)?,
        conflict,
        normalization: 1.0 / (1.0 - conflict),
    })
}

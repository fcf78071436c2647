//! Upper and lower probabilities of the credal set dominated by a belief
//! function, and upper/lower Bayesian conditioning.
//!
//! [`fh_conditional`] uses the closed forms
//!
//! ```text
//! lower(B|A) = bel(A∩B) / (bel(A∩B) + pl(A∩B̄))
//! upper(B|A) = pl(A∩B)  / (pl(A∩B)  + bel(A∩B̄))
//! ```
//!
//! while [`oracle_conditional`] optimizes `P(A∩B)/P(A)` over the extreme
//! points returned by [`credal_vertices`]. The two are independent routes
//! to the same interval.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{BeliefError, Result};
use crate::frame::{Frame, SubsetKey};
use crate::lattice::belief;
use crate::mass::{MassFunction, World};
use crate::TOLERANCE;

/// Largest frame accepted by [`credal_vertices`] (`7! = 5040` orderings).
pub const MAX_ENUMERATION_SIZE: usize = 7;

/// A closed interval `[lower, upper]` inside `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalBound {
    pub lower: f64,
    pub upper: f64,
}

impl IntervalBound {
    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        let ok = lower.is_finite()
            && upper.is_finite()
            && lower >= -TOLERANCE
            && upper <= 1.0 + TOLERANCE
            && lower <= upper + 1e-12;
        if !ok {
            return Err(BeliefError::InvalidBelief(format!(
                "invalid interval [{lower}, {upper}]"
            )));
        }
        Ok(IntervalBound {
            lower: lower.clamp(0.0, 1.0).min(upper.clamp(0.0, 1.0)),
            upper: upper.clamp(0.0, 1.0),
        })
    }

    pub fn contains(&self, value: f64, tol: f64) -> bool {
        self.lower - tol <= value && value <= self.upper + tol
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

/// One extreme point of the credal set.
#[derive(Debug, Clone, PartialEq)]
pub struct CredalVertex {
    frame: Frame,
    prob: Vec<f64>,
}

impl CredalVertex {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.prob
    }

    pub fn prob(&self, set: SubsetKey) -> f64 {
        set.members().map(|i| self.prob[i]).sum()
    }
}

fn require_closed(m: &MassFunction) -> Result<()> {
    if m.world() == World::Open {
        return Err(BeliefError::OpenWorld);
    }
    Ok(())
}

/// `[bel(A), pl(A)]`: the range of `P(A)` over the credal set.
pub fn bounds(m: &MassFunction, set: SubsetKey) -> Result<IntervalBound> {
    require_closed(m)?;
    m.frame().check(set)?;
    let view = belief(m);
    IntervalBound::new(view.bel(set), view.pl(set))
}

/// Extreme points of `{P : bel ≤ P}`.
///
/// For every ordering of the elements, each focal mass goes to its
/// highest-ranked member. Distinct allocations are returned in order of
/// first appearance.
pub fn credal_vertices(m: &MassFunction) -> Result<Vec<CredalVertex>> {
    require_closed(m)?;
    let frame = m.frame();
    let n = frame.len();
    if n > MAX_ENUMERATION_SIZE {
        return Err(BeliefError::EnumerationTooLarge {
            n,
            max: MAX_ENUMERATION_SIZE,
        });
    }
    let focal: Vec<(SubsetKey, f64)> = m.focal().collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for order in (0..n).permutations(n) {
        let choice: Vec<usize> = focal
            .iter()
            .map(|(set, _)| {
                *order
                    .iter()
                    .find(|&&i| set.contains(i))
                    .expect("closed-world focal sets are non-empty")
            })
            .collect();
        if !seen.insert(choice.clone()) {
            continue;
        }
        let mut prob = vec![0.0; n];
        for (&i, &(_, mass)) in choice.iter().zip(&focal) {
            prob[i] += mass;
        }
        out.push(CredalVertex {
            frame: frame.clone(),
            prob,
        });
    }
    Ok(out)
}

/// Upper and lower conditional probability of `B` given `A` over the
/// credal set, from the closed forms.
///
/// When a denominator vanishes the interval is pinned by `pl(A) > 0`: a
/// zero lower denominator means no focal set meets `A∩B̄`, so every
/// admissible `P` has `P(B|A) = 1`; a zero upper denominator symmetrically
/// forces `P(B|A) = 0`.
pub fn fh_conditional(
    m: &MassFunction,
    given: SubsetKey,
    event: SubsetKey,
) -> Result<IntervalBound> {
    require_closed(m)?;
    let frame = m.frame();
    frame.check(given)?;
    frame.check(event)?;
    let view = belief(m);
    if view.pl(given) <= TOLERANCE {
        return Err(BeliefError::NoSolution(format!(
            "pl({}) = 0",
            frame.format_subset(given)
        )));
    }
    let inside = given.intersection(event);
    let outside = given.difference(event);
    let lower_den = view.bel(inside) + view.pl(outside);
    let upper_den = view.pl(inside) + view.bel(outside);
    let lower = if lower_den == 0.0 {
        1.0
    } else {
        view.bel(inside) / lower_den
    };
    let upper = if upper_den == 0.0 {
        0.0
    } else {
        view.pl(inside) / upper_den
    };
    IntervalBound::new(lower, upper)
}

/// Min and max of `v(A∩B) / v(A)` over credal vertices with `v(A) > 0`.
pub fn oracle_conditional(
    m: &MassFunction,
    given: SubsetKey,
    event: SubsetKey,
) -> Result<IntervalBound> {
    let frame = m.frame();
    frame.check(given)?;
    frame.check(event)?;
    let inside = given.intersection(event);
    let (lower, upper) = credal_vertices(m)?
        .iter()
        .filter_map(|v| {
            let pa = v.prob(given);
            (pa > 0.0).then(|| v.prob(inside) / pa)
        })
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
            (lo.min(r), hi.max(r))
        });
    if lower > upper {
        return Err(BeliefError::UndefinedConditional {
            set: frame.format_subset(given),
        });
    }
    IntervalBound::new(lower, upper)
}

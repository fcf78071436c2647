//! Probability distributions over frame elements and the pignistic transform.

use crate::error::{BeliefError, Result};
use crate::frame::{Frame, SubsetKey};
use crate::mass::MassFunction;
use crate::TOLERANCE;

/// A probability distribution over the elements of a frame.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    frame: Frame,
    prob: Vec<f64>,
}

/// The betting-level distribution obtained from a mass function.
pub type PignisticDistribution = Distribution;

impl Distribution {
    pub fn new(frame: Frame, prob: Vec<f64>) -> Result<Self> {
        if prob.len() != frame.len() {
            return Err(BeliefError::InvalidBelief(format!(
                "expected {} probabilities, got {}",
                frame.len(),
                prob.len()
            )));
        }
        if let Some((i, &p)) = prob
            .iter()
            .enumerate()
            .find(|(_, p)| !p.is_finite() || **p < 0.0)
        {
            return Err(BeliefError::NegativeMass {
                set: frame.format_subset(SubsetKey::singleton(i)),
                mass: p,
            });
        }
        let sum: f64 = prob.iter().sum();
        if (sum - 1.0).abs() > TOLERANCE {
            return Err(BeliefError::MassSum { sum });
        }
        Ok(Distribution { frame, prob })
    }

    pub(crate) fn from_raw(frame: Frame, prob: Vec<f64>) -> Self {
        Distribution { frame, prob }
    }

    /// Reads the singleton masses of a Bayesian mass function.
    pub fn from_bayesian(m: &MassFunction) -> Result<Self> {
        if !m.is_bayesian() {
            return Err(BeliefError::InvalidBelief(
                "mass function has non-singleton focal sets".into(),
            ));
        }
        let prob = (0..m.frame().len())
            .map(|i| m.mass(SubsetKey::singleton(i)))
            .collect();
        Distribution::new(m.frame().clone(), prob)
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.prob
    }

    pub fn element(&self, index: usize) -> f64 {
        self.prob[index]
    }

    /// Additive extension to sets.
    pub fn prob(&self, set: SubsetKey) -> f64 {
        set.members().map(|i| self.prob[i]).sum()
    }
}

/// `BetP(ω) = Σ_{X∋ω} m(X) / |X|`.
///
/// Requires `m(∅) = 0`; normalize first.
pub fn pignistic(m: &MassFunction) -> Result<PignisticDistribution> {
    let empty = m.empty_mass();
    if empty > 0.0 {
        return Err(BeliefError::NotNormalized { mass: empty });
    }
    let mut prob = vec![0.0; m.frame().len()];
    for (set, mass) in m.focal() {
        let share = mass / set.len() as f64;
        for i in set.members() {
            prob[i] += share;
        }
    }
    Ok(Distribution::from_raw(m.frame().clone(), prob))
}

//! Basic belief assignments and random-set frequency data.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{BeliefError, Result};
use crate::frame::{Frame, SubsetKey};
use crate::TOLERANCE;

/// Whether the true answer is assumed to lie inside the frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum World {
    Open,
    Closed,
}

impl fmt::Display for World {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            World::Open => "open",
            World::Closed => "closed",
        })
    }
}

/// A basic belief assignment over the subsets of a frame.
///
/// Only focal sets (non-zero mass) are stored. Masses are non-negative and
/// sum to one; a closed-world assignment puts nothing on `∅`.
#[derive(Debug, Clone, PartialEq)]
pub struct MassFunction {
    frame: Frame,
    masses: BTreeMap<SubsetKey, f64>,
    world: World,
}

impl MassFunction {
    /// Validates and builds a mass function.
    ///
    /// The sum is checked against 1 within [`TOLERANCE`] and then rescaled to
    /// exactly 1 so rounding in the input does not leak into later identities.
    pub fn new<I>(frame: Frame, world: World, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SubsetKey, f64)>,
    {
        let mut masses = BTreeMap::new();
        for (key, mass) in entries {
            frame.check(key)?;
            if !mass.is_finite() || mass < 0.0 {
                return Err(BeliefError::NegativeMass {
                    set: frame.format_subset(key),
                    mass,
                });
            }
            if masses.insert(key, mass).is_some() {
                return Err(BeliefError::DuplicateSet {
                    set: frame.format_subset(key),
                });
            }
        }
        let sum: f64 = masses.values().sum();
        if (sum - 1.0).abs() > TOLERANCE {
            return Err(BeliefError::MassSum { sum });
        }
        if world == World::Closed {
            if let Some(&m) = masses.get(&SubsetKey::EMPTY) {
                if m > 0.0 {
                    return Err(BeliefError::ClosedWorldEmptyMass { mass: m });
                }
            }
        }
        masses.retain(|_, m| *m > 0.0);
        for m in masses.values_mut() {
            *m /= sum;
        }
        Ok(MassFunction {
            frame,
            masses,
            world,
        })
    }

    /// Builds from a dense `2^n` table produced by an operation. Exact zeros
    /// are dropped; no validation or rescaling is applied.
    pub(crate) fn from_dense(frame: Frame, world: World, dense: &[f64]) -> Self {
        debug_assert_eq!(dense.len(), frame.subset_count());
        let masses = dense
            .iter()
            .enumerate()
            .filter(|(_, &m)| m != 0.0)
            .map(|(i, &m)| (SubsetKey::from_bits(i as u32), m))
            .collect();
        MassFunction {
            frame,
            masses,
            world,
        }
    }

    /// Mass 1 on `focal`.
    pub fn categorical(frame: Frame, focal: SubsetKey) -> Result<Self> {
        let world = if focal.is_empty() {
            World::Open
        } else {
            World::Closed
        };
        MassFunction::new(frame, world, [(focal, 1.0)])
    }

    /// Mass 1 on the whole frame: total ignorance.
    pub fn vacuous(frame: Frame) -> Self {
        let full = frame.full();
        MassFunction::new(frame, World::Closed, [(full, 1.0)]).expect("vacuous mass is valid")
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn world(&self) -> World {
        self.world
    }

    pub fn mass(&self, key: SubsetKey) -> f64 {
        self.masses.get(&key).copied().unwrap_or(0.0)
    }

    pub fn empty_mass(&self) -> f64 {
        self.mass(SubsetKey::EMPTY)
    }

    /// Focal sets and their masses in canonical order.
    pub fn focal(&self) -> impl Iterator<Item = (SubsetKey, f64)> + '_ {
        self.masses.iter().map(|(&k, &m)| (k, m))
    }

    pub fn focal_count(&self) -> usize {
        self.masses.len()
    }

    /// Dense `2^n` table indexed by [`SubsetKey::index`].
    pub fn dense(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.frame.subset_count()];
        for (k, m) in self.focal() {
            out[k.index()] = m;
        }
        out
    }

    pub fn total(&self) -> f64 {
        self.masses.values().sum()
    }

    /// Every focal set is a singleton.
    pub fn is_bayesian(&self) -> bool {
        self.masses.keys().all(|k| k.len() == 1)
    }

    /// Same masses, different world flag. Closing a function with mass on
    /// `∅` is rejected.
    pub fn with_world(&self, world: World) -> Result<Self> {
        if world == World::Closed && self.empty_mass() > 0.0 {
            return Err(BeliefError::ClosedWorldEmptyMass {
                mass: self.empty_mass(),
            });
        }
        Ok(MassFunction {
            world,
            ..self.clone()
        })
    }

    /// Largest componentwise difference against `other` over all subsets.
    pub fn max_abs_diff(&self, other: &MassFunction) -> f64 {
        self.masses
            .keys()
            .chain(other.masses.keys())
            .map(|&k| (self.mass(k) - other.mass(k)).abs())
            .fold(0.0, f64::max)
    }

    pub(crate) fn ensure_frame(&self, frame: &Frame) -> Result<()> {
        if &self.frame == frame {
            Ok(())
        } else {
            Err(BeliefError::FrameMismatch)
        }
    }
}

/// Divides every non-empty mass by `1 - m(∅)` and clears `∅`.
pub fn normalize(m: &MassFunction) -> Result<MassFunction> {
    let conflict = m.empty_mass();
    let keep = 1.0 - conflict;
    if keep <= TOLERANCE {
        return Err(BeliefError::TotalConflict { conflict });
    }
    if conflict == 0.0 && m.world == World::Closed {
        return Ok(m.clone());
    }
    let masses = m
        .focal()
        .filter(|(k, _)| !k.is_empty())
        .map(|(k, v)| (k, v / keep))
        .collect();
    Ok(MassFunction {
        frame: m.frame.clone(),
        masses,
        world: World::Closed,
    })
}

/// Frequency data: how many members of a population answered each set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomSetCounts {
    frame: Frame,
    counts: BTreeMap<SubsetKey, u64>,
    population: u64,
}

impl RandomSetCounts {
    pub fn new<I>(frame: Frame, counts: I, population: u64) -> Result<Self>
    where
        I: IntoIterator<Item = (SubsetKey, u64)>,
    {
        let mut map = BTreeMap::new();
        for (key, count) in counts {
            frame.check(key)?;
            if key.is_empty() {
                return Err(BeliefError::EmptySetCount);
            }
            if map.insert(key, count).is_some() {
                return Err(BeliefError::DuplicateSet {
                    set: frame.format_subset(key),
                });
            }
        }
        Ok(RandomSetCounts {
            frame,
            counts: map,
            population,
        })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn population(&self) -> u64 {
        self.population
    }

    pub fn count(&self, key: SubsetKey) -> u64 {
        self.counts.get(&key).copied().unwrap_or(0)
    }
}

/// Turns answer frequencies into proportions: `m(X) = count(X) / population`.
pub fn from_counts(data: &RandomSetCounts) -> Result<MassFunction> {
    if data.population == 0 {
        return Err(BeliefError::EmptyPopulation);
    }
    let sum: u64 = data.counts.values().sum();
    if sum != data.population {
        return Err(BeliefError::CountMismatch {
            sum,
            population: data.population,
        });
    }
    let pop = data.population as f64;
    MassFunction::new(
        data.frame.clone(),
        World::Closed,
        data.counts.iter().map(|(&k, &c)| (k, c as f64 / pop)),
    )
}

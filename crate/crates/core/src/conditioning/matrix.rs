//! Row-stochastic coefficient families over the power set.
//!
//! A [`SpecializationMatrix`] holds `c(B, X)` with mass flowing only from a
//! set to its subsets. A [`TransferMatrix`] holds `F(B | X)` with no such
//! restriction. Both store rows sparsely by source set; a source without an
//! explicit row keeps its mass (`c(X, X) = 1`).

use std::collections::BTreeMap;

use super::imaging::ClosestWorldMap;
use crate::error::{BeliefError, Result};
use crate::frame::{Frame, SubsetKey};
use crate::mass::{MassFunction, World};
use crate::TOLERANCE;

type Row = Vec<(SubsetKey, f64)>;

#[derive(Debug, Clone, PartialEq)]
struct StochasticRows {
    frame: Frame,
    rows: BTreeMap<SubsetKey, Row>,
}

impl StochasticRows {
    fn build<I>(frame: Frame, entries: I, subsets_only: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (SubsetKey, SubsetKey, f64)>,
    {
        let mut rows: BTreeMap<SubsetKey, BTreeMap<SubsetKey, f64>> = BTreeMap::new();
        for (from, to, coef) in entries {
            frame.check(from)?;
            frame.check(to)?;
            let describe = || {
                format!(
                    "entry {} -> {}",
                    frame.format_subset(from),
                    frame.format_subset(to)
                )
            };
            if !coef.is_finite() || coef < 0.0 {
                return Err(BeliefError::InvalidMatrix(format!(
                    "{}: coefficient {coef} is negative",
                    describe()
                )));
            }
            if subsets_only && !to.is_subset_of(from) && coef > 0.0 {
                return Err(BeliefError::InvalidMatrix(format!(
                    "{}: destination is not a subset of the source",
                    describe()
                )));
            }
            if rows.entry(from).or_default().insert(to, coef).is_some() {
                return Err(BeliefError::InvalidMatrix(format!("{} given twice", describe())));
            }
        }
        let mut out = BTreeMap::new();
        for (from, row) in rows {
            let sum: f64 = row.values().sum();
            if (sum - 1.0).abs() > TOLERANCE {
                return Err(BeliefError::InvalidMatrix(format!(
                    "row for source {} sums to {sum}",
                    frame.format_subset(from)
                )));
            }
            let row: Row = row
                .into_iter()
                .filter(|(_, c)| *c > 0.0)
                .map(|(to, c)| (to, c / sum))
                .collect();
            if row.as_slice() != [(from, 1.0)] {
                out.insert(from, row);
            }
        }
        Ok(StochasticRows { frame, rows: out })
    }

    fn row(&self, from: SubsetKey) -> &[(SubsetKey, f64)] {
        self.rows.get(&from).map(Vec::as_slice).unwrap_or(&[])
    }

    fn coefficient(&self, to: SubsetKey, from: SubsetKey) -> f64 {
        match self.rows.get(&from) {
            Some(row) => row
                .iter()
                .find(|(k, _)| *k == to)
                .map_or(0.0, |(_, c)| *c),
            None => f64::from(u8::from(to == from)),
        }
    }

    fn apply(&self, m: &MassFunction) -> Result<Vec<f64>> {
        m.ensure_frame(&self.frame)?;
        let mut out = vec![0.0; self.frame.subset_count()];
        for (from, mass) in m.focal() {
            match self.rows.get(&from) {
                Some(row) => {
                    for &(to, c) in row {
                        out[to.index()] += c * mass;
                    }
                }
                None => out[from.index()] += mass,
            }
        }
        Ok(out)
    }

    fn entries(&self) -> impl Iterator<Item = (SubsetKey, SubsetKey, f64)> + '_ {
        self.rows
            .iter()
            .flat_map(|(&from, row)| row.iter().map(move |&(to, c)| (from, to, c)))
    }
}

/// Coefficients `c(B, X) ≥ 0`, zero unless `B ⊆ X`, each row summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecializationMatrix(StochasticRows);

impl SpecializationMatrix {
    /// Builds from `(source X, destination B, c(B, X))` triples. Sources
    /// without entries keep their mass.
    pub fn new<I>(frame: Frame, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SubsetKey, SubsetKey, f64)>,
    {
        StochasticRows::build(frame, entries, true).map(SpecializationMatrix)
    }

    pub fn identity(frame: Frame) -> Self {
        SpecializationMatrix(StochasticRows {
            frame,
            rows: BTreeMap::new(),
        })
    }

    pub fn frame(&self) -> &Frame {
        &self.0.frame
    }

    /// `c(to, from)`.
    pub fn coefficient(&self, to: SubsetKey, from: SubsetKey) -> f64 {
        self.0.coefficient(to, from)
    }

    /// Explicit non-identity entries as `(from, to, coef)`.
    pub fn entries(&self) -> impl Iterator<Item = (SubsetKey, SubsetKey, f64)> + '_ {
        self.0.entries()
    }

    pub fn row(&self, from: SubsetKey) -> &[(SubsetKey, f64)] {
        self.0.row(from)
    }

    pub fn is_identity(&self) -> bool {
        self.0.rows.is_empty()
    }
}

/// Coefficients `F(B | X) ≥ 0`, each row summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct TransferMatrix(StochasticRows);

impl TransferMatrix {
    pub fn new<I>(frame: Frame, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SubsetKey, SubsetKey, f64)>,
    {
        StochasticRows::build(frame, entries, false).map(TransferMatrix)
    }

    pub fn identity(frame: Frame) -> Self {
        TransferMatrix(StochasticRows {
            frame,
            rows: BTreeMap::new(),
        })
    }

    pub fn frame(&self) -> &Frame {
        &self.0.frame
    }

    /// `F(to | from)`.
    pub fn coefficient(&self, to: SubsetKey, from: SubsetKey) -> f64 {
        self.0.coefficient(to, from)
    }

    pub fn entries(&self) -> impl Iterator<Item = (SubsetKey, SubsetKey, f64)> + '_ {
        self.0.entries()
    }

    pub fn row(&self, from: SubsetKey) -> &[(SubsetKey, f64)] {
        self.0.row(from)
    }

    pub fn is_identity(&self) -> bool {
        self.0.rows.is_empty()
    }

    /// Replaces the rows of the given sources, keeping every other row.
    pub fn with_rows<I>(&self, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SubsetKey, SubsetKey, f64)>,
    {
        let entries: Vec<_> = entries.into_iter().collect();
        let replacement = TransferMatrix::new(self.frame().clone(), entries.iter().copied())?;
        let mut rows = self.0.rows.clone();
        for (from, _, _) in &entries {
            rows.remove(from);
        }
        rows.extend(replacement.0.rows);
        Ok(TransferMatrix(StochasticRows {
            frame: self.frame().clone(),
            rows,
        }))
    }
}

impl From<SpecializationMatrix> for TransferMatrix {
    fn from(s: SpecializationMatrix) -> Self {
        TransferMatrix(s.0)
    }
}

/// `m*(B) = Σ_{X ⊇ B} c(B, X) m(X)`. The result is open-world: mass may
/// reach `∅`.
pub fn apply_specialization(m: &MassFunction, s: &SpecializationMatrix) -> Result<MassFunction> {
    let out = s.0.apply(m)?;
    Ok(MassFunction::from_dense(m.frame().clone(), World::Open, &out))
}

/// `m_A(B) = Σ_X F(B | X) m(X)`.
///
/// The result is closed-world when the input was and no mass reached `∅`.
pub fn image_general(m: &MassFunction, f: &TransferMatrix) -> Result<MassFunction> {
    let out = f.0.apply(m)?;
    let world = if m.world() == World::Closed && out[0] == 0.0 {
        World::Closed
    } else {
        World::Open
    };
    Ok(MassFunction::from_dense(m.frame().clone(), world, &out))
}

/// Conditioning rules that are specializations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalRule {
    /// Unnormalized Dempster: `c(B, B ∪ Y) = 1` for `B ⊆ A`, `Y ⊆ Ā`.
    Dempster,
    /// Unnormalized geometric: subsets of `A` stay, everything else goes to `∅`.
    Geometric,
}

pub fn canonical_specialization(
    rule: CanonicalRule,
    retained: SubsetKey,
    frame: &Frame,
) -> Result<SpecializationMatrix> {
    frame.check(retained)?;
    let entries = frame.subsets().map(|x| {
        let to = match rule {
            CanonicalRule::Dempster => x.intersection(retained),
            CanonicalRule::Geometric if x.is_subset_of(retained) => x,
            CanonicalRule::Geometric => SubsetKey::EMPTY,
        };
        (x, to, 1.0)
    });
    SpecializationMatrix::new(frame.clone(), entries)
}

/// Named rules expressible as a transfer matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum TransferRule {
    DempsterOpen,
    YagerKohlas,
    Specialization(SpecializationMatrix),
    /// Sets meeting `A` keep their part in `A`; a set inside `Ā` moves to
    /// the image of its worlds under the closest-world map.
    Closest(ClosestWorldMap),
}

pub fn transfer_matrix_for(
    rule: &TransferRule,
    retained: SubsetKey,
    frame: &Frame,
) -> Result<TransferMatrix> {
    frame.check(retained)?;
    let entries: Vec<(SubsetKey, SubsetKey, f64)> = match rule {
        TransferRule::DempsterOpen => frame
            .subsets()
            .map(|x| (x, x.intersection(retained), 1.0))
            .collect(),
        TransferRule::YagerKohlas => frame
            .subsets()
            .map(|x| {
                let kept = x.intersection(retained);
                (x, if kept.is_empty() { retained } else { kept }, 1.0)
            })
            .collect(),
        TransferRule::Specialization(s) => {
            if s.frame() != frame {
                return Err(BeliefError::FrameMismatch);
            }
            return Ok(s.clone().into());
        }
        TransferRule::Closest(map) => {
            if map.frame() != frame {
                return Err(BeliefError::FrameMismatch);
            }
            if map.retained() != retained {
                return Err(BeliefError::InvalidClosestMap(format!(
                    "map retains {}, conditioning retains {}",
                    frame.format_subset(map.retained()),
                    frame.format_subset(retained)
                )));
            }
            frame
                .subsets()
                .map(|x| {
                    let kept = x.intersection(retained);
                    let to = if kept.is_empty() { map.image_of(x) } else { kept };
                    (x, to, 1.0)
                })
                .collect()
        }
    };
    TransferMatrix::new(frame.clone(), entries)
}

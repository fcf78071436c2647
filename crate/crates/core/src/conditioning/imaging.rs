//! Probability imaging: each world's probability moves to its closest
//! surviving world.

use crate::error::{BeliefError, Result};
use crate::frame::{Frame, SubsetKey};
use crate::pignistic::Distribution;

/// `n(ω, A)`: for every world, the closest world inside the retained set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosestWorldMap {
    frame: Frame,
    retained: SubsetKey,
    target: Vec<usize>,
}

impl ClosestWorldMap {
    /// `moves` lists `(ω, n(ω, A))` for worlds outside `A`. Worlds inside
    /// `A` map to themselves and may be listed only that way.
    pub fn new<I>(frame: Frame, retained: SubsetKey, moves: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        frame.check(retained)?;
        let n = frame.len();
        let mut target: Vec<Option<usize>> = (0..n)
            .map(|i| retained.contains(i).then_some(i))
            .collect();
        for (from, to) in moves {
            if from >= n || to >= n {
                return Err(BeliefError::InvalidClosestMap(format!(
                    "index out of range ({from} -> {to})"
                )));
            }
            if !retained.contains(to) {
                return Err(BeliefError::InvalidClosestMap(format!(
                    "{} -> {}: target is not retained",
                    frame.label(from),
                    frame.label(to)
                )));
            }
            if retained.contains(from) {
                if from != to {
                    return Err(BeliefError::InvalidClosestMap(format!(
                        "{} is retained and must map to itself",
                        frame.label(from)
                    )));
                }
                continue;
            }
            if target[from].replace(to).is_some() {
                return Err(BeliefError::InvalidClosestMap(format!(
                    "{} is mapped twice",
                    frame.label(from)
                )));
            }
        }
        let target = target
            .into_iter()
            .enumerate()
            .map(|(i, t)| {
                t.ok_or_else(|| {
                    BeliefError::InvalidClosestMap(format!(
                        "no closest world given for {}",
                        frame.label(i)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ClosestWorldMap {
            frame,
            retained,
            target,
        })
    }

    /// Same as [`ClosestWorldMap::new`] with labels instead of indices.
    pub fn from_labels<S: AsRef<str>>(
        frame: Frame,
        retained: SubsetKey,
        moves: &[(S, S)],
    ) -> Result<Self> {
        let idx = |l: &S| {
            frame.index_of(l.as_ref()).ok_or_else(|| BeliefError::UnknownLabel {
                label: l.as_ref().to_string(),
            })
        };
        let moves = moves
            .iter()
            .map(|(a, b)| Ok((idx(a)?, idx(b)?)))
            .collect::<Result<Vec<_>>>()?;
        ClosestWorldMap::new(frame.clone(), retained, moves)
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn retained(&self) -> SubsetKey {
        self.retained
    }

    /// `n(ω, A)` for element index `world`.
    pub fn closest(&self, world: usize) -> usize {
        self.target[world]
    }

    /// `{n(ω, A) : ω ∈ set}`.
    pub fn image_of(&self, set: SubsetKey) -> SubsetKey {
        SubsetKey::from_indices(set.members().map(|i| self.target[i]))
    }

    /// Pairs `(ω, n(ω, A))` for the worlds that move.
    pub fn moves(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.target
            .iter()
            .enumerate()
            .filter(|(i, t)| *i != **t)
            .map(|(i, &t)| (i, t))
    }
}

/// `P_A(ω_i) = Σ_j F(ω_i | ω_j) P(ω_j)` with `F(ω_i | ω_j) = 1` iff
/// `ω_i = n(ω_j, A)`.
pub fn image_closest(p: &Distribution, map: &ClosestWorldMap) -> Result<Distribution> {
    if p.frame() != map.frame() {
        return Err(BeliefError::FrameMismatch);
    }
    let mut out = vec![0.0; p.frame().len()];
    for (j, &pj) in p.probabilities().iter().enumerate() {
        out[map.closest(j)] += pj;
    }
    Ok(Distribution::from_raw(p.frame().clone(), out))
}

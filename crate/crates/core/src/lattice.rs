//! Belief and plausibility tables via fast transforms on the subset lattice.
//!
//! Tables are dense slices of length `2^n` indexed by subset bitmask. The
//! subset-sum (zeta) transform and its inverse run in `O(n 2^n)`.

use crate::error::{BeliefError, Result};
use crate::frame::{Frame, SubsetKey};
use crate::mass::{MassFunction, World};
use crate::TOLERANCE;

/// In place: `xs[A] <- Σ_{B ⊆ A} xs[B]`.
pub fn subset_sums(xs: &mut [f64]) {
    let len = xs.len();
    debug_assert!(len.is_power_of_two());
    let mut bit = 1;
    while bit < len {
        for a in 0..len {
            if a & bit != 0 {
                xs[a] += xs[a ^ bit];
            }
        }
        bit <<= 1;
    }
}

/// Inverse of [`subset_sums`] (Möbius inversion).
pub fn inverse_subset_sums(xs: &mut [f64]) {
    let len = xs.len();
    debug_assert!(len.is_power_of_two());
    let mut bit = 1;
    while bit < len {
        for a in 0..len {
            if a & bit != 0 {
                xs[a] -= xs[a ^ bit];
            }
        }
        bit <<= 1;
    }
}

/// Paired belief and plausibility tables of one mass function.
#[derive(Debug, Clone, PartialEq)]
pub struct BeliefView {
    frame: Frame,
    bel: Vec<f64>,
    pl: Vec<f64>,
}

impl BeliefView {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn bel(&self, key: SubsetKey) -> f64 {
        self.bel[key.index()]
    }

    pub fn pl(&self, key: SubsetKey) -> f64 {
        self.pl[key.index()]
    }

    /// Dense belief table.
    pub fn bel_table(&self) -> &[f64] {
        &self.bel
    }

    pub fn pl_table(&self) -> &[f64] {
        &self.pl
    }
}

/// `bel(A) = Σ_{∅≠B⊆A} m(B)` and `pl(A) = Σ_{B∩A≠∅} m(B)` for every `A`.
///
/// `bel` never counts `m(∅)`, so `bel(Ω) = 1 - m(∅)` and
/// `pl(A) = bel(Ω) - bel(Ā)`.
pub fn belief(m: &MassFunction) -> BeliefView {
    let frame = m.frame().clone();
    let mut bel = m.dense();
    bel[0] = 0.0;
    subset_sums(&mut bel);
    let full = frame.full();
    let bel_full = bel[full.index()];
    let pl = frame
        .subsets()
        .map(|a| bel_full - bel[frame.complement(a).index()])
        .collect();
    BeliefView { frame, bel, pl }
}

/// Recovers masses from a dense belief table by Möbius inversion.
///
/// Any shortfall `1 - bel(Ω)` becomes mass on `∅`; the result is open-world
/// when that mass is non-zero. Recovered masses below `-1e-9` mean the table
/// is not a belief function; smaller negative noise is clamped to zero.
pub fn masses_from_belief(frame: &Frame, bel: &[f64]) -> Result<MassFunction> {
    if bel.len() != frame.subset_count() {
        return Err(BeliefError::InvalidBelief(format!(
            "expected {} values, got {}",
            frame.subset_count(),
            bel.len()
        )));
    }
    if bel[0].abs() > TOLERANCE {
        return Err(BeliefError::InvalidBelief(format!(
            "bel(∅) = {} must be 0",
            bel[0]
        )));
    }
    if let Some(v) = bel
        .iter()
        .find(|v| !v.is_finite() || **v < -TOLERANCE || **v > 1.0 + TOLERANCE)
    {
        return Err(BeliefError::InvalidBelief(format!(
            "value {v} outside [0, 1]"
        )));
    }
    let mut masses = bel.to_vec();
    masses[0] = 0.0;
    inverse_subset_sums(&mut masses);
    for (i, m) in masses.iter_mut().enumerate() {
        if *m < -TOLERANCE {
            return Err(BeliefError::NotBelief {
                set: frame.format_subset(SubsetKey::from_bits(i as u32)),
                mass: *m,
            });
        }
        if *m < 0.0 {
            *m = 0.0;
        }
    }
    let shortfall = 1.0 - bel[frame.full().index()];
    let world = if shortfall > TOLERANCE {
        masses[0] = shortfall;
        World::Open
    } else {
        World::Closed
    };
    Ok(MassFunction::from_dense(frame.clone(), world, &masses))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn voting_bounds_match_table() {
        let m = fixtures::voting_masses();
        let f = m.frame().clone();
        let view = belief(&m);
        let ab = f.parse_subset("a,b").unwrap();
        let c = f.parse_subset("c").unwrap();
        assert!(close(view.bel(ab), 0.13));
        assert!(close(view.pl(ab), 0.78));
        assert!(close(view.bel(c), 0.0));
        assert!(close(view.pl(c), 0.65));
    }

    #[test]
    fn endpoints() {
        let f = Frame::new(["x", "y"]).unwrap();
        let m = MassFunction::new(
            f.clone(),
            World::Open,
            [(SubsetKey::EMPTY, 0.3), (f.full(), 0.7)],
        )
        .unwrap();
        let view = belief(&m);
        assert_eq!(view.bel(SubsetKey::EMPTY), 0.0);
        assert!(close(view.pl(f.full()), 0.7));
        assert!(close(view.bel(f.full()), 0.7));
    }

    #[test]
    fn vacuous_belief_inverts_to_vacuous_mass() {
        let f = Frame::new(["a", "b", "c"]).unwrap();
        let mut bel = vec![0.0; 8];
        bel[7] = 1.0;
        let m = masses_from_belief(&f, &bel).unwrap();
        assert_eq!(m.focal_count(), 1);
        assert_eq!(m.mass(f.full()), 1.0);
        assert_eq!(m.world(), World::Closed);
    }

    #[test]
    fn additive_belief_inverts_to_singletons() {
        let f = Frame::new(["a", "b", "c"]).unwrap();
        let p = [0.2, 0.5, 0.3];
        let bel: Vec<f64> = f
            .subsets()
            .map(|k| k.members().map(|i| p[i]).sum())
            .collect();
        let m = masses_from_belief(&f, &bel).unwrap();
        assert!(m.is_bayesian());
        for (i, &pi) in p.iter().enumerate() {
            assert!(close(m.mass(SubsetKey::singleton(i)), pi));
        }
    }

    #[test]
    fn roundtrip_voting() {
        let m = fixtures::voting_masses();
        let view = belief(&m);
        let back = masses_from_belief(m.frame(), view.bel_table()).unwrap();
        assert!(back.max_abs_diff(&m) < 1e-12);
    }

    #[test]
    fn non_belief_table_is_rejected() {
        let f = Frame::new(["a", "b"]).unwrap();
        // bel({a}) + bel({b}) > bel(Ω) forces negative mass on Ω
        let bel = [0.0, 0.6, 0.6, 1.0];
        assert!(matches!(
            masses_from_belief(&f, &bel),
            Err(BeliefError::NotBelief { .. })
        ));
        assert!(masses_from_belief(&f, &[0.1, 0.6, 0.6, 1.0]).is_err());
        assert!(masses_from_belief(&f, &[0.0, 1.0]).is_err());
    }
}

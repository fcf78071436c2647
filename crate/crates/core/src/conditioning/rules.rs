//! Dempster (open and closed world), Yager–Kohlas and geometric conditioning.

use super::ConditioningOutcome;
use crate::error::{BeliefError, Result};
use crate::frame::SubsetKey;
use crate::lattice::belief;
use crate::mass::{normalize, MassFunction, World};
use crate::TOLERANCE;

/// Moves every focal mass `m(X)` to `X ∩ A`. Always applicable; whatever
/// lands on `∅` (that is `m(∅) + bel(Ā)`) is reported as conflict.
pub fn condition_open(m: &MassFunction, retained: SubsetKey) -> Result<ConditioningOutcome> {
    let frame = m.frame();
    frame.check(retained)?;
    let mut out = vec![0.0; frame.subset_count()];
    for (set, mass) in m.focal() {
        out[set.intersection(retained).index()] += mass;
    }
    let conflict = out[0];
    Ok(ConditioningOutcome {
        result: MassFunction::from_dense(frame.clone(), World::Open, &out),
        conflict,
        normalization: 1.0,
    })
}

/// Dempster's rule: [`condition_open`] followed by normalization by `1/pl(A)`.
pub fn condition_closed(m: &MassFunction, retained: SubsetKey) -> Result<ConditioningOutcome> {
    let open = condition_open(m, retained)?;
    let pl = 1.0 - open.conflict;
    if pl <= TOLERANCE {
        return Err(BeliefError::NoSolution(format!(
            "pl({}) = 0, nothing to normalize",
            m.frame().format_subset(retained)
        )));
    }
    Ok(ConditioningOutcome {
        result: normalize(&open.result)?,
        conflict: open.conflict,
        normalization: 1.0 / pl,
    })
}

/// Transfers as [`condition_open`] but gives the would-be conflict `bel(Ā)`
/// to `A` itself. Only defined for normalized input.
pub fn condition_yager_kohlas(
    m: &MassFunction,
    retained: SubsetKey,
) -> Result<ConditioningOutcome> {
    let empty = m.empty_mass();
    if empty > 0.0 {
        return Err(BeliefError::NotNormalized { mass: empty });
    }
    if retained.is_empty() {
        return Err(BeliefError::NoSolution(
            "cannot reallocate conflict to the empty set".into(),
        ));
    }
    let open = condition_open(m, retained)?;
    let mut out = open.result.dense();
    let conflict = out[0];
    out[0] = 0.0;
    out[retained.index()] += conflict;
    Ok(ConditioningOutcome {
        result: MassFunction::from_dense(m.frame().clone(), World::Closed, &out),
        conflict,
        normalization: 1.0,
    })
}

/// Keeps only masses of non-empty subsets of `A`.
///
/// Closed world rescales them by `1/bel(A)`; open world leaves them as they
/// are and puts the discarded `1 - bel(A)` on `∅`.
pub fn condition_geometric(
    m: &MassFunction,
    retained: SubsetKey,
    world: World,
) -> Result<ConditioningOutcome> {
    let frame = m.frame();
    frame.check(retained)?;
    let bel_a = belief(m).bel(retained);
    let mut out = vec![0.0; frame.subset_count()];
    for (set, mass) in m.focal() {
        if !set.is_empty() && set.is_subset_of(retained) {
            out[set.index()] = mass;
        }
    }
    let discarded = 1.0 - bel_a;
    match world {
        World::Open => {
            out[0] = discarded;
            Ok(ConditioningOutcome {
                result: MassFunction::from_dense(frame.clone(), World::Open, &out),
                conflict: discarded,
                normalization: 1.0,
            })
        }
        World::Closed => {
            if bel_a <= TOLERANCE {
                return Err(BeliefError::NoSolution(format!(
                    "bel({}) = 0, nothing left to rescale",
                    frame.format_subset(retained)
                )));
            }
            for v in &mut out {
                *v /= bel_a;
            }
            Ok(ConditioningOutcome {
                result: MassFunction::from_dense(frame.clone(), World::Closed, &out),
                conflict: discarded,
                normalization: 1.0 / bel_a,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::frame::Frame;

    fn set(s: &str) -> SubsetKey {
        fixtures::voting_frame().parse_subset(s).unwrap()
    }

    fn assert_masses(m: &MassFunction, expect: &[(&str, f64)]) {
        assert_eq!(m.focal_count(), expect.len(), "{m:?}");
        for &(s, v) in expect {
            assert!((m.mass(set(s)) - v).abs() < 1e-12, "{s}: {} vs {v}", m.mass(set(s)));
        }
    }

    #[test]
    fn open_conditioning_on_survivors() {
        let out = condition_open(&fixtures::voting_masses(), set("c,d,e")).unwrap();
        assert_masses(
            &out.result,
            &[("∅", 0.13), ("c", 0.15), ("c,d", 0.50), ("d,e", 0.22)],
        );
        assert!((out.conflict - 0.13).abs() < 1e-12);
        let view = belief(&out.result);
        assert!((view.pl(set("c")) - 0.65).abs() < 1e-12);
        assert!((view.bel(set("c")) - 0.15).abs() < 1e-12);
    }

    #[test]
    fn open_conditioning_on_the_frame_is_identity() {
        let m = fixtures::voting_masses();
        let out = condition_open(&m, m.frame().full()).unwrap();
        assert!(out.result.max_abs_diff(&m) == 0.0);
        assert_eq!(out.conflict, 0.0);
    }

    #[test]
    fn open_conditioning_on_empty_set_is_total_conflict() {
        let out = condition_open(&fixtures::voting_masses(), SubsetKey::EMPTY).unwrap();
        assert_eq!(out.result.empty_mass(), 1.0);
    }

    #[test]
    fn closed_conditioning_normalizes_by_plausibility() {
        let out = condition_closed(&fixtures::voting_masses(), set("c,d,e")).unwrap();
        let view = belief(&out.result);
        assert!((view.bel(set("c")) - 15.0 / 87.0).abs() < 1e-12);
        assert!((view.pl(set("c")) - 65.0 / 87.0).abs() < 1e-12);
        assert!((out.normalization - 1.0 / 0.87).abs() < 1e-12);
        assert_masses(
            &out.result,
            &[("c", 15.0 / 87.0), ("c,d", 50.0 / 87.0), ("d,e", 22.0 / 87.0)],
        );
    }

    #[test]
    fn closed_conditioning_on_e() {
        let out = condition_closed(&fixtures::voting_masses(), set("e")).unwrap();
        assert!((belief(&out.result).bel(set("e")) - 1.0).abs() < 1e-12);
        assert!((out.normalization - 1.0 / 0.22).abs() < 1e-9);
    }

    #[test]
    fn closed_conditioning_reduces_to_bayes() {
        let f = fixtures::voting_frame();
        let m = MassFunction::new(f.clone(), World::Closed, (0..5).map(|i| (SubsetKey::singleton(i), 0.2)))
            .unwrap();
        let out = condition_closed(&m, set("c,d")).unwrap();
        assert!((out.result.mass(set("c")) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn closed_conditioning_without_plausibility_fails() {
        let f = Frame::new(["a", "b"]).unwrap();
        let m = MassFunction::categorical(f, SubsetKey::singleton(0)).unwrap();
        assert!(matches!(
            condition_closed(&m, SubsetKey::singleton(1)),
            Err(BeliefError::NoSolution(_))
        ));
        assert!(condition_closed(&m, SubsetKey::EMPTY).is_err());
    }

    #[test]
    fn yager_kohlas_reallocates_to_retained_set() {
        let out = condition_yager_kohlas(&fixtures::voting_masses(), set("c,d,e")).unwrap();
        assert_masses(
            &out.result,
            &[("c", 0.15), ("c,d", 0.50), ("d,e", 0.22), ("c,d,e", 0.13)],
        );
        let view = belief(&out.result);
        assert!((view.pl(set("d")) - 0.85).abs() < 1e-12);
        assert!((view.pl(set("c")) - 0.78).abs() < 1e-12);
        assert_eq!(out.result.world(), World::Closed);
    }

    #[test]
    fn yager_kohlas_without_conflict_matches_open() {
        let m = fixtures::voting_masses();
        let a = set("a,b,c,d");
        let yk = condition_yager_kohlas(&m, set("a,b,c,d,e")).unwrap();
        assert!(yk.result.max_abs_diff(&m) == 0.0);
        // {d,e} meets {a,b,c,d}, so nothing is conflicting here either
        let yk = condition_yager_kohlas(&m, a).unwrap();
        let open = condition_open(&m, a).unwrap();
        assert_eq!(yk.conflict, 0.0);
        assert!(yk.result.max_abs_diff(&open.result) == 0.0);
    }

    #[test]
    fn yager_kohlas_rejects_open_world_input() {
        let open = condition_open(&fixtures::voting_masses(), set("c,d,e")).unwrap();
        assert!(matches!(
            condition_yager_kohlas(&open.result, set("c,d")),
            Err(BeliefError::NotNormalized { .. })
        ));
        assert!(condition_yager_kohlas(&fixtures::voting_masses(), SubsetKey::EMPTY).is_err());
    }

    #[test]
    fn geometric_closed_and_open() {
        let m = fixtures::voting_masses();
        let closed = condition_geometric(&m, set("c,d,e"), World::Closed).unwrap();
        assert_masses(&closed.result, &[("d,e", 1.0)]);
        let open = condition_geometric(&m, set("c,d,e"), World::Open).unwrap();
        assert_masses(&open.result, &[("d,e", 0.22), ("∅", 0.78)]);
        assert!((open.conflict - 0.78).abs() < 1e-12);
    }

    #[test]
    fn geometric_is_identity_inside_support() {
        let m = fixtures::voting_masses();
        let out = condition_geometric(&m, set("a,b,c,d"), World::Closed).unwrap();
        let expected = condition_geometric(&m, m.frame().full(), World::Closed).unwrap();
        assert!(expected.result.max_abs_diff(&m) < 1e-15);
        assert!(out.normalization > 1.0);
    }

    #[test]
    fn geometric_closed_needs_belief() {
        let m = fixtures::voting_masses();
        assert!(matches!(
            condition_geometric(&m, set("c"), World::Closed),
            Err(BeliefError::NoSolution(_))
        ));
        assert!(condition_geometric(&m, set("c"), World::Open).is_ok());
    }
}

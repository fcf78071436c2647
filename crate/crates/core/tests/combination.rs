mod common;

use belief_core::{condition_open, conjunctive, MassFunction, SubsetKey, World};
use common::{random_mass_on, rng};
use rand::Rng;

#[test]
fn conjunctive_is_commutative_and_associative() {
    let mut r = rng(30);
    for _ in 0..300 {
        let f = common::frame(r.random_range(1..=4));
        let m1 = random_mass_on(&mut r, &f, World::Open);
        let m2 = random_mass_on(&mut r, &f, World::Closed);
        let m3 = random_mass_on(&mut r, &f, World::Closed);
        let ab = conjunctive(&m1, &m2).unwrap();
        assert!(ab.max_abs_diff(&conjunctive(&m2, &m1).unwrap()) < 1e-12);
        let left = conjunctive(&ab, &m3).unwrap();
        let right = conjunctive(&m1, &conjunctive(&m2, &m3).unwrap()).unwrap();
        assert!(left.max_abs_diff(&right) < 1e-12);
        assert!((left.total() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn combination_is_a_specialization_by_conditionals() {
    let mut r = rng(31);
    for _ in 0..300 {
        let f = common::frame(r.random_range(1..=4));
        let m1 = random_mass_on(&mut r, &f, World::Closed);
        let m2 = random_mass_on(&mut r, &f, World::Closed);
        let joint = conjunctive(&m1, &m2).unwrap();
        let mut via = vec![0.0; f.subset_count()];
        for (z, mz) in m2.focal() {
            let cond = condition_open(&m1, z).unwrap().result;
            for (x, mx) in cond.focal() {
                via[x.index()] += mx * mz;
            }
        }
        for x in f.subsets() {
            assert!((joint.mass(x) - via[x.index()]).abs() < 1e-12);
        }
    }
}

#[test]
fn combining_with_a_categorical_mass_is_open_conditioning() {
    let mut r = rng(32);
    for _ in 0..300 {
        let f = common::frame(r.random_range(1..=4));
        let m = random_mass_on(&mut r, &f, World::Open);
        let a = SubsetKey::from_bits(r.random_range(1..f.subset_count() as u32));
        let cat = MassFunction::categorical(f.clone(), a).unwrap();
        let via = conjunctive(&cat, &m).unwrap();
        let direct = condition_open(&m, a).unwrap().result;
        assert!(via.max_abs_diff(&direct) < 1e-12);
    }
}

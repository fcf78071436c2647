//! Random instances and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use belief_core::{Frame, MassFunction, SubsetKey, World};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_be11;

pub fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ stream)
}

pub fn frame(n: usize) -> Frame {
    Frame::new((0..n).map(|i| format!("w{i}"))).unwrap()
}

/// Random mass function on a frame of 1..=4 elements with 1..=6 focal sets.
/// Open-world instances may put mass on the empty set.
pub fn random_mass(rng: &mut impl Rng, world: World) -> MassFunction {
    let n = rng.random_range(1..=4);
    random_mass_on(rng, &frame(n), world)
}

pub fn random_mass_on(rng: &mut impl Rng, frame: &Frame, world: World) -> MassFunction {
    let count = frame.subset_count();
    let lo = if world == World::Open { 0 } else { 1 };
    let focal = rng.random_range(1..=6usize.min(count - lo));
    let mut sets: Vec<u32> = Vec::new();
    while sets.len() < focal {
        let s = rng.random_range(lo as u32..count as u32);
        if !sets.contains(&s) {
            sets.push(s);
        }
    }
    let weights: Vec<f64> = sets.iter().map(|_| rng.random_range(0.05..1.0)).collect();
    let total: f64 = weights.iter().sum();
    MassFunction::new(
        frame.clone(),
        world,
        sets.into_iter()
            .zip(weights)
            .map(|(s, w)| (SubsetKey::from_bits(s), w / total)),
    )
    .unwrap()
}

pub fn random_subset(rng: &mut impl Rng, frame: &Frame) -> SubsetKey {
    SubsetKey::from_bits(rng.random_range(0..frame.subset_count() as u32))
}

/// `bel(A) = Σ_{∅≠B⊆A} m(B)` by a double loop over all pairs of subsets.
pub fn naive_bel(m: &MassFunction, a: SubsetKey) -> f64 {
    m.frame()
        .subsets()
        .filter(|b| !b.is_empty() && b.is_subset_of(a))
        .map(|b| m.mass(b))
        .sum()
}

/// `pl(A) = Σ_{B∩A≠∅} m(B)` by a loop over all subsets.
pub fn naive_pl(m: &MassFunction, a: SubsetKey) -> f64 {
    m.frame()
        .subsets()
        .filter(|b| b.intersects(a))
        .map(|b| m.mass(b))
        .sum()
}

/// Inverse Möbius transform by the O(4^n) alternating sum.
pub fn naive_mobius(frame: &Frame, bel: &[f64]) -> Vec<f64> {
    frame
        .subsets()
        .map(|a| {
            frame
                .subsets()
                .filter(|b| b.is_subset_of(a))
                .map(|b| {
                    let sign = if (a.len() - b.len()) % 2 == 0 { 1.0 } else { -1.0 };
                    sign * bel[b.index()]
                })
                .sum()
        })
        .collect()
}

//! The voting-intentions data set and the reallocation scenarios built on it.
//!
//! 100 voters over candidates `a..e` name the set they will pick from; later
//! `a` and `b` drop out, leaving `{c,d,e}`.

use crate::conditioning::{
    transfer_matrix_for, ClosestWorldMap, SpecializationMatrix, TransferMatrix, TransferRule,
};
use crate::frame::{Frame, SubsetKey};
use crate::mass::{from_counts, MassFunction, RandomSetCounts};

pub const VOTERS: u64 = 100;

/// `(answered set, voters)`.
pub const VOTING_ANSWERS: [(&str, u64); 6] = [
    ("a", 5),
    ("a,b", 8),
    ("a,b,c", 15),
    ("b,c,d", 21),
    ("a,b,c,d", 29),
    ("d,e", 22),
];

pub fn voting_frame() -> Frame {
    Frame::new(["a", "b", "c", "d", "e"]).expect("static frame")
}

fn key(frame: &Frame, literal: &str) -> SubsetKey {
    frame.parse_subset(literal).expect("static literal")
}

pub fn voting_counts() -> RandomSetCounts {
    let f = voting_frame();
    let counts: Vec<_> = VOTING_ANSWERS
        .iter()
        .map(|&(s, c)| (key(&f, s), c))
        .collect();
    RandomSetCounts::new(f, counts, VOTERS).expect("static counts")
}

pub fn voting_masses() -> MassFunction {
    from_counts(&voting_counts()).expect("static counts")
}

/// The set of surviving candidates, `{c,d,e}`.
pub fn survivors() -> SubsetKey {
    key(&voting_frame(), "c,d,e")
}

/// Known political splits among the survivors. `{a}` and `{a,b}` have no
/// survivor and go blank.
pub fn specialization_scenario() -> SpecializationMatrix {
    let f = voting_frame();
    let third = 1.0 / 3.0;
    let entries = [
        ("a", "∅", 1.0),
        ("a,b", "∅", 1.0),
        ("a,b,c", "c", 1.0),
        ("b,c,d", "c", third),
        ("b,c,d", "d", third),
        ("b,c,d", "c,d", third),
        ("a,b,c,d", "d", 0.5),
        ("a,b,c,d", "c,d", 0.5),
        ("d,e", "d", 0.5),
        ("d,e", "e", 0.5),
    ]
    .map(|(from, to, c)| (key(&f, from), key(&f, to), c));
    SpecializationMatrix::new(f, entries).expect("static matrix")
}

/// `a` and `b` are closest to `c`.
pub fn closest_map() -> ClosestWorldMap {
    ClosestWorldMap::from_labels(voting_frame(), survivors(), &[("a", "c"), ("b", "c")])
        .expect("static map")
}

/// Reallocation of the voters left without a candidate, at three levels of
/// detail. Sets meeting `{c,d,e}` keep their surviving part.
///
/// * `1`: everyone goes to `{c}`.
/// * `2`: 40% to `{c}`, 60% to `{c,d}`.
/// * `3`: `{a}` splits 40/60 over `{c}`/`{c,d}`; `{a,b}` splits
///   50/25/25 over `{c}`/`{c,d}`/`{c,e}`.
///
/// # Panics
/// On any level other than 1, 2 or 3.
pub fn imaging_scenario(level: u8) -> TransferMatrix {
    let f = voting_frame();
    let base = transfer_matrix_for(&TransferRule::DempsterOpen, survivors(), &f)
        .expect("static rule");
    let rows: &[(&str, &str, f64)] = match level {
        1 => &[("a", "c", 1.0), ("a,b", "c", 1.0)],
        2 => &[
            ("a", "c", 0.4),
            ("a", "c,d", 0.6),
            ("a,b", "c", 0.4),
            ("a,b", "c,d", 0.6),
        ],
        3 => &[
            ("a", "c", 0.4),
            ("a", "c,d", 0.6),
            ("a,b", "c", 0.5),
            ("a,b", "c,d", 0.25),
            ("a,b", "c,e", 0.25),
        ],
        _ => panic!("imaging scenario level must be 1, 2 or 3"),
    };
    base.with_rows(
        rows.iter()
            .map(|&(from, to, c)| (key(&f, from), key(&f, to), c)),
    )
    .expect("static matrix")
}

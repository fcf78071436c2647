//! Frames of discernment and the bitmask encoding of their subsets.

use std::fmt;
use std::sync::Arc;

use crate::error::{BeliefError, Result};

/// Largest supported frame. Dense tables hold `2^n` entries.
pub const MAX_FRAME_SIZE: usize = 16;

/// A subset of a frame, encoded as a bitmask over element indices.
///
/// Bit `i` is set iff element `i` of the owning frame is a member. The
/// derived ordering is the canonical order used for iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetKey(u32);

impl SubsetKey {
    pub const EMPTY: SubsetKey = SubsetKey(0);

    pub const fn from_bits(bits: u32) -> Self {
        SubsetKey(bits)
    }

    pub fn singleton(index: usize) -> Self {
        SubsetKey(1 << index)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        SubsetKey(indices.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// Position of this subset in a dense `2^n` table.
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, index: usize) -> bool {
        self.0 & (1 << index) != 0
    }

    pub const fn is_subset_of(self, other: SubsetKey) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn intersects(self, other: SubsetKey) -> bool {
        self.0 & other.0 != 0
    }

    pub const fn union(self, other: SubsetKey) -> SubsetKey {
        SubsetKey(self.0 | other.0)
    }

    pub const fn intersection(self, other: SubsetKey) -> SubsetKey {
        SubsetKey(self.0 & other.0)
    }

    pub const fn difference(self, other: SubsetKey) -> SubsetKey {
        SubsetKey(self.0 & !other.0)
    }

    /// Member indices in increasing order.
    pub fn members(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits & (1 << i) != 0)
    }

    /// All subsets of `self`, in canonical order, including `∅` and `self`.
    pub fn subsets(self) -> impl Iterator<Item = SubsetKey> {
        let full = self.0;
        // Standard submask enumeration, reversed to ascending order.
        let mut out = Vec::with_capacity(1 << full.count_ones());
        let mut sub = full;
        loop {
            out.push(SubsetKey(sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & full;
        }
        out.into_iter().rev()
    }

    /// Sort key placing smaller sets first, ties broken canonically.
    pub fn display_order(self) -> (usize, u32) {
        (self.len(), self.0)
    }
}

impl fmt::Display for SubsetKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.members().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// An ordered list of distinct, non-empty labels.
///
/// Cloning is cheap; the labels are shared.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    labels: Arc<[String]>,
}

impl Frame {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() || labels.len() > MAX_FRAME_SIZE {
            return Err(BeliefError::FrameSize {
                got: labels.len(),
                max: MAX_FRAME_SIZE,
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if label.trim().is_empty() {
                return Err(BeliefError::EmptyLabel { index: i });
            }
            if labels[..i].contains(label) {
                return Err(BeliefError::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        Ok(Frame {
            labels: labels.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Number of subsets, `2^n`.
    pub fn subset_count(&self) -> usize {
        1 << self.len()
    }

    /// The whole frame, Ω.
    pub fn full(&self) -> SubsetKey {
        SubsetKey::from_bits(((1u64 << self.len()) - 1) as u32)
    }

    pub fn complement(&self, key: SubsetKey) -> SubsetKey {
        self.full().difference(key)
    }

    pub fn check(&self, key: SubsetKey) -> Result<SubsetKey> {
        if key.is_subset_of(self.full()) {
            Ok(key)
        } else {
            Err(BeliefError::SubsetOutOfFrame {
                bits: key.bits(),
                n: self.len(),
            })
        }
    }

    /// Every subset of the frame in canonical order.
    pub fn subsets(&self) -> impl Iterator<Item = SubsetKey> {
        (0..self.subset_count() as u32).map(SubsetKey::from_bits)
    }

    /// Every subset sorted by cardinality, then canonically.
    pub fn subsets_by_size(&self) -> Vec<SubsetKey> {
        let mut all: Vec<SubsetKey> = self.subsets().collect();
        all.sort_by_key(|k| k.display_order());
        all
    }

    pub fn singleton(&self, label: &str) -> Result<SubsetKey> {
        self.index_of(label)
            .map(SubsetKey::singleton)
            .ok_or_else(|| BeliefError::UnknownLabel {
                label: label.to_string(),
            })
    }

    /// Builds a subset from labels. Repeated labels are rejected.
    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<SubsetKey> {
        let mut key = SubsetKey::EMPTY;
        for label in labels {
            let one = self.singleton(label.as_ref())?;
            if key.intersects(one) {
                return Err(BeliefError::DuplicateLabel {
                    label: label.as_ref().to_string(),
                });
            }
            key = key.union(one);
        }
        Ok(key)
    }

    /// Parses a comma-separated literal such as `c,d,e`. `∅`, `{}` and the
    /// empty string denote the empty set; surrounding braces are optional.
    pub fn parse_subset(&self, literal: &str) -> Result<SubsetKey> {
        let trimmed = literal.trim();
        let inner = trimmed
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .unwrap_or(trimmed)
            .trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(SubsetKey::EMPTY);
        }
        let labels: Vec<&str> = inner.split(',').map(str::trim).collect();
        self.subset(&labels)
    }

    pub fn subset_labels(&self, key: SubsetKey) -> Vec<String> {
        key.members().map(|i| self.labels[i].clone()).collect()
    }

    /// Renders `{c,d}`; the empty set renders as `∅`.
    pub fn format_subset(&self, key: SubsetKey) -> String {
        if key.is_empty() {
            return "∅".to_string();
        }
        let names: Vec<&str> = key.members().map(|i| self.label(i)).collect();
        format!("{{{}}}", names.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abcde() -> Frame {
        Frame::new(["a", "b", "c", "d", "e"]).unwrap()
    }

    #[test]
    fn rejects_bad_frames() {
        assert!(matches!(
            Frame::new(Vec::<String>::new()),
            Err(BeliefError::FrameSize { got: 0, .. })
        ));
        let big: Vec<String> = (0..17).map(|i| format!("w{i}")).collect();
        assert!(matches!(Frame::new(big), Err(BeliefError::FrameSize { got: 17, .. })));
        assert!(matches!(
            Frame::new(["a", "a"]),
            Err(BeliefError::DuplicateLabel { .. })
        ));
        assert!(matches!(Frame::new(["a", " "]), Err(BeliefError::EmptyLabel { index: 1 })));
        let sixteen: Vec<String> = (0..16).map(|i| format!("w{i}")).collect();
        assert_eq!(Frame::new(sixteen).unwrap().full().bits(), 0xffff);
    }

    #[test]
    fn complement_is_an_involution() {
        let f = abcde();
        for k in f.subsets() {
            assert_eq!(f.complement(f.complement(k)), k);
            assert!(!f.complement(k).intersects(k));
        }
    }

    #[test]
    fn parses_and_formats_literals() {
        let f = abcde();
        let cde = f.parse_subset("c,d,e").unwrap();
        assert_eq!(f.format_subset(cde), "{c,d,e}");
        assert_eq!(f.parse_subset("{ c , d ,e }").unwrap(), cde);
        assert_eq!(f.parse_subset("∅").unwrap(), SubsetKey::EMPTY);
        assert_eq!(f.parse_subset("").unwrap(), SubsetKey::EMPTY);
        assert!(matches!(f.parse_subset("c,z"), Err(BeliefError::UnknownLabel { .. })));
        assert!(matches!(f.parse_subset("c,c"), Err(BeliefError::DuplicateLabel { .. })));
        assert_eq!(f.format_subset(SubsetKey::EMPTY), "∅");
    }

    #[test]
    fn submask_enumeration_is_ascending_and_complete() {
        let k = SubsetKey::from_bits(0b10110);
        let subs: Vec<u32> = k.subsets().map(|s| s.bits()).collect();
        assert_eq!(subs, vec![0, 2, 4, 6, 16, 18, 20, 22]);
    }

    #[test]
    fn display_order_sorts_by_size_first() {
        let f = Frame::new(["a", "b", "c"]).unwrap();
        let order: Vec<String> = f
            .subsets_by_size()
            .into_iter()
            .map(|k| f.format_subset(k))
            .collect();
        assert_eq!(
            order,
            ["∅", "{a}", "{b}", "{c}", "{a,b}", "{a,c}", "{b,c}", "{a,b,c}"]
        );
    }

    #[test]
    fn check_rejects_foreign_bits() {
        let f = Frame::new(["a", "b"]).unwrap();
        assert!(f.check(SubsetKey::from_bits(0b100)).is_err());
        assert!(f.check(SubsetKey::from_bits(0b11)).is_ok());
    }
}

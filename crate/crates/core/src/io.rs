//! JSON documents for mass functions, coefficient matrices and closest-world
//! maps.
//!
//! ```json
//! {"frame": ["a","b"], "world": "closed",
//!  "masses": [{"set": ["a"], "mass": 0.4}, {"set": ["a","b"], "mass": 0.6}]}
//! ```
//!
//! The empty set is written `"set": []`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::conditioning::{ClosestWorldMap, SpecializationMatrix, TransferMatrix};
use crate::error::{BeliefError, Result};
use crate::frame::{Frame, SubsetKey};
use crate::mass::{MassFunction, World};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MassDocument {
    frame: Vec<String>,
    world: World,
    masses: Vec<MassEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MassEntry {
    set: Vec<String>,
    mass: f64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDocument {
    frame: Vec<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    transfer: bool,
    entries: Vec<MatrixEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixEntry {
    from: Vec<String>,
    to: Vec<String>,
    coef: f64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClosestDocument {
    retained: Vec<String>,
    map: BTreeMap<String, String>,
}

fn syntax(e: serde_json::Error) -> BeliefError {
    BeliefError::Document(e.to_string())
}

fn labels(frame: &Frame, key: SubsetKey) -> Vec<String> {
    frame.subset_labels(key)
}

/// Parses and validates a mass-function document.
///
/// Duplicate sets, unknown labels, negative masses and sums outside
/// `1 ± 1e-9` are rejected.
pub fn parse_bba(text: &str) -> Result<MassFunction> {
    let doc: MassDocument = serde_json::from_str(text).map_err(syntax)?;
    let frame = Frame::new(doc.frame)?;
    let entries = doc
        .masses
        .iter()
        .map(|e| Ok((frame.subset(&e.set)?, e.mass)))
        .collect::<Result<Vec<_>>>()?;
    MassFunction::new(frame, doc.world, entries)
}

/// Serializes focal sets sorted by cardinality, then canonically.
pub fn serialize_bba(m: &MassFunction) -> String {
    let mut focal: Vec<(SubsetKey, f64)> = m.focal().collect();
    focal.sort_by_key(|(k, _)| k.display_order());
    let doc = MassDocument {
        frame: m.frame().labels().to_vec(),
        world: m.world(),
        masses: focal
            .into_iter()
            .map(|(k, mass)| MassEntry {
                set: labels(m.frame(), k),
                mass,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

/// A parsed coefficient matrix document.
#[derive(Debug, Clone, PartialEq)]
pub enum MatrixSpec {
    Specialization(SpecializationMatrix),
    Transfer(TransferMatrix),
}

impl MatrixSpec {
    pub fn frame(&self) -> &Frame {
        match self {
            MatrixSpec::Specialization(s) => s.frame(),
            MatrixSpec::Transfer(t) => t.frame(),
        }
    }

    pub fn into_transfer(self) -> TransferMatrix {
        match self {
            MatrixSpec::Specialization(s) => s.into(),
            MatrixSpec::Transfer(t) => t,
        }
    }
}

/// Parses a specialization (`"transfer"` absent or false) or transfer
/// (`"transfer": true`) matrix document. Omitted pairs are 0 and sources
/// without entries keep their mass.
pub fn parse_matrix(text: &str) -> Result<MatrixSpec> {
    let doc: MatrixDocument = serde_json::from_str(text).map_err(syntax)?;
    let frame = Frame::new(doc.frame)?;
    let entries = doc
        .entries
        .iter()
        .map(|e| Ok((frame.subset(&e.from)?, frame.subset(&e.to)?, e.coef)))
        .collect::<Result<Vec<_>>>()?;
    if doc.transfer {
        TransferMatrix::new(frame, entries).map(MatrixSpec::Transfer)
    } else {
        SpecializationMatrix::new(frame, entries).map(MatrixSpec::Specialization)
    }
}

pub fn serialize_matrix(matrix: &MatrixSpec) -> String {
    let frame = matrix.frame();
    let entries: Vec<_> = match matrix {
        MatrixSpec::Specialization(s) => s.entries().collect(),
        MatrixSpec::Transfer(t) => t.entries().collect(),
    };
    let doc = MatrixDocument {
        frame: frame.labels().to_vec(),
        transfer: matches!(matrix, MatrixSpec::Transfer(_)),
        entries: entries
            .into_iter()
            .map(|(from, to, coef)| MatrixEntry {
                from: labels(frame, from),
                to: labels(frame, to),
                coef,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

/// Parses a closest-world map against the frame of the data it will act on.
pub fn parse_closest(text: &str, frame: &Frame) -> Result<ClosestWorldMap> {
    let doc: ClosestDocument = serde_json::from_str(text).map_err(syntax)?;
    let retained = frame.subset(&doc.retained)?;
    let moves: Vec<(&String, &String)> = doc.map.iter().collect();
    ClosestWorldMap::from_labels(frame.clone(), retained, &moves)
}

pub fn serialize_closest(map: &ClosestWorldMap) -> String {
    let frame = map.frame();
    let doc = ClosestDocument {
        retained: labels(frame, map.retained()),
        map: map
            .moves()
            .map(|(a, b)| (frame.label(a).to_string(), frame.label(b).to_string()))
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const VOTING: &str = r#"{"frame": ["a","b","c","d","e"], "world": "closed", "masses": [
        {"set": ["a"], "mass": 0.05}, {"set": ["a","b"], "mass": 0.08},
        {"set": ["a","b","c"], "mass": 0.15}, {"set": ["b","c","d"], "mass": 0.21},
        {"set": ["a","b","c","d"], "mass": 0.29}, {"set": ["d","e"], "mass": 0.22}]}"#;

    #[test]
    fn voting_document_parses() {
        let m = parse_bba(VOTING).unwrap();
        assert!(m.max_abs_diff(&fixtures::voting_masses()) < 1e-15);
    }

    #[test]
    fn serialization_is_a_fixed_point() {
        let m = parse_bba(VOTING).unwrap();
        let text = serialize_bba(&m);
        let again = parse_bba(&text).unwrap();
        assert_eq!(again, m);
        assert_eq!(serialize_bba(&again), text);
    }

    #[test]
    fn diagnostics_name_the_problem() {
        let bad_sum = VOTING.replace("0.22", "0.12");
        let e = parse_bba(&bad_sum).unwrap_err();
        assert!(matches!(e, BeliefError::MassSum { .. }));
        assert!(e.to_string().contains("0.9"), "{e}");

        let unknown = VOTING.replace(r#"["d","e"]"#, r#"["d","z"]"#);
        assert_eq!(
            parse_bba(&unknown).unwrap_err(),
            BeliefError::UnknownLabel { label: "z".into() }
        );

        let dup = VOTING.replace(r#"["a","b"]"#, r#"["a"]"#);
        assert_eq!(
            parse_bba(&dup).unwrap_err(),
            BeliefError::DuplicateSet { set: "{a}".into() }
        );

        let neg = r#"{"frame": ["a","b"], "world": "closed", "masses": [
            {"set": ["a"], "mass": -0.5}, {"set": ["b"], "mass": 1.5}]}"#;
        assert!(matches!(parse_bba(neg).unwrap_err(), BeliefError::NegativeMass { .. }));

        assert!(matches!(parse_bba("{\"frame\": [").unwrap_err(), BeliefError::Document(_)));
        let extra = VOTING.replacen("\"world\"", "\"colour\": 1, \"world\"", 1);
        assert!(matches!(parse_bba(&extra).unwrap_err(), BeliefError::Document(_)));
    }

    #[test]
    fn empty_set_in_open_world_document() {
        let doc = r#"{"frame": ["a"], "world": "open", "masses": [
            {"set": [], "mass": 0.25}, {"set": ["a"], "mass": 0.75}]}"#;
        let m = parse_bba(doc).unwrap();
        assert_eq!(m.empty_mass(), 0.25);
        assert!(parse_bba(&doc.replace("open", "closed")).is_err());
    }

    #[test]
    fn matrix_documents() {
        let doc = r#"{"frame": ["a","b","c","d","e"], "entries": [
            {"from": ["b","c","d"], "to": ["c"], "coef": 0.333333333},
            {"from": ["b","c","d"], "to": ["d"], "coef": 0.333333333},
            {"from": ["b","c","d"], "to": ["c","d"], "coef": 0.3333333334}]}"#;
        let MatrixSpec::Specialization(s) = parse_matrix(doc).unwrap() else {
            panic!("expected a specialization");
        };
        let f = fixtures::voting_frame();
        let bcd = f.parse_subset("b,c,d").unwrap();
        assert!((s.coefficient(f.parse_subset("c").unwrap(), bcd) - 1.0 / 3.0).abs() < 1e-9);

        let transfer = doc.replacen("\"entries\"", "\"transfer\": true, \"entries\"", 1);
        assert!(matches!(parse_matrix(&transfer).unwrap(), MatrixSpec::Transfer(_)));

        let not_subset = r#"{"frame": ["a","b"], "entries": [{"from": ["a"], "to": ["b"], "coef": 1}]}"#;
        assert!(matches!(parse_matrix(not_subset), Err(BeliefError::InvalidMatrix(_))));
        let t = not_subset.replacen("\"entries\"", "\"transfer\": true, \"entries\"", 1);
        assert!(parse_matrix(&t).is_ok());
    }

    #[test]
    fn matrix_roundtrip() {
        let spec = MatrixSpec::Specialization(fixtures::specialization_scenario());
        assert_eq!(parse_matrix(&serialize_matrix(&spec)).unwrap(), spec);
        let t = MatrixSpec::Transfer(fixtures::imaging_scenario(3));
        assert_eq!(parse_matrix(&serialize_matrix(&t)).unwrap(), t);
    }

    #[test]
    fn closest_documents() {
        let f = fixtures::voting_frame();
        let doc = r#"{"retained": ["c","d","e"], "map": {"a": "c", "b": "c"}}"#;
        let map = parse_closest(doc, &f).unwrap();
        assert_eq!(map, fixtures::closest_map());
        assert_eq!(parse_closest(&serialize_closest(&map), &f).unwrap(), map);
        let bad = r#"{"retained": ["c","d","e"], "map": {"a": "c"}}"#;
        assert!(matches!(parse_closest(bad, &f), Err(BeliefError::InvalidClosestMap(_))));
    }
}

//! Tables of bounds or masses, rendered as TSV (percentages, one decimal)
//! or JSON (full precision).

use serde::Serialize;
use serde_json::{json, Value};

use crate::frame::{Frame, SubsetKey};
use crate::io::serialize_bba;
use crate::mass::MassFunction;

#[derive(Debug, Clone, PartialEq)]
pub enum RowValues {
    Interval { lower: f64, upper: f64 },
    Mass(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub set: Vec<String>,
    pub label: String,
    pub values: RowValues,
    pub note: Option<String>,
}

impl TableRow {
    pub fn interval(frame: &Frame, set: SubsetKey, lower: f64, upper: f64) -> Self {
        TableRow {
            set: frame.subset_labels(set),
            label: frame.format_subset(set),
            values: RowValues::Interval { lower, upper },
            note: None,
        }
    }

    pub fn mass(frame: &Frame, set: SubsetKey, mass: f64) -> Self {
        TableRow {
            set: frame.subset_labels(set),
            label: frame.format_subset(set),
            values: RowValues::Mass(mass),
            note: None,
        }
    }
}

/// A named scalar printed under a table, e.g. the conflict mass.
#[derive(Debug, Clone, PartialEq)]
pub struct Extra {
    pub name: &'static str,
    pub value: f64,
    pub percent: bool,
}

/// Rows sorted by (cardinality, canonical subset order), plus annotations.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RenderedTable {
    pub title: Option<String>,
    pub rows: Vec<TableRow>,
    pub extras: Vec<Extra>,
    pub notes: Vec<String>,
    pub result: Option<MassFunction>,
}

impl RenderedTable {
    pub fn extra(mut self, name: &'static str, value: f64, percent: bool) -> Self {
        self.extras.push(Extra {
            name,
            value,
            percent,
        });
        self
    }
}

/// `0.172413… -> "17.2%"`. Values are scaled to tenths of a percent before
/// rounding so exact halves such as 32.5% are not lost to binary noise.
pub fn percent(value: f64) -> String {
    let tenths = (value * 1000.0).round();
    let tenths = if tenths == 0.0 { 0.0 } else { tenths };
    format!("{:.1}%", tenths / 10.0)
}

pub fn to_tsv(tables: &[RenderedTable]) -> String {
    let mut out = String::new();
    for (i, table) in tables.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        if let Some(title) = &table.title {
            out.push_str(&format!("# {title}\n"));
        }
        let mass_rows = table
            .rows
            .first()
            .is_some_and(|r| matches!(r.values, RowValues::Mass(_)));
        out.push_str(if mass_rows {
            "set\tmass\n"
        } else {
            "set\tlower\tupper\n"
        });
        for row in &table.rows {
            match row.values {
                RowValues::Interval { lower, upper } => out.push_str(&format!(
                    "{}\t{}\t{}\n",
                    row.label,
                    percent(lower),
                    percent(upper)
                )),
                RowValues::Mass(m) => {
                    out.push_str(&format!("{}\t{}\n", row.label, percent(m)))
                }
            }
            if let Some(note) = &row.note {
                out.push_str(&format!("#   {}: {note}\n", row.label));
            }
        }
        for extra in &table.extras {
            let value = if extra.percent {
                percent(extra.value)
            } else {
                format!("{:.6}", extra.value)
            };
            out.push_str(&format!("# {}\t{value}\n", extra.name));
        }
        for note in &table.notes {
            out.push_str(&format!("# {note}\n"));
        }
    }
    out
}

#[derive(Serialize)]
struct JsonRow<'a> {
    set: &'a [String],
    #[serde(skip_serializing_if = "Option::is_none")]
    lower: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mass: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

fn table_json(table: &RenderedTable) -> Value {
    let rows: Vec<JsonRow> = table
        .rows
        .iter()
        .map(|r| {
            let (lower, upper, mass) = match r.values {
                RowValues::Interval { lower, upper } => (Some(lower), Some(upper), None),
                RowValues::Mass(m) => (None, None, Some(m)),
            };
            JsonRow {
                set: &r.set,
                lower,
                upper,
                mass,
                note: r.note.as_deref(),
            }
        })
        .collect();
    let mut obj = json!({ "rows": rows });
    let map = obj.as_object_mut().expect("object literal");
    if let Some(title) = &table.title {
        map.insert("title".into(), json!(title));
    }
    for extra in &table.extras {
        map.insert(extra.name.into(), json!(extra.value));
    }
    if !table.notes.is_empty() {
        map.insert("notes".into(), json!(table.notes));
    }
    if let Some(m) = &table.result {
        let doc: Value = serde_json::from_str(&serialize_bba(m)).expect("own output parses");
        map.insert("result".into(), doc);
    }
    obj
}

/// One table renders as an object, several as an array.
pub fn to_json(tables: &[RenderedTable]) -> String {
    let value = match tables {
        [one] => table_json(one),
        many => Value::Array(many.iter().map(table_json).collect()),
    };
    let mut s = serde_json::to_string_pretty(&value).expect("plain data serializes");
    s.push('\n');
    s
}

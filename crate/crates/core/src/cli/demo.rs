//! The voting scenario tables.

use clap::ValueEnum;

use super::render::{RenderedTable, TableRow};
use crate::conditioning::{
    apply_specialization, condition_closed, condition_geometric, condition_open,
    condition_yager_kohlas, image_general, ConditioningOutcome,
};
use crate::credal::{bounds, fh_conditional, oracle_conditional};
use crate::error::Result;
use crate::fixtures;
use crate::frame::{Frame, SubsetKey};
use crate::lattice::belief;
use crate::mass::{MassFunction, World};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableSelector {
    All,
    #[value(name = "2")]
    Proportions,
    C1,
    C2,
    C3,
    C4,
    C5,
    #[value(name = "c6.1")]
    C6_1,
    #[value(name = "c6.2")]
    C6_2,
    #[value(name = "c6.3")]
    C6_3,
    C7,
}

impl std::str::FromStr for TableSelector {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        <Self as ValueEnum>::from_str(s, true)
    }
}

const ORDER: [TableSelector; 10] = [
    TableSelector::Proportions,
    TableSelector::C1,
    TableSelector::C2,
    TableSelector::C3,
    TableSelector::C4,
    TableSelector::C5,
    TableSelector::C6_1,
    TableSelector::C6_2,
    TableSelector::C6_3,
    TableSelector::C7,
];

/// Printed value of the one conditional cell that disagrees with both the
/// closed form and the vertex oracle: the upper bound for `{c}` given `{c,d,e}`.
pub const PRINTED_C_UPPER: f64 = 1.0;

const SURVIVOR_ROWS: [&str; 4] = ["c", "d", "c,d", "c,d,e"];

fn keys(frame: &Frame, literals: &[&str]) -> Vec<SubsetKey> {
    let mut out: Vec<SubsetKey> = literals
        .iter()
        .map(|s| frame.parse_subset(s).expect("static literal"))
        .collect();
    out.sort_by_key(|k| k.display_order());
    out
}

fn view_table(title: &str, m: &MassFunction, rows: &[&str]) -> RenderedTable {
    let view = belief(m);
    let frame = m.frame();
    RenderedTable {
        title: Some(title.to_string()),
        rows: keys(frame, rows)
            .into_iter()
            .map(|k| TableRow::interval(frame, k, view.bel(k), view.pl(k)))
            .collect(),
        ..Default::default()
    }
}

fn outcome_table(title: &str, out: &ConditioningOutcome, rows: &[&str]) -> RenderedTable {
    view_table(title, &out.result, rows)
}

fn build(selector: TableSelector) -> Result<RenderedTable> {
    let m = fixtures::voting_masses();
    let frame = m.frame().clone();
    let cde = fixtures::survivors();
    use TableSelector::*;
    let table = match selector {
        All => unreachable!("expanded by caller"),
        Proportions => RenderedTable {
            title: Some("2: upper and lower proportions of Monday's answers".into()),
            rows: keys(&frame, &["a", "a,b", "a,b,c", "c", "d", "c,d", "c,d,e"])
                .into_iter()
                .map(|k| {
                    let b = bounds(&m, k)?;
                    Ok(TableRow::interval(&frame, k, b.lower, b.upper))
                })
                .collect::<Result<_>>()?,
            ..Default::default()
        },
        C1 => {
            let out = condition_open(&m, cde)?;
            outcome_table(
                "c1: unnormalized Dempster conditioning on {c,d,e} (compulsory voting, blank votes)",
                &out,
                &SURVIVOR_ROWS,
            )
            .extra("blank", out.result.empty_mass(), true)
        }
        C2 => {
            let out = condition_closed(&m, cde)?;
            outcome_table(
                "c2: normalized Dempster conditioning on {c,d,e} (free voting)",
                &out,
                &SURVIVOR_ROWS,
            )
            .extra("normalization", out.normalization, false)
        }
        C3 => outcome_table(
            "c3: Yager-Kohlas conditioning on {c,d,e} (compulsory choice)",
            &condition_yager_kohlas(&m, cde)?,
            &SURVIVOR_ROWS,
        ),
        C4 => outcome_table(
            "c4: geometric conditioning on {c,d,e} (only voters inside {c,d,e} remain)",
            &condition_geometric(&m, cde, World::Closed)?,
            &["c,d", "d,e"],
        ),
        C5 => {
            let out = apply_specialization(&m, &fixtures::specialization_scenario())?;
            view_table(
                "c5: specialization onto {c,d,e} with known political splits",
                &out,
                &SURVIVOR_ROWS,
            )
            .extra("blank", out.empty_mass(), true)
        }
        C6_1 | C6_2 | C6_3 => {
            let (level, title) = match selector {
                C6_1 => (1, "c6.1: imaging, stranded voters move to {c}"),
                C6_2 => (2, "c6.2: imaging, stranded voters split 40% {c} / 60% {c,d}"),
                _ => (3, "c6.3: imaging, {a} and {a,b} voters split separately"),
            };
            let out = image_general(&m, &fixtures::imaging_scenario(level))?;
            view_table(title, &out, &SURVIVOR_ROWS)
        }
        C7 => {
            let c = frame.singleton("c")?;
            let mut rows = Vec::new();
            for k in keys(&frame, &["c", "d", "c,d", "d,e"]) {
                let fh = fh_conditional(&m, cde, k)?;
                let oracle = oracle_conditional(&m, cde, k)?;
                let mut row = TableRow::interval(&frame, k, fh.lower, fh.upper);
                if (fh.lower - oracle.lower).abs() > 1e-9 || (fh.upper - oracle.upper).abs() > 1e-9
                {
                    row.note = Some(format!(
                        "vertex oracle gives [{}, {}]",
                        super::render::percent(oracle.lower),
                        super::render::percent(oracle.upper)
                    ));
                } else if k == c {
                    row.note = Some(format!(
                        "erratum: the reference table prints {} for this upper bound; \
                         closed form and vertex oracle both give {}",
                        super::render::percent(PRINTED_C_UPPER),
                        super::render::percent(fh.upper)
                    ));
                }
                rows.push(row);
            }
            RenderedTable {
                title: Some(
                    "c7: upper and lower conditional proportions given {c,d,e}".into(),
                ),
                rows,
                ..Default::default()
            }
        }
    };
    Ok(table)
}

/// Builds the selected tables from the embedded voting data.
pub fn demo_voting(selector: TableSelector) -> Result<Vec<RenderedTable>> {
    match selector {
        TableSelector::All => ORDER.iter().map(|&s| build(s)).collect(),
        one => Ok(vec![build(one)?]),
    }
}

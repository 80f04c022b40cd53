//! Output formats and the serializable records shared by every command.

use aseries_core::ArithmeticSeries;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Csv,
    Json,
}

/// One series as it appears in CSV and JSON output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub first: u64,
    pub last: u64,
    pub terms: u64,
}

impl From<&ArithmeticSeries> for SeriesRecord {
    fn from(s: &ArithmeticSeries) -> Self {
        SeriesRecord {
            first: s.first(),
            last: s.last(),
            terms: s.terms(),
        }
    }
}

pub fn records(series: &[ArithmeticSeries]) -> Vec<SeriesRecord> {
    series.iter().map(SeriesRecord::from).collect()
}

/// JSON shape of `repr`: every representation of `n` for one step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub n: u64,
    pub step: u64,
    pub series: Vec<SeriesRecord>,
    pub diff2_class: String,
    pub consecutive_class: String,
}

/// `a + b + … + z (r)`.
pub fn annotated(series: &ArithmeticSeries, lead: usize) -> String {
    format!("{} ({})", series.display_with_lead(lead), series.terms())
}

pub(crate) fn to_json<T: Serialize>(value: &T) -> Result<String, serde_json::Error> {
    let mut out = serde_json::to_string_pretty(value)?;
    out.push('\n');
    Ok(out)
}

//! Output records and their JSON and CSV encodings. Both encodings carry the
//! same fields in the same order; JSON adds the schema key in front.

use std::io::Write;

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "distchrom/1";

/// One classified distance set. Every field is a string or a number so that
/// the CSV and JSON forms hold exactly the same content.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    /// The set as given.
    pub d: String,
    /// `d / divisor`, the set the family and value refer to.
    pub normalized: String,
    pub divisor: u64,
    pub family: String,
    pub delta: u64,
    /// `D²` of `d`.
    pub square: String,
    /// `5` or an interval `[8,9]`.
    pub result: String,
    pub evidence: String,
    /// Milliseconds; absent with `--no-timing`.
    pub timing_ms: Option<f64>,
    /// Solver interval, only in `table --confirm`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub search: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub search_agrees: Option<bool>,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: &'static str,
    #[serde(flatten)]
    body: &'a T,
}

/// One JSON object per line.
pub fn write_json<T: Serialize>(out: &mut impl Write, body: &T) -> std::io::Result<()> {
    let env = Envelope {
        schema: SCHEMA,
        body,
    };
    serde_json::to_writer(&mut *out, &env)?;
    writeln!(out)
}

/// Columns present in every record.
const BASE_COLUMNS: [&str; 9] = [
    "d",
    "normalized",
    "divisor",
    "family",
    "delta",
    "square",
    "result",
    "evidence",
    "timing_ms",
];

/// Header row, then one row per record.
pub fn write_csv(out: &mut impl Write, records: &[OutputRecord]) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    if records.is_empty() {
        w.write_record(BASE_COLUMNS)?;
    }
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Rounded to microseconds so the text form stays short.
pub fn millis(d: std::time::Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

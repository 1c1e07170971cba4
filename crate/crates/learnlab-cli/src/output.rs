//! CSV and JSON emission.
//!
//! CSV layout: `#`-prefixed metadata lines (tool version and the resolved
//! config as one JSON object), then the column header, then rows. Floats are
//! printed with Rust's shortest round-trip formatting, so parsing a file
//! back recovers every value exactly. The JSON alternative carries the same
//! field names under a `schema_version`ed document.

use serde::Serialize;

use crate::config::EffectiveConfig;

pub const SCHEMA_VERSION: u32 = 1;

/// A row type that knows its CSV header and cells.
pub trait CsvRow: Serialize {
    const HEADER: &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

pub fn float_cell(x: f64) -> String {
    format!("{x}")
}

pub fn optional_float_cell(x: Option<f64>) -> String {
    x.map(float_cell).unwrap_or_default()
}

pub fn optional_u64_cell(x: Option<u64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

pub fn render_csv<R: CsvRow>(config: &EffectiveConfig, rows: &[R]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# learnlab v{}\n# schema_version = {}\n# config = {}\n",
        env!("CARGO_PKG_VERSION"),
        SCHEMA_VERSION,
        config.to_json()
    ));
    out.push_str(&R::HEADER.join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&row.cells().join(","));
        out.push('\n');
    }
    out
}

pub fn render_json<R: CsvRow>(config: &EffectiveConfig, rows: &[R]) -> String {
    #[derive(Serialize)]
    struct Doc<'a, R: Serialize> {
        schema_version: u32,
        config: &'a EffectiveConfig,
        rows: &'a [R],
    }
    let doc = Doc {
        schema_version: SCHEMA_VERSION,
        config,
        rows,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("rows serialize");
    s.push('\n');
    s
}

/// A parsed CSV document: the config echo plus header and cell rows.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedCsv {
    pub config_json: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// Parse a document produced by [`render_csv`]. Cells never contain commas
/// or quotes, so splitting is enough.
pub fn parse_csv(text: &str) -> Option<ParsedCsv> {
    let mut config_json = None;
    let mut header = None;
    let mut rows = Vec::new();
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("# config = ") {
            config_json = Some(rest.to_string());
        } else if line.starts_with('#') {
            continue;
        } else if header.is_none() {
            header = Some(line.split(',').map(str::to_string).collect());
        } else {
            rows.push(line.split(',').map(str::to_string).collect());
        }
    }
    Some(ParsedCsv {
        config_json: config_json?,
        header: header?,
        rows,
    })
}

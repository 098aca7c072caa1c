//! Group and report files.
//!
//! A group file is a JSON object `{"order": n, "table": [[...], ...]}` with
//! one table row per line. A report file is a JSON array with one compact
//! record per line.

use std::fs;
use std::path::Path;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, SubgroupSet};
use crate::hg::HgsReport;

#[derive(Deserialize)]
struct GroupFile {
    order: usize,
    table: Vec<Vec<usize>>,
}

/// Text of a group file; byte-stable for a given table.
pub fn group_to_string(g: &FiniteGroup) -> String {
    let mut out = format!("{{\n  \"order\": {},\n  \"table\": [\n", g.order());
    let rows = g.rows();
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str("    [");
        out.push_str(&cells.join(", "));
        out.push(']');
        if i + 1 < rows.len() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("  ]\n}\n");
    out
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, column)
}

// Byte offset of the opening bracket of row `i` of the "table" array.
fn row_offset(text: &str, i: usize) -> Option<usize> {
    let start = text.find("\"table\"")?;
    let mut depth = 0usize;
    let mut seen = 0usize;
    for (off, c) in text[start..].char_indices() {
        match c {
            '[' => {
                depth += 1;
                if depth == 2 {
                    if seen == i {
                        return Some(start + off);
                    }
                    seen += 1;
                }
            }
            ']' => depth = depth.saturating_sub(1),
            _ => {}
        }
    }
    None
}

/// Parses the text of a group file.
pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| Error::ParseError {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let at_row = |i: usize, message: String| {
        let (line, column) = row_offset(text, i).map_or((1, 1), |o| line_col(text, o));
        Error::ParseError { line, column, message }
    };
    if file.table.len() != file.order {
        let (line, column) = text.find("\"table\"").map_or((1, 1), |o| line_col(text, o));
        return Err(Error::ParseError {
            line,
            column,
            message: format!("table has {} rows, order is {}", file.table.len(), file.order),
        });
    }
    if let Some(i) = file.table.iter().position(|r| r.len() != file.order) {
        return Err(at_row(i, format!("row {i} has length {}, expected {}", file.table[i].len(), file.order)));
    }
    FiniteGroup::from_rows(&file.table).map_err(|e| Error::ValidationError(Box::new(e)))
}

pub fn read_group(path: impl AsRef<Path>) -> Result<FiniteGroup> {
    parse_group(&fs::read_to_string(path)?)
}

pub fn write_group(g: &FiniteGroup, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, group_to_string(g))?;
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct RatioRecord {
    num: u64,
    den: u64,
}

#[derive(Serialize, Deserialize)]
struct ReportRecord {
    operation_table: Vec<Vec<usize>>,
    type_name: String,
    is_bi_skew: bool,
    image: Vec<Vec<usize>>,
    is_surjective: bool,
    gc_ratio: RatioRecord,
    grouplikes: Vec<usize>,
    iso_class_id: usize,
    orbit_size: usize,
}

impl From<&HgsReport> for ReportRecord {
    fn from(r: &HgsReport) -> Self {
        let mut image: Vec<Vec<usize>> = r.image.iter().map(|s| s.elements().to_vec()).collect();
        image.sort();
        ReportRecord {
            operation_table: r.operation.rows(),
            type_name: r.type_name.clone(),
            is_bi_skew: r.is_bi_skew,
            image,
            is_surjective: r.is_surjective,
            gc_ratio: RatioRecord {
                num: *r.gc_ratio.numer(),
                den: *r.gc_ratio.denom(),
            },
            grouplikes: r.grouplikes.elements().to_vec(),
            iso_class_id: r.iso_class_id,
            orbit_size: r.orbit_size,
        }
    }
}

impl TryFrom<ReportRecord> for HgsReport {
    type Error = Error;

    fn try_from(r: ReportRecord) -> Result<Self> {
        if r.gc_ratio.den == 0 {
            return Err(Error::Malformed("gc_ratio has zero denominator".into()));
        }
        let mut image: Vec<SubgroupSet> = r.image.into_iter().map(SubgroupSet::from_elements).collect();
        image.sort();
        Ok(HgsReport {
            operation: FiniteGroup::from_rows(&r.operation_table).map_err(|e| Error::ValidationError(Box::new(e)))?,
            type_name: r.type_name,
            is_bi_skew: r.is_bi_skew,
            image,
            is_surjective: r.is_surjective,
            gc_ratio: Ratio::new(r.gc_ratio.num, r.gc_ratio.den),
            grouplikes: SubgroupSet::from_elements(r.grouplikes),
            iso_class_id: r.iso_class_id,
            orbit_size: r.orbit_size,
        })
    }
}

/// Report list as JSON, one record per line.
pub fn reports_to_string(reports: &[HgsReport]) -> String {
    if reports.is_empty() {
        return "[]\n".into();
    }
    let lines: Vec<String> = reports.iter().map(|r| report_to_string(r).trim_end().to_string()).collect();
    format!("[\n{}\n]\n", lines.join(",\n"))
}

/// A single report as one compact JSON object and a newline.
pub fn report_to_string(report: &HgsReport) -> String {
    let mut s = serde_json::to_string(&ReportRecord::from(report)).expect("report records serialize");
    s.push('\n');
    s
}

pub fn parse_reports(text: &str) -> Result<Vec<HgsReport>> {
    let records: Vec<ReportRecord> = serde_json::from_str(text).map_err(|e| Error::ParseError {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    records.into_iter().map(HgsReport::try_from).collect()
}

pub fn write_reports(reports: &[HgsReport], path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, reports_to_string(reports))?;
    Ok(())
}

pub fn read_reports(path: impl AsRef<Path>) -> Result<Vec<HgsReport>> {
    parse_reports(&fs::read_to_string(path)?)
}

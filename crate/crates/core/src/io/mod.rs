//! Instance ingestion (JSON and CSV) and report emission.
//!
//! Loading separates two failure classes so callers can exit differently on
//! them: *parse* errors (unreadable file, malformed JSON/CSV, unparseable
//! number) and *validation* errors (out-of-range degree, ragged matrix,
//! label or dimension mismatch). See [`LoadError::is_validation`].

pub mod report;

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::{check_dims, FuzzyRelation, FuzzyVector};
use crate::error::Error;

pub use report::{
    build_compose_report, demo_reports, emit_regime, emit_report, emit_suite, render_suite_text,
    render_text, ComposeMode, CompositionRecord, ReportFormat, RunReport,
};

/// A named problem: membership vector `x` against relation matrix `A`.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub name: String,
    pub description: Option<String>,
    pub x: FuzzyVector,
    pub a: FuzzyRelation,
}

/// The flat on-disk JSON shape:
/// `{name, description?, x, labels_x?, A, row_labels?, col_labels?}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawInstance {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    x: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels_x: Option<Vec<String>>,
    #[serde(rename = "A")]
    a: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    row_labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    col_labels: Option<Vec<String>>,
}

impl Serialize for Instance {
    fn serialize<S>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error>
    where
        S: serde::Serializer,
    {
        RawInstance {
            name: self.name.clone(),
            description: self.description.clone(),
            x: self.x.degrees(),
            labels_x: self.x.labels().map(<[String]>::to_vec),
            a: self.a.to_degrees(),
            row_labels: self.a.row_labels().map(<[String]>::to_vec),
            col_labels: self.a.col_labels().map(<[String]>::to_vec),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Instance {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let raw = RawInstance::deserialize(deserializer)?;
        instance_from_raw(raw).map_err(serde::de::Error::custom)
    }
}

/// Failure while reading an instance from disk.
#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON in {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("malformed CSV in {path}: {source}")]
    Csv {
        path: String,
        #[source]
        source: csv::Error,
    },
    /// A matrix cell that does not parse as a number. Coordinates are
    /// 1-based over the data cells (label row/column excluded).
    #[error("cannot parse '{text}' as a number at row {row}, column {column}")]
    NumberSyntax {
        row: usize,
        column: usize,
        text: String,
    },
    /// A vector-file line that does not parse as a number (1-based).
    #[error("cannot parse '{text}' as a number at line {line} of the vector file")]
    VectorSyntax { line: usize, text: String },
    /// A matrix value outside the unit interval. Coordinates are 1-based
    /// over the data cells.
    #[error("value {value} at row {row}, column {column} is outside [0, 1]")]
    OutOfRange {
        row: usize,
        column: usize,
        value: f64,
    },
    /// A vector value outside the unit interval (1-based position).
    #[error("value {value} at position {position} of x is outside [0, 1]")]
    VectorOutOfRange { position: usize, value: f64 },
    /// Structural validation failure: ragged matrix, label mismatch, or
    /// vector/relation dimension mismatch.
    #[error(transparent)]
    Invalid(#[from] Error),
}

impl LoadError {
    /// True for failures of the *content* (range, shape, labels) as opposed
    /// to failures of the *encoding* (I/O, syntax).
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            LoadError::OutOfRange { .. }
                | LoadError::VectorOutOfRange { .. }
                | LoadError::Invalid(_)
        )
    }
}

/// On-disk encodings for instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceFormat {
    /// Single JSON document with the vector inline.
    Json,
    /// CSV matrix plus a companion vector file (one value per line).
    Csv,
}

/// Picks the format by file extension: `.json` (case-insensitive) is JSON,
/// anything else is CSV.
pub fn detect_format(path: &Path) -> InstanceFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("json") => InstanceFormat::Json,
        _ => InstanceFormat::Csv,
    }
}

fn range_checked(raw: RawInstance) -> Result<RawInstance, LoadError> {
    for (i, &value) in raw.x.iter().enumerate() {
        if !(0.0..=1.0).contains(&value) {
            return Err(LoadError::VectorOutOfRange {
                position: i + 1,
                value,
            });
        }
    }
    for (i, row) in raw.a.iter().enumerate() {
        for (j, &value) in row.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(LoadError::OutOfRange {
                    row: i + 1,
                    column: j + 1,
                    value,
                });
            }
        }
    }
    Ok(raw)
}

fn instance_from_raw(raw: RawInstance) -> Result<Instance, LoadError> {
    let raw = range_checked(raw)?;
    let mut x = FuzzyVector::from_degrees(&raw.x)?;
    if let Some(labels) = raw.labels_x {
        x = x.with_labels(labels)?;
    }
    let mut a = FuzzyRelation::from_degrees(&raw.a)?;
    if let Some(labels) = raw.row_labels {
        a = a.with_row_labels(labels)?;
    }
    if let Some(labels) = raw.col_labels {
        a = a.with_col_labels(labels)?;
    }
    check_dims(&x, &a)?;
    Ok(Instance {
        name: raw.name,
        description: raw.description,
        x,
        a,
    })
}

/// Loads a single-document JSON instance.
pub fn load_json_instance(path: &Path) -> Result<Instance, LoadError> {
    let text = fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let raw: RawInstance = serde_json::from_str(&text).map_err(|source| LoadError::Json {
        path: path.display().to_string(),
        source,
    })?;
    instance_from_raw(raw)
}

fn parse_cell(text: &str) -> Option<f64> {
    f64::from_str(text.trim()).ok()
}

/// Loads a CSV matrix plus a companion vector file.
///
/// Layout rules for the matrix: an optional first row of column labels
/// (detected when its leading cells are non-numeric), an optional first
/// column of row labels (detected when every remaining row starts with a
/// non-numeric cell), and a numeric body. A header one cell wider than the
/// body is treated as having a corner cell, which is dropped. The vector
/// file holds one value per line; blank lines are ignored.
pub fn load_csv_instance(matrix_path: &Path, vector_path: &Path) -> Result<Instance, LoadError> {
    let text = fs::read_to_string(matrix_path).map_err(|source| LoadError::Io {
        path: matrix_path.display().to_string(),
        source,
    })?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows: Vec<Vec<String>> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|source| LoadError::Csv {
            path: matrix_path.display().to_string(),
            source,
        })?;
        rows.push(record.iter().map(str::to_string).collect());
    }
    if rows.is_empty() {
        return Err(Error::EmptyRelation.into());
    }

    // Column labels: the first row is a header when it starts with
    // non-numeric cells (a lone corner cell also counts).
    let first = &rows[0];
    let has_header = !first.is_empty()
        && parse_cell(&first[0]).is_none()
        && (first.len() == 1 || parse_cell(&first[1]).is_none());
    let (header, body) = if has_header {
        (Some(rows[0].clone()), &rows[1..])
    } else {
        (None, &rows[..])
    };
    if body.is_empty() {
        return Err(Error::EmptyRelation.into());
    }

    // Row labels: only when every body row leads with a non-numeric cell,
    // so a single malformed number is reported as such instead of silently
    // re-shaping the matrix.
    let has_row_labels = body
        .iter()
        .all(|row| row.first().is_some_and(|cell| parse_cell(cell).is_none()));

    let mut row_labels: Vec<String> = Vec::new();
    let mut values: Vec<Vec<f64>> = Vec::new();
    for (i, row) in body.iter().enumerate() {
        let cells = if has_row_labels {
            row_labels.push(row[0].clone());
            &row[1..]
        } else {
            &row[..]
        };
        let mut parsed = Vec::with_capacity(cells.len());
        for (j, cell) in cells.iter().enumerate() {
            match parse_cell(cell) {
                Some(value) => parsed.push(value),
                None => {
                    return Err(LoadError::NumberSyntax {
                        row: i + 1,
                        column: j + 1,
                        text: cell.clone(),
                    })
                }
            }
        }
        values.push(parsed);
    }
    for (i, row) in values.iter().enumerate() {
        for (j, &value) in row.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(LoadError::OutOfRange {
                    row: i + 1,
                    column: j + 1,
                    value,
                });
            }
        }
    }

    let mut a = FuzzyRelation::from_degrees(&values)?;
    if has_row_labels {
        a = a.with_row_labels(row_labels)?;
    }
    if let Some(mut labels) = header {
        if labels.len() == a.cols() + 1 {
            labels.remove(0);
        }
        a = a.with_col_labels(labels)?;
    }

    let x = load_vector_file(vector_path)?;
    check_dims(&x, &a)?;
    let name = matrix_path
        .file_stem()
        .map(|stem| stem.to_string_lossy().into_owned())
        .unwrap_or_else(|| "instance".to_string());
    Ok(Instance {
        name,
        description: None,
        x,
        a,
    })
}

fn load_vector_file(path: &Path) -> Result<FuzzyVector, LoadError> {
    let text = fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut values = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match parse_cell(line) {
            Some(value) if (0.0..=1.0).contains(&value) => values.push(value),
            Some(value) => {
                return Err(LoadError::VectorOutOfRange {
                    position: values.len() + 1,
                    value,
                })
            }
            None => {
                return Err(LoadError::VectorSyntax {
                    line: index + 1,
                    text: line.to_string(),
                })
            }
        }
    }
    Ok(FuzzyVector::from_degrees(&values)?)
}

/// The built-in 3×4 demo relation: three measured properties (rows) scored
/// against four produce classes (columns).
pub fn demo_relation() -> FuzzyRelation {
    FuzzyRelation::from_degrees(&[
        vec![0.0, 0.3, 0.98, 0.7],
        vec![0.001, 0.01, 0.1, 0.99],
        vec![0.004, 0.042, 0.3, 1.0],
    ])
    .expect("demo values are in range")
    .with_row_labels(demo_property_labels())
    .expect("three row labels")
    .with_col_labels(demo_class_labels())
    .expect("four column labels")
}

fn demo_property_labels() -> Vec<String> {
    ["Long", "Heavy", "Voluminous"]
        .map(str::to_string)
        .to_vec()
}

fn demo_class_labels() -> Vec<String> {
    ["P", "S", "B", "M"].map(str::to_string).to_vec()
}

/// The two built-in probes over [`demo_relation`]: an object with small
/// nonzero scores on every property, and one scoring zero on the first.
pub fn demo_instances() -> Vec<Instance> {
    let probe = |name: &str, description: &str, degrees: &[f64]| Instance {
        name: name.to_string(),
        description: Some(description.to_string()),
        x: FuzzyVector::from_degrees(degrees)
            .expect("demo probes are in range")
            .with_labels(demo_property_labels())
            .expect("three labels"),
        a: demo_relation(),
    };
    vec![
        probe(
            "demo-probe-1",
            "Small object: faint nonzero scores on all three properties.",
            &[0.004, 0.002, 0.003],
        ),
        probe(
            "demo-probe-2",
            "Small object: zero length score, faint weight and volume scores.",
            &[0.0, 0.001, 0.004],
        ),
    ]
}

impl fmt::Display for InstanceFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InstanceFormat::Json => "json",
            InstanceFormat::Csv => "csv",
        })
    }
}

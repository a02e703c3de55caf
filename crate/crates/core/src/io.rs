//! Text formats for point clouds, diagrams, time series and feature tables.
//!
//! Point clouds are CSV (`x,y[,z]`, one point per line, no header) or a JSON
//! array of arrays. Diagrams are CSV lines `dim,birth,death` with `inf` for
//! essential classes, or JSON objects with a `null` death.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cloud::{CloudError, PointCloud};
use crate::diagram::{PersistenceDiagram, PersistencePair};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    File {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Cloud(#[from] CloudError),
}

/// How finite numbers are written.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NumberFormat {
    /// Ten decimals with trailing zeros trimmed: `1.7320508076`, `1.9`, `0`.
    #[default]
    Fixed,
    /// Shortest representation that parses back to the same `f64`.
    Full,
}

impl NumberFormat {
    pub fn format(self, v: f64) -> String {
        if v.is_nan() {
            return "nan".into();
        }
        if v.is_infinite() {
            return if v > 0.0 { "inf" } else { "-inf" }.into();
        }
        let s = match self {
            NumberFormat::Full if v == 0.0 || (1e-5..1e16).contains(&v.abs()) => format!("{v}"),
            NumberFormat::Full => format!("{v:e}"),
            NumberFormat::Fixed => {
                let s = format!("{v:.10}");
                let s = s.trim_end_matches('0').trim_end_matches('.');
                s.to_string()
            }
        };
        if s == "-0" {
            "0".into()
        } else {
            s
        }
    }
}

/// Parses a decimal float; `inf`/`infinity` (any case, optional sign) and
/// `nan` are accepted.
pub fn parse_number(s: &str) -> Option<f64> {
    let t = s.trim();
    match t.to_ascii_lowercase().as_str() {
        "inf" | "+inf" | "infinity" | "+infinity" => Some(f64::INFINITY),
        "-inf" | "-infinity" => Some(f64::NEG_INFINITY),
        _ => t.parse().ok(),
    }
}

pub fn read_to_string(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_string(path: &Path, contents: &str) -> Result<(), IoError> {
    fs::write(path, contents).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })
}

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

/// Data lines of a CSV text with their 1-based line numbers; blank lines
/// and `#` comments are skipped.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields(line: usize, text: &str) -> Result<Vec<f64>, IoError> {
    text.split(',')
        .map(|f| {
            parse_number(f).ok_or_else(|| IoError::Parse {
                line,
                message: format!("'{}' is not a number", f.trim()),
            })
        })
        .collect()
}

pub fn parse_cloud_csv(text: &str) -> Result<PointCloud, IoError> {
    let mut rows = Vec::new();
    for (line, l) in data_lines(text) {
        let row = parse_fields(line, l)?;
        if let Some(first) = rows.first() {
            let first: &Vec<f64> = first;
            if first.len() != row.len() {
                return Err(IoError::Parse {
                    line,
                    message: format!("expected {} coordinates, found {}", first.len(), row.len()),
                });
            }
        }
        if row.iter().any(|v| !v.is_finite()) {
            return Err(IoError::Parse {
                line,
                message: "coordinates must be finite".into(),
            });
        }
        rows.push(row);
    }
    Ok(PointCloud::from_rows(&rows, 2)?)
}

pub fn parse_cloud_json(text: &str) -> Result<PointCloud, IoError> {
    let rows: Vec<Vec<f64>> = serde_json::from_str(text)?;
    Ok(PointCloud::from_rows(&rows, 2)?)
}

pub fn format_cloud_csv(cloud: &PointCloud, fmt: NumberFormat) -> String {
    let mut out = String::new();
    for p in cloud.points() {
        let fields: Vec<String> = p.iter().map(|&v| fmt.format(v)).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn format_cloud_json(cloud: &PointCloud) -> String {
    let rows: Vec<&[f64]> = cloud.points().collect();
    serde_json::to_string(&rows).expect("finite coordinates serialise")
}

/// Reads a cloud, choosing JSON for a `.json` extension and CSV otherwise.
pub fn read_cloud(path: &Path) -> Result<PointCloud, IoError> {
    let text = read_to_string(path)?;
    if is_json(path) {
        parse_cloud_json(&text)
    } else {
        parse_cloud_csv(&text)
    }
}

pub fn write_cloud(path: &Path, cloud: &PointCloud, fmt: NumberFormat) -> Result<(), IoError> {
    let text = if is_json(path) {
        format_cloud_json(cloud)
    } else {
        format_cloud_csv(cloud, fmt)
    };
    write_string(path, &text)
}

/// `dim,birth,death` lines for the pairs of one dimension.
pub fn format_pairs_csv(dim: usize, pairs: &[PersistencePair], fmt: NumberFormat) -> String {
    let mut out = String::new();
    for p in pairs {
        writeln!(out, "{dim},{},{}", fmt.format(p.birth), fmt.format(p.death)).unwrap();
    }
    out
}

pub fn format_diagram_csv(diagram: &PersistenceDiagram, fmt: NumberFormat) -> String {
    (0..diagram.num_dims())
        .map(|p| format_pairs_csv(p, diagram.dim(p), fmt))
        .collect()
}

pub fn parse_diagram_csv(text: &str) -> Result<PersistenceDiagram, IoError> {
    let mut diagram = PersistenceDiagram::default();
    for (line, l) in data_lines(text) {
        let fields: Vec<&str> = l.split(',').collect();
        let bad = |message: String| IoError::Parse { line, message };
        if fields.len() != 3 {
            return Err(bad(format!("expected dim,birth,death, found {} fields", fields.len())));
        }
        let dim: usize = fields[0]
            .trim()
            .parse()
            .map_err(|_| bad(format!("'{}' is not a dimension", fields[0].trim())))?;
        let birth = parse_number(fields[1]).ok_or_else(|| bad(format!("bad birth '{}'", fields[1])))?;
        let death = parse_number(fields[2]).ok_or_else(|| bad(format!("bad death '{}'", fields[2])))?;
        diagram.push(dim, checked_pair(birth, death).map_err(bad)?);
    }
    Ok(diagram)
}

fn checked_pair(birth: f64, death: f64) -> Result<PersistencePair, String> {
    if !birth.is_finite() || death.is_nan() || death < birth {
        return Err(format!("invalid pair ({birth}, {death})"));
    }
    Ok(PersistencePair { birth, death })
}

#[derive(Serialize, Deserialize)]
struct JsonPair {
    dim: usize,
    birth: f64,
    death: Option<f64>,
}

pub fn format_diagram_json(diagram: &PersistenceDiagram) -> String {
    let pairs: Vec<JsonPair> = diagram
        .iter()
        .map(|(dim, p)| JsonPair {
            dim,
            birth: p.birth,
            death: (!p.is_essential()).then_some(p.death),
        })
        .collect();
    serde_json::to_string_pretty(&pairs).expect("finite values serialise")
}

pub fn parse_diagram_json(text: &str) -> Result<PersistenceDiagram, IoError> {
    let pairs: Vec<JsonPair> = serde_json::from_str(text)?;
    let mut diagram = PersistenceDiagram::default();
    for (i, p) in pairs.into_iter().enumerate() {
        let pair = checked_pair(p.birth, p.death.unwrap_or(f64::INFINITY)).map_err(|message| {
            IoError::Parse {
                line: i + 1,
                message,
            }
        })?;
        diagram.push(p.dim, pair);
    }
    Ok(diagram)
}

pub fn read_diagram(path: &Path) -> Result<PersistenceDiagram, IoError> {
    let text = read_to_string(path)?;
    if is_json(path) {
        parse_diagram_json(&text)
    } else {
        parse_diagram_csv(&text)
    }
}

/// A numeric series: values separated by commas, whitespace or newlines.
pub fn parse_series(text: &str) -> Result<Vec<f64>, IoError> {
    let mut out = Vec::new();
    for (line, l) in data_lines(text) {
        for field in l.split(|c: char| c == ',' || c.is_whitespace()).filter(|f| !f.is_empty()) {
            match parse_number(field) {
                Some(v) if v.is_finite() => out.push(v),
                _ => {
                    return Err(IoError::Parse {
                        line,
                        message: format!("'{field}' is not a finite number"),
                    })
                }
            }
        }
    }
    Ok(out)
}

/// One row per sample, preceded by a header: `sample,<columns...>`.
pub fn format_features_csv(
    columns: &[String],
    rows: &[(String, Vec<f64>)],
    fmt: NumberFormat,
) -> String {
    let mut out = String::from("sample");
    for c in columns {
        out.push(',');
        out.push_str(c);
    }
    out.push('\n');
    for (name, values) in rows {
        out.push_str(name);
        for v in values {
            out.push(',');
            out.push_str(&fmt.format(*v));
        }
        out.push('\n');
    }
    out
}

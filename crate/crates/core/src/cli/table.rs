use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Value};

use super::format::{human, num};
use super::CliError;
use crate::inverse::{r_squared, FitRecord};

/// Rows No. 2–20 of the Cleveland egg-shaped sewer table, in feet.
pub const BUNDLED_TABLE: &str = include_str!("../../../../data/table1.csv");

const REQUIRED: [&str; 4] = ["L", "B", "w", "A"];
const OPTIONAL: [&str; 2] = ["No.", "S"];

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub no: Option<String>,
    pub s: Option<String>,
    pub fit: FitRecord,
    pub predicted: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Batch {
    pub rows: Vec<Row>,
    /// Needs at least two rows with varying `A`.
    pub r_squared: Option<f64>,
    pub warnings: Vec<String>,
}

/// `"L(ft)"` → `"L"`, `" No "` → `"No."`.
fn normalize_header(raw: &str) -> String {
    let trimmed = raw.trim().trim_start_matches('\u{feff}').trim();
    let base = match trimmed.find('(') {
        Some(i) if trimmed.ends_with(')') => trimmed[..i].trim(),
        _ => trimmed,
    };
    if base == "No" {
        "No.".to_string()
    } else {
        base.to_string()
    }
}

fn parse_overrides(columns: &[String]) -> Result<BTreeMap<String, String>, CliError> {
    let mut map = BTreeMap::new();
    for mapping in columns {
        let (key, header) = mapping.split_once('=').ok_or_else(|| {
            CliError::input(format!("column mapping {mapping:?} is not KEY=HEADER"))
        })?;
        let key = key.trim();
        if !REQUIRED.contains(&key) && !OPTIONAL.contains(&key) {
            return Err(CliError::input(format!("unknown column key {key:?}")));
        }
        map.insert(key.to_string(), header.trim().to_string());
    }
    Ok(map)
}

fn column_index(
    headers: &[String],
    raw: &csv::StringRecord,
    key: &str,
    overrides: &BTreeMap<String, String>,
) -> Option<usize> {
    match overrides.get(key) {
        Some(name) => raw.iter().position(|h| h.trim() == name).or_else(|| {
            let name = normalize_header(name);
            headers.iter().position(|h| *h == name)
        }),
        None => headers.iter().position(|h| h == key),
    }
}

fn parse_field(record: &csv::StringRecord, idx: usize, key: &str) -> Result<f64, String> {
    let field = record
        .get(idx)
        .ok_or_else(|| format!("missing {key}"))?
        .trim();
    field
        .parse::<f64>()
        .map_err(|_| format!("{key} = {field:?} is not a number"))
}

pub fn process(text: &str, columns: &[String]) -> Result<Batch, CliError> {
    let overrides = parse_overrides(columns)?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(text.as_bytes());
    let raw_headers = reader
        .headers()
        .map_err(|e| CliError::input(format!("cannot read CSV header: {e}")))?
        .clone();
    let headers: Vec<String> = raw_headers.iter().map(normalize_header).collect();

    let mut idx = BTreeMap::new();
    for key in REQUIRED {
        let i = column_index(&headers, &raw_headers, key, &overrides)
            .ok_or_else(|| CliError::input(format!("missing column {key}")))?;
        idx.insert(key, i);
    }
    let no_idx = column_index(&headers, &raw_headers, "No.", &overrides);
    let s_idx = column_index(&headers, &raw_headers, "S", &overrides);

    let mut rows = Vec::new();
    let mut warnings = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let line = line + 2;
        let record = match record {
            Ok(r) => r,
            Err(e) => {
                warnings.push(format!("line {line}: {e}"));
                continue;
            }
        };
        if record.iter().all(|f| f.trim().is_empty()) {
            continue;
        }
        let parsed = (|| -> Result<Row, String> {
            let length = parse_field(&record, idx["L"], "L")?;
            let breadth = parse_field(&record, idx["B"], "B")?;
            let w = parse_field(&record, idx["w"], "w")?;
            let observed = parse_field(&record, idx["A"], "A")?;
            let fit = FitRecord::area(length, breadth, w, observed).map_err(|e| e.to_string())?;
            let text_at =
                |i: Option<usize>| i.and_then(|i| record.get(i)).map(|s| s.trim().to_string());
            Ok(Row {
                no: text_at(no_idx),
                s: text_at(s_idx),
                predicted: fit.predicted,
                fit,
            })
        })();
        match parsed {
            Ok(row) => rows.push(row),
            Err(e) => warnings.push(format!("line {line}: {e}; row skipped")),
        }
    }
    if rows.is_empty() {
        return Err(CliError::input("no data rows"));
    }
    let observed: Vec<f64> = rows.iter().map(|r| r.fit.observed).collect();
    let predicted: Vec<f64> = rows.iter().map(|r| r.predicted).collect();
    let r_squared = r_squared(&observed, &predicted).ok();
    Ok(Batch {
        rows,
        r_squared,
        warnings,
    })
}

pub fn run(path: Option<&Path>, columns: &[String]) -> Result<Batch, CliError> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::input(format!("cannot read {}: {e}", p.display())))?;
            process(&text, columns)
        }
        None => process(BUNDLED_TABLE, columns),
    }
}

/// The model-area column printed alongside the bundled table.
pub fn bundled_model_column() -> Vec<f64> {
    let mut reader = csv::Reader::from_reader(BUNDLED_TABLE.as_bytes());
    reader
        .records()
        .filter_map(|r| r.ok())
        .filter_map(|r| r.get(6).and_then(|f| f.trim().parse().ok()))
        .collect()
}

impl Batch {
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "No.": r.no,
                    "L": num(r.fit.length),
                    "B": num(r.fit.breadth),
                    "S": r.s,
                    "w": r.fit.w.map_or(Value::Null, num),
                    "A": num(r.fit.observed),
                    "area_model": num(r.predicted),
                })
            })
            .collect();
        json!({
            "rows": rows,
            "r_squared": self.r_squared.map_or(Value::Null, num),
            "warnings": self.warnings.len(),
        })
    }

    pub fn to_table(&self) -> String {
        let mut s = format!(
            "{:>4} {:>8} {:>8} {:>8} {:>10} {:>12}\n",
            "No.", "L", "B", "w", "A", "model area"
        );
        for r in &self.rows {
            s += &format!(
                "{:>4} {:>8} {:>8} {:>8} {:>10} {:>12}\n",
                r.no.as_deref().unwrap_or("-"),
                human(r.fit.length),
                human(r.fit.breadth),
                r.fit.w.map_or_else(|| "-".to_string(), human),
                human(r.fit.observed),
                human(r.predicted)
            );
        }
        let r2 = self.r_squared.map_or_else(|| "n/a".to_string(), human);
        s += &format!(
            "rows {}  R^2 {}  warnings {}\n",
            self.rows.len(),
            r2,
            self.warnings.len()
        );
        s
    }
}

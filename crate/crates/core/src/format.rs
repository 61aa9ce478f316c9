//! File formats: paving and map JSON, OEIS-style b-files, and the tabular
//! renderings used by the command-line tool.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::map2d::Map2D;
use crate::paving::Paving;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("b-file line {line}: {reason}")]
    BFile { line: usize, reason: String },
    #[error("unknown output format {0:?} (expected table, json, csv or bfile)")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
    /// `n a(n)` lines; integer sequences only.
    Bfile,
}

impl FromStr for OutputFormat {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "table" => Ok(OutputFormat::Table),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "bfile" => Ok(OutputFormat::Bfile),
            _ => Err(FormatError::UnknownFormat(s.to_string())),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Table => "table",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Bfile => "bfile",
        })
    }
}

fn read(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Parses a paving from either JSON form. Axiom violations surface as
/// JSON errors carrying the axiom's name.
pub fn parse_paving(json: &str) -> Result<Paving, FormatError> {
    Ok(serde_json::from_str(json)?)
}

pub fn read_paving(path: &Path) -> Result<Paving, FormatError> {
    parse_paving(&read(path)?)
}

pub fn parse_map(json: &str) -> Result<Map2D, FormatError> {
    Ok(serde_json::from_str(json)?)
}

pub fn read_map(path: &Path) -> Result<Map2D, FormatError> {
    parse_map(&read(path)?)
}

pub fn paving_to_json(p: &Paving) -> String {
    serde_json::to_string(p).expect("pavings always serialize")
}

/// One entry of an integer sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceEntry {
    pub n: usize,
    #[serde(with = "decimal")]
    pub value: BigUint,
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Reads `n a(n)` lines, skipping blanks and `#` comments. Indices must
/// strictly increase.
pub fn parse_bfile(text: &str) -> Result<Vec<SequenceEntry>, FormatError> {
    let mut out: Vec<SequenceEntry> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: String| FormatError::BFile { line: i + 1, reason };
        let mut parts = line.split_whitespace();
        let (Some(n), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err(format!("expected two fields, got {line:?}")));
        };
        let n: usize = n.parse().map_err(|_| err(format!("bad index {n:?}")))?;
        let value: BigUint = v.parse().map_err(|_| err(format!("bad value {v:?}")))?;
        if let Some(last) = out.last() {
            if n <= last.n {
                return Err(err(format!("index {n} does not follow {}", last.n)));
            }
        }
        out.push(SequenceEntry { n, value });
    }
    Ok(out)
}

pub fn read_bfile(path: &Path) -> Result<Vec<SequenceEntry>, FormatError> {
    parse_bfile(&read(path)?)
}

pub fn write_bfile(entries: &[SequenceEntry]) -> String {
    entries.iter().map(|e| format!("{} {}\n", e.n, e.value)).collect()
}

/// First disagreement between a reference sequence and computed values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub expected: BigUint,
    pub found: Option<BigUint>,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.found {
            Some(v) => write!(f, "a({}) = {} expected, computed {}", self.n, self.expected, v),
            None => write!(f, "a({}) = {} expected, nothing computed", self.n, self.expected),
        }
    }
}

/// Compares `reference` against `computed`, where `computed[n]` is the
/// value at index `n`.
pub fn first_mismatch(reference: &[SequenceEntry], computed: &[BigUint]) -> Option<Mismatch> {
    reference.iter().find_map(|e| {
        let found = computed.get(e.n);
        (found != Some(&e.value)).then(|| Mismatch {
            n: e.n,
            expected: e.value.clone(),
            found: found.cloned(),
        })
    })
}

/// Renders `(index, value)` rows under a column title. `bfile` drops the
/// header and prints bare `n a(n)` lines.
pub fn render_sequence(title: &str, rows: &[SequenceEntry], format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => {
            let width = rows.iter().map(|r| r.n.to_string().len()).max().unwrap_or(1).max(1);
            let mut s = format!("{:>width$}  {title}\n", "n");
            for r in rows {
                s.push_str(&format!("{:>width$}  {}\n", r.n, r.value));
            }
            s
        }
        OutputFormat::Csv => {
            let mut s = format!("n,{title}\n");
            for r in rows {
                s.push_str(&format!("{},{}\n", r.n, r.value));
            }
            s
        }
        OutputFormat::Json => serde_json::to_string_pretty(rows).expect("plain data") + "\n",
        OutputFormat::Bfile => write_bfile(rows),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(n: usize, v: u64) -> SequenceEntry {
        SequenceEntry { n, value: BigUint::from(v) }
    }

    #[test]
    fn bfile_round_trip() {
        let text = "# comment\n\n1 1\n2 4\n3 25\n";
        let e = parse_bfile(text).unwrap();
        assert_eq!(e, vec![entry(1, 1), entry(2, 4), entry(3, 25)]);
        assert_eq!(parse_bfile(&write_bfile(&e)).unwrap(), e);
    }

    #[test]
    fn bfile_errors() {
        assert!(matches!(parse_bfile("1 1\n1 2\n"), Err(FormatError::BFile { line: 2, .. })));
        assert!(matches!(parse_bfile("1\n"), Err(FormatError::BFile { line: 1, .. })));
        assert!(matches!(parse_bfile("x 1\n"), Err(FormatError::BFile { .. })));
        assert!(matches!(parse_bfile("1 -1\n"), Err(FormatError::BFile { .. })));
        assert!(matches!(parse_bfile("1 2 3\n"), Err(FormatError::BFile { .. })));
    }

    #[test]
    fn mismatch_reports_first_index() {
        let reference = vec![entry(1, 1), entry(2, 4), entry(3, 26), entry(4, 0)];
        let computed: Vec<BigUint> = [0u64, 1, 4, 25].iter().map(|&v| BigUint::from(v)).collect();
        let m = first_mismatch(&reference, &computed).unwrap();
        assert_eq!(m.n, 3);
        assert_eq!(m.found, Some(BigUint::from(25u32)));
        assert!(first_mismatch(&reference[..2], &computed).is_none());
        let short = first_mismatch(&[entry(9, 1)], &computed).unwrap();
        assert_eq!(short.found, None);
    }

    #[test]
    fn output_formats() {
        assert_eq!("JSON".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
        assert!("xml".parse::<OutputFormat>().is_err());
        let rows = vec![entry(2, 1), entry(10, 2146)];
        assert_eq!(render_sequence("x", &rows, OutputFormat::Csv), "n,x\n2,1\n10,2146\n");
        assert_eq!(render_sequence("x", &rows, OutputFormat::Table), " n  x\n 2  1\n10  2146\n");
        assert_eq!(render_sequence("x", &rows, OutputFormat::Bfile), "2 1\n10 2146\n");
        let back: Vec<SequenceEntry> = serde_json::from_str(&render_sequence("x", &rows, OutputFormat::Json)).unwrap();
        assert_eq!(back, rows);
        assert_eq!(render_sequence("x", &[], OutputFormat::Table), "n  x\n");
    }

    #[test]
    fn paving_json_errors_name_the_axiom() {
        let err = parse_paving(r#"{"n":2,"alpha":[2,1],"beta":[1,2],"gamma":[2,1]}"#).unwrap_err();
        assert!(err.to_string().contains("beta"), "{err}");
        let p = parse_paving(crate::fixtures::P3_JSON).unwrap();
        assert_eq!(parse_paving(&paving_to_json(&p)).unwrap(), p);
    }
}

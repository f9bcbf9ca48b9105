//! Knot tables in CSV form, census reports and the candidate matcher.
//!
//! Schema (header required, `#` starts a comment line):
//!
//! ```text
//! name,crossings,alexander,signature,genus3,genus4_min,genus4_max,slice,seifert,concordant_to
//! 3_1,3,1;-1;1,-2,1,1,1,not_slice,"-1,1;0,-1",
//! ```
//!
//! Empty cells are unknown values. An empty `genus4_min` defaults to
//! `⌈|σ|/2⌉` and an empty `genus4_max` to the three-genus. An empty
//! `alexander` is filled from the Seifert matrix when one is given.

mod census;
pub mod fixtures;
mod matcher;

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use crate::bounds::{Genus4, KnotRecord, KnotSum, SliceStatus};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::seifert::SeifertMatrix;

pub use census::{census, census_with, CensusOptions, CensusReport, CensusRow};
pub use matcher::{evaluate_sum, match_candidates, CandidateMatch, SumInvariants};

pub const COLUMNS: [&str; 10] = [
    "name",
    "crossings",
    "alexander",
    "signature",
    "genus3",
    "genus4_min",
    "genus4_max",
    "slice",
    "seifert",
    "concordant_to",
];

/// Validated knot records with unique names, in input order.
#[derive(Debug, Clone, Default)]
pub struct KnotTable {
    records: Vec<KnotRecord>,
    source_path: String,
    index: HashMap<String, usize>,
}

impl PartialEq for KnotTable {
    fn eq(&self, other: &Self) -> bool {
        self.records == other.records && self.source_path == other.source_path
    }
}

impl KnotTable {
    /// Builds a table, rejecting invalid records and duplicate names.
    pub fn from_records(records: Vec<KnotRecord>, source_path: &str) -> Result<Self> {
        let mut table = KnotTable { source_path: source_path.to_string(), ..Default::default() };
        for r in records {
            table.push(r)?;
        }
        Ok(table)
    }

    fn push(&mut self, r: KnotRecord) -> Result<()> {
        r.validate()?;
        if self.index.contains_key(&r.name) {
            return Err(Error::InconsistentRecord(format!("duplicate name {}", r.name)));
        }
        self.index.insert(r.name.clone(), self.records.len());
        self.records.push(r);
        Ok(())
    }

    pub fn records(&self) -> &[KnotRecord] {
        &self.records
    }

    pub fn source_path(&self) -> &str {
        &self.source_path
    }

    pub fn get(&self, name: &str) -> Option<&KnotRecord> {
        self.index.get(name).map(|&i| &self.records[i])
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// A rejected data row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowError {
    pub line: u64,
    pub reason: String,
}

impl fmt::Display for RowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.reason)
    }
}

/// Result of parsing a table: accepted records plus per-row diagnostics.
#[derive(Debug, Clone)]
pub struct ParsedTable {
    pub table: KnotTable,
    pub rejected: Vec<RowError>,
    pub warnings: Vec<String>,
}

fn optional<T>(cell: &str, parse: impl FnOnce(&str) -> Result<T>) -> Result<Option<T>> {
    let cell = cell.trim();
    if cell.is_empty() {
        Ok(None)
    } else {
        parse(cell).map(Some)
    }
}

fn number<T: std::str::FromStr>(what: &'static str) -> impl Fn(&str) -> Result<T> {
    move |s| s.parse().map_err(|_| Error::Parse(format!("bad {what} {s:?}")))
}

fn parse_row(row: &csv::StringRecord) -> Result<KnotRecord> {
    let cell = |i: usize| row.get(i).unwrap_or("");
    let name = cell(0).trim().to_string();
    if name.is_empty() {
        return Err(Error::Parse("empty name".into()));
    }
    let crossings = number::<u32>("crossing number")(cell(1).trim())?;
    let alexander = optional(cell(2), |s| {
        let p: LaurentPoly = s.parse()?;
        if !p.is_knot_polynomial() {
            return Err(Error::Parse("not a knot polynomial".into()));
        }
        Ok(p)
    })
    .map_err(|e| match e {
        Error::ZeroPolynomial => Error::Parse("not a knot polynomial".into()),
        e => e,
    })?;
    let signature = optional(cell(3), number::<i64>("signature"))?;
    let genus3 = optional(cell(4), number::<u32>("genus3"))?;
    let g4_lo = optional(cell(5), number::<u32>("genus4_min"))?;
    let g4_hi = optional(cell(6), number::<u32>("genus4_max"))?;
    let slice_status: SliceStatus = cell(7).parse()?;
    let seifert = optional(cell(8), |s| s.parse::<SeifertMatrix>())?;
    let concordant_to = optional(cell(9), |s| s.parse::<KnotSum>())?;

    let mut record = KnotRecord {
        name,
        crossings,
        alexander,
        signature,
        genus3,
        genus4: Genus4 { lo: 0, hi: g4_hi.or(genus3) },
        slice_status,
        seifert,
        concordant_to,
    };
    record.genus4.lo = g4_lo.unwrap_or_else(|| record.signature_bound());
    if record.alexander.is_none() {
        if let Some(v) = &record.seifert {
            record.alexander = Some(v.alexander()?);
        }
    }
    Ok(record)
}

fn reason(e: &Error) -> String {
    match e {
        Error::Parse(s) | Error::InvalidSeifert(s) => s.clone(),
        Error::InconsistentRecord(s) => match s.split_once(": ") {
            Some((_, why)) => why.to_string(),
            None => s.clone(),
        },
        e => e.to_string(),
    }
}

/// Parses and validates a table. Malformed rows are collected in
/// `rejected`; parsing fails only on a bad header or when every row fails.
pub fn parse_table(text: &str, source_path: &str) -> Result<ParsedTable> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .flexible(true)
        .from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| Error::BadSchema(e.to_string()))?
        .clone();
    let names: Vec<&str> = header.iter().map(str::trim).collect();
    if names != COLUMNS {
        return Err(Error::BadSchema(format!("expected header {}", COLUMNS.join(","))));
    }

    let mut table = KnotTable { source_path: source_path.to_string(), ..Default::default() };
    let mut rejected = Vec::new();
    let mut rows = 0usize;
    for result in reader.records() {
        rows += 1;
        let (line, outcome) = match result {
            Ok(row) => {
                let line = row.position().map_or(0, |p| p.line());
                let outcome = if row.len() != COLUMNS.len() {
                    Err(Error::Parse(format!("expected {} fields, found {}", COLUMNS.len(), row.len())))
                } else {
                    parse_row(&row).and_then(|r| table.push(r))
                };
                (line, outcome)
            }
            Err(e) => (
                e.position().map_or(0, |p| p.line()),
                Err(Error::Parse(e.to_string())),
            ),
        };
        if let Err(e) = outcome {
            rejected.push(RowError { line, reason: reason(&e) });
        }
    }

    let mut warnings = Vec::new();
    if rows == 0 {
        warnings.push("no records".to_string());
    } else if table.is_empty() {
        let first = &rejected[0];
        return Err(Error::Parse(format!("all {rows} rows rejected; first at {first}")));
    }
    Ok(ParsedTable { table, rejected, warnings })
}

/// Reads and parses a table file.
pub fn load_table(path: impl AsRef<Path>) -> Result<ParsedTable> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_table(&text, &path.display().to_string())
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(String::new, ToString::to_string)
}

/// Writes a table in the CSV schema; `parse_table` reads it back unchanged.
pub fn serialize_table(table: &KnotTable) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(COLUMNS).expect("writing to memory");
    for r in table.records() {
        w.write_record([
            r.name.clone(),
            r.crossings.to_string(),
            opt(&r.alexander),
            opt(&r.signature),
            opt(&r.genus3),
            r.genus4.lo.to_string(),
            opt(&r.genus4.hi),
            r.slice_status.as_str().to_string(),
            opt(&r.seifert),
            opt(&r.concordant_to),
        ])
        .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is UTF-8")
}

//! Line-oriented text format for cohomology tables.
//!
//! ```text
//! # comment
//! c1=-1
//! c2=2
//! alpha=1
//! -2 0 0
//! -1 0 1 0 0
//! ```
//!
//! Headers `c1=` and `c2=` are required; `alpha=`, `beta=`, `gamma=` are
//! optional. Data lines are `<n> <h0> <h1> [<h2> <h3>]` over a contiguous
//! ascending range of twists.

use std::collections::HashSet;
use std::fmt::{self, Write as _};

use rank2p3_core::tables::TableError;
use rank2p3_core::{ChernClasses, CohomologyRow, CohomologyTable, Error as CoreError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("input is not UTF-8")]
    NotUtf8,
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("unknown header {0}=")]
    UnknownHeader(String),
    #[error("duplicate header {0}=")]
    DuplicateHeader(&'static str),
    #[error("header after data")]
    HeaderAfterData,
    #[error("missing required header {0}=")]
    MissingHeader(&'static str),
    #[error("negative count")]
    NegativeCount,
    #[error("duplicate twist {0}")]
    DuplicateTwist(i64),
    #[error("non-contiguous window: expected n={expected}, found n={found}")]
    NonContiguous { expected: i64, found: i64 },
    #[error("no data lines")]
    NoRows,
    #[error(transparent)]
    Chern(CoreError),
    #[error(transparent)]
    Table(TableError),
}

/// A parse failure; `line` is 1-based, absent for whole-file problems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: Option<usize>,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.kind),
            None => write!(f, "{}", self.kind),
        }
    }
}

impl std::error::Error for ParseError {}

fn at(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line: Some(line), kind }
}

fn whole(kind: ParseErrorKind) -> ParseError {
    ParseError { line: None, kind }
}

#[derive(Default)]
struct Headers {
    c1: Option<i64>,
    c2: Option<i64>,
    alpha: Option<i64>,
    beta: Option<i64>,
    gamma: Option<i64>,
}

impl Headers {
    fn set(&mut self, key: &str, value: i64) -> Result<(), ParseErrorKind> {
        let (slot, name) = match key {
            "c1" => (&mut self.c1, "c1"),
            "c2" => (&mut self.c2, "c2"),
            "alpha" => (&mut self.alpha, "alpha"),
            "beta" => (&mut self.beta, "beta"),
            "gamma" => (&mut self.gamma, "gamma"),
            other => return Err(ParseErrorKind::UnknownHeader(other.to_string())),
        };
        if slot.replace(value).is_some() {
            return Err(ParseErrorKind::DuplicateHeader(name));
        }
        Ok(())
    }
}

fn int(token: &str) -> Result<i64, ParseErrorKind> {
    token
        .parse()
        .map_err(|_| ParseErrorKind::Malformed(format!("not an integer: {token:?}")))
}

fn count(token: &str) -> Result<u64, ParseErrorKind> {
    let v = int(token)?;
    u64::try_from(v).map_err(|_| ParseErrorKind::NegativeCount)
}

pub fn parse_table_bytes(bytes: &[u8]) -> Result<CohomologyTable, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|_| whole(ParseErrorKind::NotUtf8))?;
    parse_table(text)
}

pub fn parse_table(text: &str) -> Result<CohomologyTable, ParseError> {
    let mut headers = Headers::default();
    let mut rows = Vec::new();
    let mut n_min = None;
    let mut seen = HashSet::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some((key, value)) = line.split_once('=') {
            if !rows.is_empty() {
                return Err(at(line_no, ParseErrorKind::HeaderAfterData));
            }
            let value = int(value.trim()).map_err(|k| at(line_no, k))?;
            headers.set(key.trim(), value).map_err(|k| at(line_no, k))?;
            continue;
        }

        let tokens: Vec<_> = line.split_whitespace().collect();
        if !matches!(tokens.len(), 3 | 5) {
            let msg = format!("expected `<n> <h0> <h1> [<h2> <h3>]`, got {} fields", tokens.len());
            return Err(at(line_no, ParseErrorKind::Malformed(msg)));
        }
        let n = int(tokens[0]).map_err(|k| at(line_no, k))?;
        let counts = tokens[1..].iter().map(|t| count(t)).collect::<Result<Vec<_>, _>>();
        let counts = counts.map_err(|k| at(line_no, k))?;
        if !seen.insert(n) {
            return Err(at(line_no, ParseErrorKind::DuplicateTwist(n)));
        }
        let expected = n_min.map(|m: i64| m + rows.len() as i64).unwrap_or(n);
        if n != expected {
            return Err(at(line_no, ParseErrorKind::NonContiguous { expected, found: n }));
        }
        n_min.get_or_insert(n);
        rows.push(CohomologyRow {
            h0: counts[0],
            h1: counts[1],
            h2: counts.get(2).copied(),
            h3: counts.get(3).copied(),
        });
    }

    let c1 = headers.c1.ok_or(whole(ParseErrorKind::MissingHeader("c1")))?;
    let c2 = headers.c2.ok_or(whole(ParseErrorKind::MissingHeader("c2")))?;
    let chern = ChernClasses::new(c1, c2).map_err(|e| whole(ParseErrorKind::Chern(e)))?;
    let n_min = n_min.ok_or(whole(ParseErrorKind::NoRows))?;
    let table = CohomologyTable::new(chern, headers.alpha, headers.gamma, n_min, rows)
        .map_err(|e| whole(ParseErrorKind::Table(e)))?;
    Ok(table.with_beta(headers.beta))
}

/// Text form of `table`. `h2` and `h3` are written only when both are
/// known.
pub fn serialize(table: &CohomologyTable) -> String {
    let mut out = String::new();
    let chern = table.chern();
    writeln!(out, "c1={}", chern.c1).unwrap();
    writeln!(out, "c2={}", chern.c2).unwrap();
    for (key, value) in [("alpha", table.alpha()), ("beta", table.beta()), ("gamma", table.gamma())] {
        if let Some(v) = value {
            writeln!(out, "{key}={v}").unwrap();
        }
    }
    for (n, row) in table.rows() {
        write!(out, "{n} {} {}", row.h0, row.h1).unwrap();
        if let (Some(h2), Some(h3)) = (row.h2, row.h3) {
            write!(out, " {h2} {h3}").unwrap();
        }
        out.push('\n');
    }
    out
}

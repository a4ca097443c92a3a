//! The problem file format.
//!
//! ```json
//! {
//!   "schema_version": "tropahp/1",
//!   "name": "vacation",
//!   "criteria": ["cost", "sight-seeing"],
//!   "alternatives": ["S", "Q"],
//!   "criteria_matrix": [[1, "1/5"], [5, 1]],
//!   "alternative_matrices": [[[1, 3], ["1/3", 1]], [[1, 2], [0.5, 1]]]
//! }
//! ```
//!
//! Entries are JSON numbers or strings holding a decimal or a fraction `p/q`.
//! Inside the HTTP service an entry may also be `null`, meaning "the
//! reciprocal of the mirrored entry".

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use tropahp_core::ahp::DecisionProblem;
use tropahp_core::{Tolerance, TropMatrix};

use crate::error::{Error, Result};

pub const SCHEMA_VERSION: &str = "tropahp/1";

/// One judgment: a plain number or an exact fraction string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Number(f64),
    Text(String),
}

impl Entry {
    pub fn value(&self) -> std::result::Result<f64, String> {
        match self {
            Entry::Number(x) => Ok(*x),
            Entry::Text(s) => parse_fraction(s),
        }
    }
}

impl From<f64> for Entry {
    fn from(x: f64) -> Self {
        Entry::Number(x)
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Number(x) => write!(f, "{x}"),
            Entry::Text(s) => write!(f, "\"{s}\""),
        }
    }
}

/// Parses `"7"`, `"0.25"` or `"1/7"`. Numerator and denominator are parsed
/// separately and divided once, so `1/7` carries a single rounding.
pub fn parse_fraction(s: &str) -> std::result::Result<f64, String> {
    let s = s.trim();
    let num = |t: &str| -> std::result::Result<f64, String> {
        t.trim()
            .parse::<f64>()
            .map_err(|_| format!("'{s}' is not a number or fraction"))
    };
    let v = match s.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (num(p)?, num(q)?);
            if q == 0.0 {
                return Err(format!("'{s}' divides by zero"));
            }
            p / q
        }
        None => num(s)?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("'{s}' is not finite"))
    }
}

pub type EntryMatrix = Vec<Vec<Option<Entry>>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub schema_version: String,
    pub name: String,
    pub criteria: Vec<String>,
    pub alternatives: Vec<String>,
    pub criteria_matrix: EntryMatrix,
    pub alternative_matrices: Vec<EntryMatrix>,
    /// Revision counter maintained by the session store.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub version: Option<u64>,
}

impl ProblemDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            source_name: "document".into(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Converts to a validated decision problem.
    pub fn to_problem(&self, tol: &Tolerance) -> Result<DecisionProblem> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::invalid(
                "schema_version",
                format!("expected \"{SCHEMA_VERSION}\", found \"{}\"", self.schema_version),
            ));
        }
        let criteria = to_matrix(&self.criteria_matrix, "criteria_matrix")?;
        let alternatives = self
            .alternative_matrices
            .iter()
            .enumerate()
            .map(|(k, m)| to_matrix(m, &format!("alternative_matrices[{k}]")))
            .collect::<Result<Vec<_>>>()?;
        DecisionProblem::new(
            self.criteria.clone(),
            self.alternatives.clone(),
            criteria,
            alternatives,
            tol,
        )
        .map_err(Error::from_core)
    }

    /// Fills every `null` off-diagonal entry with the reciprocal of its
    /// mirror and every `null` diagonal entry with one.
    pub fn complete_reciprocals(&mut self) -> Result<()> {
        complete_matrix(&mut self.criteria_matrix, "criteria_matrix")?;
        for (k, m) in self.alternative_matrices.iter_mut().enumerate() {
            complete_matrix(m, &format!("alternative_matrices[{k}]"))?;
        }
        Ok(())
    }

    /// Marks as `null` every entry whose mirror was changed relative to
    /// `previous` while it stayed the same, so that [`complete_reciprocals`]
    /// re-derives it from the edited side.
    ///
    /// [`complete_reciprocals`]: ProblemDocument::complete_reciprocals
    pub fn follow_edits(&mut self, previous: &ProblemDocument) {
        follow_matrix(&mut self.criteria_matrix, &previous.criteria_matrix);
        for (m, old) in self
            .alternative_matrices
            .iter_mut()
            .zip(&previous.alternative_matrices)
        {
            follow_matrix(m, old);
        }
    }

    /// The matrix addressed by `target`: `None` for the criteria matrix,
    /// `Some(k)` for the `k`-th alternative matrix.
    pub fn matrix_mut(&mut self, target: Option<usize>) -> Option<&mut EntryMatrix> {
        match target {
            None => Some(&mut self.criteria_matrix),
            Some(k) => self.alternative_matrices.get_mut(k),
        }
    }
}

fn to_matrix(m: &EntryMatrix, field: &str) -> Result<TropMatrix> {
    let n = m.len();
    let mut rows = Vec::with_capacity(n);
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::invalid(
                format!("{field}[{i}]"),
                format!("row has {} entries, matrix has {n} rows", row.len()),
            ));
        }
        let mut out = Vec::with_capacity(n);
        for (j, e) in row.iter().enumerate() {
            let at = || format!("{field}[{i}][{j}]");
            let e = e.as_ref().ok_or_else(|| Error::invalid(at(), "missing entry"))?;
            let v = e.value().map_err(|msg| Error::invalid(at(), msg))?;
            if v <= 0.0 {
                return Err(Error::invalid(at(), format!("entry {e} must be positive")));
            }
            out.push(v);
        }
        rows.push(out);
    }
    if rows.is_empty() {
        return Err(Error::invalid(field, "matrix is empty"));
    }
    TropMatrix::from_rows(&rows).map_err(|e| Error::invalid(field, e.to_string()))
}

#[allow(clippy::needless_range_loop)]
fn complete_matrix(m: &mut EntryMatrix, field: &str) -> Result<()> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::invalid(field, "matrix is not square"));
    }
    for i in 0..n {
        if m[i][i].is_none() {
            m[i][i] = Some(Entry::Number(1.0));
        }
        for j in 0..n {
            if i == j || m[i][j].is_some() {
                continue;
            }
            let mirror = m[j][i].as_ref().ok_or_else(|| {
                Error::invalid(
                    format!("{field}[{i}][{j}]"),
                    "entry and its mirror are both missing",
                )
            })?;
            m[i][j] =
                Some(reciprocal(mirror).map_err(|msg| Error::invalid(format!("{field}[{j}][{i}]"), msg))?);
        }
    }
    Ok(())
}

/// `1/x`, kept as an exact fraction string when `x` is a small fraction.
fn reciprocal(e: &Entry) -> std::result::Result<Entry, String> {
    if let Entry::Text(s) = e {
        if let Some((p, q)) = s.split_once('/') {
            let (p, q) = (p.trim(), q.trim());
            if p == "1" {
                if let Ok(n) = q.parse::<u32>() {
                    return Ok(Entry::Number(n.into()));
                }
                return Ok(Entry::Text(q.to_string()));
            }
            return Ok(Entry::Text(format!("{q}/{p}")));
        }
        if s.trim().parse::<u64>().is_ok() {
            return Ok(Entry::Text(format!("1/{}", s.trim())));
        }
    }
    let v = e.value()?;
    if v <= 0.0 {
        return Err(format!("entry {e} must be positive"));
    }
    if v.fract() == 0.0 && v < 1e15 {
        return Ok(Entry::Text(format!("1/{v}")));
    }
    Ok(Entry::Number(1.0 / v))
}

fn follow_matrix(m: &mut EntryMatrix, old: &EntryMatrix) {
    let n = m.len();
    if old.len() != n || old.iter().any(|r| r.len() != n) || m.iter().any(|r| r.len() != n) {
        return;
    }
    let mut cleared = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && m[i][j] != old[i][j] && m[j][i] == old[j][i] {
                cleared.push((j, i));
            }
        }
    }
    for (i, j) in cleared {
        m[i][j] = None;
    }
}

/// Reads and validates a problem file.
pub fn load_problem(path: &Path, tol: &Tolerance) -> Result<(ProblemDocument, DecisionProblem)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    let doc = ProblemDocument::from_json(&text).map_err(|e| e.with_source_name(path))?;
    let problem = doc.to_problem(tol)?;
    Ok((doc, problem))
}

/// A single matrix file: either a bare array of rows or `{"matrix": ...}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum MatrixFile {
    Named {
        #[serde(default)]
        name: Option<String>,
        matrix: EntryMatrix,
    },
    Bare(EntryMatrix),
}

/// Reads a matrix file. Problem documents are accepted too, yielding every
/// matrix they contain.
pub fn load_matrices(path: &Path) -> Result<Vec<(String, TropMatrix)>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Error::Parse {
        source_name: path.display().to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if value.get("schema_version").is_some() {
        let doc = ProblemDocument::from_json(&text).map_err(|e| e.with_source_name(path))?;
        let mut out = vec![(
            "criteria".to_string(),
            to_matrix(&doc.criteria_matrix, "criteria_matrix")?,
        )];
        for (k, m) in doc.alternative_matrices.iter().enumerate() {
            let label = doc
                .criteria
                .get(k)
                .cloned()
                .unwrap_or_else(|| format!("#{}", k + 1));
            out.push((label, to_matrix(m, &format!("alternative_matrices[{k}]"))?));
        }
        return Ok(out);
    }
    let file: MatrixFile = serde_json::from_value(value)
        .map_err(|e| Error::invalid(path.display().to_string(), format!("not a matrix file: {e}")))?;
    Ok(match file {
        MatrixFile::Named { name, matrix } => {
            vec![(
                name.unwrap_or_else(|| "matrix".into()),
                to_matrix(&matrix, "matrix")?,
            )]
        }
        MatrixFile::Bare(matrix) => vec![("matrix".into(), to_matrix(&matrix, "matrix")?)],
    })
}

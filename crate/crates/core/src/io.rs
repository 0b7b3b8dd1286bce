//! The JSON problem-file format.
//!
//! A problem file is a single JSON document carrying the matrices "F", "G",
//! "B" as arrays of arrays of exact rational strings ("3", "-7/2"), plus
//! optional boundary data "y0_p" / "yM_q", an input sequence "inputs", a
//! horizon "M", a "target" column, an arrival override "k1", and a free-form
//! "note". Keeping every number a string keeps the files exact and
//! diff-friendly; nothing is ever rounded on the way in or out.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::RMatrix;
use crate::pencil::{DescriptorSystem, QwDecomposition};
use crate::rational::{format_rational, parse_rational};
use crate::solver::BoundaryData;

/// Raw (string-level) contents of a problem file. Field access goes through
/// the typed accessors, which do all the parsing and dimension checking.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemFile {
    #[serde(rename = "F")]
    pub f: Vec<Vec<String>>,
    #[serde(rename = "G")]
    pub g: Vec<Vec<String>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y0_p: Option<Vec<String>>,
    #[serde(rename = "yM_q", default, skip_serializing_if = "Option::is_none")]
    pub ym_q: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inputs: Option<Vec<Vec<String>>>,
    #[serde(rename = "M", default, skip_serializing_if = "Option::is_none")]
    pub horizon: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k1: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SystemFile {
    pub fn from_path(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {}", path.display(), e)))?;
        Self::parse_str(&text)
    }

    pub fn parse_str(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {}", e)))
    }

    /// A file carrying just the system matrices.
    pub fn from_parts(f: &RMatrix, g: &RMatrix, b: &RMatrix) -> Self {
        SystemFile {
            f: matrix_strings(f),
            g: matrix_strings(g),
            b: matrix_strings(b),
            ..SystemFile::default()
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("system file serializes")
    }

    /// Parse and validate the matrices into a system. Dimension violations
    /// inside the file are parse errors: the document broke its own format.
    pub fn system(&self) -> Result<DescriptorSystem> {
        let f = parse_matrix(&self.f)?;
        let g = parse_matrix(&self.g)?;
        let b = parse_matrix(&self.b)?;
        DescriptorSystem::new(f, g, b).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Boundary data for a finite-horizon run; requires "y0_p", "yM_q"
    /// and "M" to be present.
    pub fn boundary_data(&self, dec: &QwDecomposition) -> Result<BoundaryData> {
        let y0 = self
            .y0_p
            .as_ref()
            .ok_or_else(|| Error::MissingData("y0_p".into()))?;
        let ym = self
            .ym_q
            .as_ref()
            .ok_or_else(|| Error::MissingData("yM_q".into()))?;
        let horizon = self.horizon.ok_or_else(|| Error::MissingData("M".into()))?;
        BoundaryData::new(dec, parse_column(y0)?, parse_column(ym)?, horizon).map_err(|e| match e {
            Error::DimensionMismatch(msg) => Error::Parse(msg),
            other => other,
        })
    }

    /// The terminal fast state alone (for the per-step initial-set report).
    pub fn terminal_fast(&self, dec: &QwDecomposition) -> Result<RMatrix> {
        let ym = self
            .ym_q
            .as_ref()
            .ok_or_else(|| Error::MissingData("yM_q".into()))?;
        let column = parse_column(ym)?;
        if column.rows() != dec.fast_dim {
            return Err(Error::Parse(format!(
                "yM_q must have {} entries, got {}",
                dec.fast_dim,
                column.rows()
            )));
        }
        Ok(column)
    }

    /// The input sequence V_0 … V_{M−1}, each of the system's input width.
    pub fn input_sequence(&self, input_dim: usize) -> Result<Vec<RMatrix>> {
        let rows = self
            .inputs
            .as_ref()
            .ok_or_else(|| Error::MissingData("inputs".into()))?;
        rows.iter()
            .map(|entries| {
                let column = parse_column(entries)?;
                if column.rows() != input_dim {
                    return Err(Error::Parse(format!(
                        "each input needs {} entries, got {}",
                        input_dim,
                        column.rows()
                    )));
                }
                Ok(column)
            })
            .collect()
    }

    pub fn target_column(&self) -> Result<RMatrix> {
        let target = self
            .target
            .as_ref()
            .ok_or_else(|| Error::MissingData("target".into()))?;
        parse_column(target)
    }
}

/// Parse a rectangular grid of rational strings.
pub fn parse_matrix(rows: &[Vec<String>]) -> Result<RMatrix> {
    if rows.is_empty() || rows[0].is_empty() {
        return Err(Error::Parse(
            "matrix must have at least one row and column".into(),
        ));
    }
    let width = rows[0].len();
    let mut parsed = Vec::with_capacity(rows.len());
    for row in rows {
        if row.len() != width {
            return Err(Error::Parse(format!(
                "ragged matrix rows: {} vs {}",
                row.len(),
                width
            )));
        }
        parsed.push(
            row.iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    RMatrix::from_rows(parsed).map_err(|e| Error::Parse(e.to_string()))
}

/// Parse a flat list of rational strings into a column (possibly empty).
pub fn parse_column(entries: &[String]) -> Result<RMatrix> {
    let parsed = entries
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>>>()?;
    Ok(RMatrix::column(parsed))
}

/// Matrix as the array-of-arrays-of-strings shape the files use.
pub fn matrix_strings(m: &RMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| format_rational(&m[(i, j)])).collect())
        .collect()
}

/// Column as a flat list of rational strings.
pub fn column_strings(c: &RMatrix) -> Vec<String> {
    (0..c.rows()).map(|i| format_rational(&c[(i, 0)])).collect()
}

//! JSON matrix documents: `{"vars": [...], "rows": [[...], ...], "label": ...}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::poly::{Polynomial, Ring};

/// Expected decision recorded alongside a matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    /// Has an MLP factorization.
    Mlp,
    /// Has none.
    None,
}

impl Label {
    pub fn as_str(self) -> &'static str {
        match self {
            Label::Mlp => "mlp",
            Label::None => "none",
        }
    }

    pub fn from_decision(factorizable: bool) -> Label {
        if factorizable {
            Label::Mlp
        } else {
            Label::None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub vars: Vec<String>,
    pub rows: Vec<Vec<String>>,
    #[serde(default)]
    pub label: Option<Label>,
}

impl MatrixDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    /// Canonical serialization: two-space indentation, trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("plain data");
        out.push('\n');
        out
    }

    pub fn from_matrix(m: &PolyMatrix, label: Option<Label>) -> Self {
        MatrixDocument {
            vars: m.ring().vars().to_vec(),
            rows: m
                .to_rows()
                .iter()
                .map(|row| row.iter().map(Polynomial::to_string).collect())
                .collect(),
            label,
        }
    }

    pub fn ring(&self) -> Result<Ring> {
        Ring::new(self.vars.clone())
    }

    /// Parses every entry; errors name the offending row and column (from 1).
    pub fn parse_matrix(&self) -> Result<PolyMatrix> {
        let ring = self.ring()?;
        self.parse_in(&ring)
    }

    /// Like [`MatrixDocument::parse_matrix`], in a ring the caller supplies;
    /// the document's variables must match it.
    pub fn parse_in(&self, ring: &Ring) -> Result<PolyMatrix> {
        if ring.vars() != self.vars.as_slice() {
            return Err(Error::RingMismatch);
        }
        let first = self.rows.first().ok_or_else(|| Error::Document("no rows".into()))?;
        if first.is_empty() {
            return Err(Error::Document("row 1 is empty".into()));
        }
        let cols = first.len();
        let mut rows = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Document(format!(
                    "row {} has {} entries, expected {cols}",
                    i + 1,
                    row.len()
                )));
            }
            let parsed = row
                .iter()
                .enumerate()
                .map(|(j, text)| {
                    Polynomial::parse(ring, text)
                        .map_err(|e| Error::Document(format!("row {}, column {}: {e}", i + 1, j + 1)))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(parsed);
        }
        PolyMatrix::new(ring, rows)
    }
}

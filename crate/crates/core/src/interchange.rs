//! JSON interchange forms.
//!
//! Matrices travel as dense rows of rational strings:
//! `{"range": name, "domain": name, "dim": n, "rows": [[...]]}`. Compressed
//! matrices carry their spec and the retained submatrix in ascending
//! retained-degree order: `{"spec": {...}, "range", "domain", "rows"}`.

use serde::{Deserialize, Serialize};

use crate::basis::BasisId;
use crate::compress::{CompressedMatrix, CompressionSpec};
use crate::error::{Error, Result};
use crate::groupoid::CobMatrix;
use crate::rational::Rational;
use crate::triangular::UpperTriangular;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub range: BasisId,
    pub domain: BasisId,
    pub dim: usize,
    pub rows: Vec<Vec<Rational>>,
}

impl From<&CobMatrix> for MatrixDoc {
    fn from(m: &CobMatrix) -> Self {
        MatrixDoc {
            range: m.range(),
            domain: m.domain(),
            dim: m.dim(),
            rows: m.rows(),
        }
    }
}

impl TryFrom<MatrixDoc> for CobMatrix {
    type Error = Error;

    fn try_from(doc: MatrixDoc) -> Result<Self> {
        if doc.rows.len() != doc.dim {
            return Err(Error::Format(format!(
                "dim is {} but {} rows are given",
                doc.dim,
                doc.rows.len()
            )));
        }
        CobMatrix::new(
            doc.range,
            doc.domain,
            UpperTriangular::from_dense(&doc.rows)?,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompressedDoc {
    pub spec: CompressionSpec,
    pub range: BasisId,
    pub domain: BasisId,
    pub rows: Vec<Vec<Rational>>,
}

impl From<&CompressedMatrix> for CompressedDoc {
    fn from(c: &CompressedMatrix) -> Self {
        CompressedDoc {
            spec: *c.spec(),
            range: c.range(),
            domain: c.domain(),
            rows: c.decompress(),
        }
    }
}

impl TryFrom<CompressedDoc> for CompressedMatrix {
    type Error = Error;

    fn try_from(doc: CompressedDoc) -> Result<Self> {
        CompressedMatrix::from_parts(doc.spec, doc.range, doc.domain, &doc.rows)
    }
}

pub fn matrix_to_json(m: &CobMatrix) -> String {
    serde_json::to_string(&MatrixDoc::from(m)).expect("matrix documents always serialize")
}

pub fn matrix_from_json(s: &str) -> Result<CobMatrix> {
    let doc: MatrixDoc = serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
    doc.try_into()
}

pub fn compressed_to_json(c: &CompressedMatrix) -> String {
    serde_json::to_string(&CompressedDoc::from(c)).expect("compressed documents always serialize")
}

pub fn compressed_from_json(s: &str) -> Result<CompressedMatrix> {
    let doc: CompressedDoc = serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
    doc.try_into()
}

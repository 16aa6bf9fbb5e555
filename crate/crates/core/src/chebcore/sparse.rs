//! Sparse coefficient storage and the JSON coefficient document.
//!
//! ```text
//! {
//!   "degree_x": 4,
//!   "degree_y": 4,
//!   "domain": [xlo, xhi, ylo, yhi],
//!   "tol": 1.0000000000000001e-15,
//!   "entries": [[i, j, value], ...]
//! }
//! ```
//!
//! Entries are sorted by `(i, j)`. Reals are written with 17 significant
//! digits so a save/load cycle reproduces every value bit for bit.

use std::fmt::Write as _;
use std::io::{Read, Write};

use serde::Deserialize;
use thiserror::Error;

use super::Domain2;
use crate::matrix::CoeffMatrix;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed coefficient document at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid coefficient document: {0}")]
    Validation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Nonzero coefficients as `(row, col, value)` triplets in lexicographic order.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseCoeffs {
    pub degree_x: usize,
    pub degree_y: usize,
    pub domain: Domain2,
    pub tol: f64,
    pub entries: Vec<(usize, usize, f64)>,
}

/// Drops entries with `|value| < tol` (and exact zeros) and shrinks the degrees
/// to the largest retained indices. The result lives on `[-1, 1]²`.
pub fn trim(coeffs: &CoeffMatrix, tol: f64) -> SparseCoeffs {
    let entries: Vec<(usize, usize, f64)> = coeffs
        .iter_indexed()
        .filter(|&(_, _, v)| v != 0.0 && v.abs() >= tol)
        .collect();
    let degree_x = entries.iter().map(|e| e.0).max().unwrap_or(0);
    let degree_y = entries.iter().map(|e| e.1).max().unwrap_or(0);
    SparseCoeffs {
        degree_x,
        degree_y,
        domain: Domain2::unit(),
        tol,
        entries,
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    degree_x: usize,
    degree_y: usize,
    domain: [f64; 4],
    tol: f64,
    entries: Vec<(usize, usize, f64)>,
}

fn real(v: f64) -> String {
    format!("{v:.16e}")
}

impl SparseCoeffs {
    /// The zero function on `domain`.
    pub fn zero(domain: Domain2) -> Self {
        SparseCoeffs {
            degree_x: 0,
            degree_y: 0,
            domain,
            tol: 0.0,
            entries: Vec::new(),
        }
    }

    pub fn validate(&self) -> Result<(), DocumentError> {
        let invalid = |msg: String| Err(DocumentError::Validation(msg));
        if !(self.tol.is_finite() && self.tol >= 0.0) {
            return invalid(format!("tol must be finite and nonnegative, got {}", self.tol));
        }
        let mut prev: Option<(usize, usize)> = None;
        for (n, &(i, j, v)) in self.entries.iter().enumerate() {
            if i > self.degree_x || j > self.degree_y {
                return invalid(format!(
                    "entry {n} at ({i}, {j}) exceeds declared degrees ({}, {})",
                    self.degree_x, self.degree_y
                ));
            }
            if v == 0.0 || !v.is_finite() {
                return invalid(format!("entry {n} at ({i}, {j}) has value {v}"));
            }
            if let Some(p) = prev {
                if p >= (i, j) {
                    return invalid(format!(
                        "entry {n} at ({i}, {j}) is not after ({}, {}); entries must be strictly increasing",
                        p.0, p.1
                    ));
                }
            }
            prev = Some((i, j));
        }
        Ok(())
    }

    pub fn to_document(&self) -> String {
        let [xlo, xhi, ylo, yhi] = self.domain.bounds();
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"degree_x\": {},", self.degree_x);
        let _ = writeln!(out, "  \"degree_y\": {},", self.degree_y);
        let _ = writeln!(
            out,
            "  \"domain\": [{}, {}, {}, {}],",
            real(xlo),
            real(xhi),
            real(ylo),
            real(yhi)
        );
        let _ = writeln!(out, "  \"tol\": {},", real(self.tol));
        if self.entries.is_empty() {
            out.push_str("  \"entries\": []\n");
        } else {
            out.push_str("  \"entries\": [\n");
            for (n, (i, j, v)) in self.entries.iter().enumerate() {
                let sep = if n + 1 == self.entries.len() { "" } else { "," };
                let _ = writeln!(out, "    [{i}, {j}, {}]{sep}", real(*v));
            }
            out.push_str("  ]\n");
        }
        out.push_str("}\n");
        out
    }

    pub fn from_document(text: &str) -> Result<Self, DocumentError> {
        let raw: RawDocument = serde_json::from_str(text).map_err(|e| DocumentError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let [xlo, xhi, ylo, yhi] = raw.domain;
        let domain = Domain2::new(xlo, xhi, ylo, yhi).map_err(|e| DocumentError::Validation(e.to_string()))?;
        let s = SparseCoeffs {
            degree_x: raw.degree_x,
            degree_y: raw.degree_y,
            domain,
            tol: raw.tol,
            entries: raw.entries,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn save<W: Write>(&self, mut sink: W) -> Result<(), DocumentError> {
        sink.write_all(self.to_document().as_bytes())?;
        sink.flush()?;
        Ok(())
    }

    pub fn load<R: Read>(mut source: R) -> Result<Self, DocumentError> {
        let mut text = String::new();
        source.read_to_string(&mut text)?;
        Self::from_document(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn trim_drops_tiny_entries() {
        let a = CoeffMatrix::from_rows(&[vec![1.0, 1e-20], vec![0.0, 2.0]]);
        let s = trim(&a, 1e-15);
        assert_eq!(s.entries, vec![(0, 0, 1.0), (1, 1, 2.0)]);
        assert_eq!((s.degree_x, s.degree_y), (1, 1));
    }

    #[test]
    fn trim_of_zero_matrix_is_empty() {
        let s = trim(&CoeffMatrix::zeros(3, 4), 1e-15);
        assert!(s.entries.is_empty());
        assert_eq!((s.degree_x, s.degree_y), (0, 0));
    }

    #[test]
    fn trim_shrinks_degrees() {
        let mut a = CoeffMatrix::zeros(5, 5);
        a[(0, 3)] = 1.0;
        a[(2, 1)] = -1.0;
        a[(4, 4)] = 1e-9;
        let s = trim(&a, 1e-6);
        assert_eq!((s.degree_x, s.degree_y), (2, 3));
    }

    #[test]
    fn document_layout() {
        let s = SparseCoeffs {
            degree_x: 1,
            degree_y: 2,
            domain: Domain2::new(0.0, 1.0, -1.0, 1.0).unwrap(),
            tol: 1e-15,
            entries: vec![(0, 0, 0.5), (1, 2, -3.0)],
        };
        let doc = s.to_document();
        assert!(
            doc.contains("\"entries\": [\n    [0, 0, 5.0000000000000000e-1],\n    [1, 2, -3.0000000000000000e0]\n  ]")
        );
        assert_eq!(SparseCoeffs::from_document(&doc).unwrap(), s);
    }

    #[test]
    fn empty_document_is_zero_function() {
        let doc = r#"{"degree_x": 0, "degree_y": 0, "domain": [-1, 1, -1, 1], "tol": 0, "entries": []}"#;
        let s = SparseCoeffs::from_document(doc).unwrap();
        assert_eq!(s, SparseCoeffs::zero(Domain2::unit()));
        assert_eq!(SparseCoeffs::from_document(&s.to_document()).unwrap(), s);
    }

    #[test]
    fn index_beyond_degree_is_rejected() {
        let doc = r#"{"degree_x": 1, "degree_y": 1, "domain": [-1, 1, -1, 1], "tol": 0, "entries": [[2, 0, 1.0]]}"#;
        assert!(matches!(
            SparseCoeffs::from_document(doc),
            Err(DocumentError::Validation(_))
        ));
    }

    #[test]
    fn unsorted_duplicate_and_zero_entries_are_rejected() {
        for entries in [
            "[[1, 0, 1.0], [0, 1, 1.0]]",
            "[[0, 1, 1.0], [0, 1, 2.0]]",
            "[[0, 0, 0.0]]",
        ] {
            let doc = format!(
                r#"{{"degree_x": 2, "degree_y": 2, "domain": [-1, 1, -1, 1], "tol": 0, "entries": {entries}}}"#
            );
            assert!(
                matches!(SparseCoeffs::from_document(&doc), Err(DocumentError::Validation(_))),
                "{entries}"
            );
        }
    }

    #[test]
    fn bad_domain_is_a_validation_error() {
        let doc = r#"{"degree_x": 0, "degree_y": 0, "domain": [1, -1, -1, 1], "tol": 0, "entries": []}"#;
        assert!(matches!(
            SparseCoeffs::from_document(doc),
            Err(DocumentError::Validation(_))
        ));
    }

    #[test]
    fn syntax_errors_carry_location() {
        let doc = "{\n  \"degree_x\": 0,\n  \"degree_y\": oops\n}";
        match SparseCoeffs::from_document(doc) {
            Err(DocumentError::Parse { line, column, .. }) => {
                assert_eq!(line, 3);
                assert!(column > 0);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            SparseCoeffs::from_document(r#"{"degree_x": 0}"#),
            Err(DocumentError::Parse { .. })
        ));
    }

    #[test]
    fn save_and_load_through_io() {
        let s = trim(&CoeffMatrix::from_rows(&[vec![0.1, 0.2], vec![0.3, 0.0]]), 0.0);
        let mut buf = Vec::new();
        s.save(&mut buf).unwrap();
        assert_eq!(SparseCoeffs::load(buf.as_slice()).unwrap(), s);
    }

    proptest! {
        #[test]
        fn document_round_trip_is_bitwise(
            values in proptest::collection::vec(
                prop_oneof![Just(0.0), -1e3f64..1e3, -1e-12f64..1e-12, proptest::num::f64::NORMAL],
                1..30
            ),
            cols in 1usize..6,
            tol in 0.0f64..1e-3,
        ) {
            let rows = values.len().div_ceil(cols);
            let a = CoeffMatrix::from_fn(rows, cols, |k, j| values.get(k * cols + j).copied().unwrap_or(0.0));
            let mut s = trim(&a, 0.0);
            s.tol = tol;
            s.domain = Domain2::new(-0.3, 7.0, 1.0 / 3.0, 2.0).unwrap();
            let back = SparseCoeffs::from_document(&s.to_document()).unwrap();
            prop_assert_eq!(back.entries.len(), s.entries.len());
            for (a, b) in back.entries.iter().zip(&s.entries) {
                prop_assert_eq!((a.0, a.1, a.2.to_bits()), (b.0, b.1, b.2.to_bits()));
            }
            prop_assert_eq!(back.tol.to_bits(), s.tol.to_bits());
            prop_assert_eq!(back, s);
        }
    }
}

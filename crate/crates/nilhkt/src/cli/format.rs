//! The JSON algebra file format: dimension, sparse bracket table with
//! 1-based indices, optional metric, optional hypercomplex triple. All
//! rationals travel as `"p/q"` strings so exactness survives the boundary.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactlin::{format_rational, parse_rational, Matrix, Scalar};
use crate::hypercx::HypercomplexStructure;
use crate::liealg::MetricLieAlgebra;

/// On-disk schema. `metric` omitted means the identity; a two-entry `J`
/// means the third structure is the product of the first two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none", rename = "J")]
    pub j: Option<Vec<Vec<Vec<String>>>>,
}

/// One bracket [e_i, e_j] = Σ targets; 1-based indices, i < j.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub targets: BTreeMap<String, String>,
}

/// Stable machine-readable codes for semantic file errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemanticCode {
    DimZero,
    IndexOutOfRange,
    IndicesNotIncreasing,
    DuplicateBracket,
    BadRational,
    MetricShape,
    MetricNotSymmetric,
    MetricNotPositiveDefinite,
    JShape,
    JacobiViolation,
}

impl SemanticCode {
    pub fn as_str(self) -> &'static str {
        match self {
            SemanticCode::DimZero => "dim-zero",
            SemanticCode::IndexOutOfRange => "index-out-of-range",
            SemanticCode::IndicesNotIncreasing => "indices-not-increasing",
            SemanticCode::DuplicateBracket => "duplicate-bracket",
            SemanticCode::BadRational => "bad-rational",
            SemanticCode::MetricShape => "metric-shape",
            SemanticCode::MetricNotSymmetric => "metric-not-symmetric",
            SemanticCode::MetricNotPositiveDefinite => "metric-not-positive-definite",
            SemanticCode::JShape => "j-shape",
            SemanticCode::JacobiViolation => "jacobi-violation",
        }
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("[{}] {detail}", code.as_str())]
    Semantic { code: SemanticCode, detail: String },
}

impl ParseError {
    fn semantic(code: SemanticCode, detail: impl Into<String>) -> Self {
        ParseError::Semantic {
            code,
            detail: detail.into(),
        }
    }
}

fn parse_matrix(
    rows: &[Vec<String>],
    dim: usize,
    what: &str,
    shape_code: SemanticCode,
) -> Result<Matrix, ParseError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(ParseError::semantic(
            shape_code,
            format!("{what} must be a {dim}x{dim} matrix"),
        ));
    }
    let mut m = Matrix::zeros(dim, dim);
    for (r, row) in rows.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            let v = parse_rational(cell).map_err(|_| {
                ParseError::semantic(
                    SemanticCode::BadRational,
                    format!("{what} entry ({}, {}) is not a rational: {cell:?}", r + 1, c + 1),
                )
            })?;
            m.set(r, c, v);
        }
    }
    Ok(m)
}

fn decode(
    file: &AlgebraFile,
    validate: bool,
) -> Result<(MetricLieAlgebra, Option<HypercomplexStructure>), ParseError> {
    let dim = file.dim;
    if dim == 0 {
        return Err(ParseError::semantic(
            SemanticCode::DimZero,
            "dimension must be positive",
        ));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut brackets = Vec::new();
    for entry in &file.brackets {
        if entry.i >= entry.j {
            return Err(ParseError::semantic(
                SemanticCode::IndicesNotIncreasing,
                format!("bracket indices must satisfy i < j, got ({}, {})", entry.i, entry.j),
            ));
        }
        if entry.i < 1 || entry.j > dim {
            return Err(ParseError::semantic(
                SemanticCode::IndexOutOfRange,
                format!("bracket ({}, {}) out of range 1..={dim}", entry.i, entry.j),
            ));
        }
        if !seen.insert((entry.i, entry.j)) {
            return Err(ParseError::semantic(
                SemanticCode::DuplicateBracket,
                format!("duplicate bracket entry ({}, {})", entry.i, entry.j),
            ));
        }
        let mut targets: Vec<(usize, Scalar)> = Vec::new();
        for (key, value) in &entry.targets {
            let k: usize = key.parse().map_err(|_| {
                ParseError::semantic(
                    SemanticCode::IndexOutOfRange,
                    format!("target index {key:?} is not a positive integer"),
                )
            })?;
            if k < 1 || k > dim {
                return Err(ParseError::semantic(
                    SemanticCode::IndexOutOfRange,
                    format!("target index {k} out of range 1..={dim}"),
                ));
            }
            let coeff = parse_rational(value).map_err(|_| {
                ParseError::semantic(
                    SemanticCode::BadRational,
                    format!("coefficient {value:?} is not a rational"),
                )
            })?;
            targets.push((k - 1, coeff));
        }
        brackets.push((entry.i - 1, entry.j - 1, targets));
    }

    let metric = match &file.metric {
        None => None,
        Some(rows) => {
            let m = parse_matrix(rows, dim, "metric", SemanticCode::MetricShape)?;
            if !m.is_symmetric() {
                return Err(ParseError::semantic(
                    SemanticCode::MetricNotSymmetric,
                    "metric is not symmetric",
                ));
            }
            if validate && !m.is_positive_definite() {
                return Err(ParseError::semantic(
                    SemanticCode::MetricNotPositiveDefinite,
                    "metric is not positive definite",
                ));
            }
            Some(m)
        }
    };

    let alg = MetricLieAlgebra::new_unchecked(dim, brackets, metric, None)
        .map_err(|e| ParseError::semantic(SemanticCode::IndexOutOfRange, e.to_string()))?;
    if validate {
        let report = alg.validate();
        if !report.jacobi_violations.is_empty() {
            let triples: Vec<String> = report
                .jacobi_violations
                .iter()
                .map(|(i, j, k)| format!("(e{}, e{}, e{})", i + 1, j + 1, k + 1))
                .collect();
            return Err(ParseError::semantic(
                SemanticCode::JacobiViolation,
                format!("Jacobi identity fails on {}", triples.join(", ")),
            ));
        }
        if !report.metric_positive_definite {
            return Err(ParseError::semantic(
                SemanticCode::MetricNotPositiveDefinite,
                "metric is not positive definite",
            ));
        }
    }

    let h = match &file.j {
        None => None,
        Some(mats) => {
            if mats.len() != 2 && mats.len() != 3 {
                return Err(ParseError::semantic(
                    SemanticCode::JShape,
                    format!("J must list 2 or 3 matrices, got {}", mats.len()),
                ));
            }
            let j1 = parse_matrix(&mats[0], dim, "J1", SemanticCode::JShape)?;
            let j2 = parse_matrix(&mats[1], dim, "J2", SemanticCode::JShape)?;
            let j3 = if mats.len() == 3 {
                parse_matrix(&mats[2], dim, "J3", SemanticCode::JShape)?
            } else {
                &j1 * &j2
            };
            Some(
                HypercomplexStructure::new(j1, j2, j3).map_err(|e| {
                    ParseError::semantic(SemanticCode::JShape, e.to_string())
                })?,
            )
        }
    };
    Ok((alg, h))
}

fn parse_file_struct(text: &str) -> Result<AlgebraFile, ParseError> {
    serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Full parse: syntax, structural validation, Jacobi and positivity gates.
pub fn parse_algebra_file(
    text: &str,
) -> Result<(MetricLieAlgebra, Option<HypercomplexStructure>), ParseError> {
    decode(&parse_file_struct(text)?, true)
}

/// Structural parse only, for diagnostic commands that want to report the
/// Jacobi/positivity findings themselves.
pub fn parse_algebra_file_lenient(
    text: &str,
) -> Result<(MetricLieAlgebra, Option<HypercomplexStructure>), ParseError> {
    decode(&parse_file_struct(text)?, false)
}

fn matrix_to_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| format_rational(m.get(r, c))).collect())
        .collect()
}

/// Serializes an algebra (and optionally its triple) into the file schema.
pub fn algebra_to_file(
    alg: &MetricLieAlgebra,
    h: Option<&HypercomplexStructure>,
) -> AlgebraFile {
    let brackets = alg
        .bracket_entries()
        .into_iter()
        .map(|(i, j, targets)| BracketEntry {
            i: i + 1,
            j: j + 1,
            targets: targets
                .into_iter()
                .map(|(k, c)| ((k + 1).to_string(), format_rational(&c)))
                .collect(),
        })
        .collect();
    let metric = if alg.metric() == &Matrix::identity(alg.dim()) {
        None
    } else {
        Some(matrix_to_strings(alg.metric()))
    };
    AlgebraFile {
        dim: alg.dim(),
        brackets,
        metric,
        j: h.map(|h| (1..=3).map(|i| matrix_to_strings(h.j(i))).collect()),
    }
}

/// Deterministic pretty-printed JSON for a file.
pub fn render_file(file: &AlgebraFile) -> String {
    let mut out = serde_json::to_string_pretty(file).expect("schema serializes");
    out.push('\n');
    out
}

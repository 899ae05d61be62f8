//! The on-disk JSON document for a system: a field descriptor, the two
//! operators, and the two eigenvalue orderings, with every scalar written as
//! a string in the field's exact literal grammar. Serialization is
//! deterministic (struct order, no maps, no timestamps), so a canonical
//! document survives a parse/render round trip byte for byte.

use std::fmt;

use serde::{Deserialize, Serialize};
use tdsys::{FieldError, FieldScalar, FieldSpec, Matrix, MtdSystem, TdCoreError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldDescriptor {
    Q,
    GFp { p: u64 },
}

impl FieldDescriptor {
    pub fn to_spec(self) -> Result<FieldSpec, FieldError> {
        match self {
            FieldDescriptor::Q => Ok(FieldSpec::rationals()),
            FieldDescriptor::GFp { p } => FieldSpec::prime_field(p),
        }
    }

    pub fn from_spec(spec: FieldSpec) -> FieldDescriptor {
        match spec.modulus() {
            None => FieldDescriptor::Q,
            Some(p) => FieldDescriptor::GFp { p },
        }
    }

    /// Parses the command line spelling: `Q` or `GFp:<modulus>`.
    pub fn parse_flag(text: &str) -> Result<FieldDescriptor, DocumentError> {
        if text == "Q" {
            return Ok(FieldDescriptor::Q);
        }
        if let Some(p) = text.strip_prefix("GFp:") {
            let p: u64 = p.parse().map_err(|_| DocumentError::Structure {
                message: format!("bad field descriptor '{text}': modulus must be an integer"),
            })?;
            return Ok(FieldDescriptor::GFp { p });
        }
        Err(DocumentError::Structure {
            message: format!("bad field descriptor '{text}': expected Q or GFp:<p>"),
        })
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Q => write!(f, "Q"),
            FieldDescriptor::GFp { p } => write!(f, "GFp:{p}"),
        }
    }
}

/// Problems that make a document unusable: bad JSON, a bad field, a scalar
/// that does not parse, or shapes that contradict the declared dimension.
/// These map to exit code 2; mathematical failures on a well-formed document
/// map to exit code 1 and are reported elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocumentError {
    Json {
        message: String,
    },
    Field(FieldError),
    Scalar {
        location: String,
        source: FieldError,
    },
    Structure {
        message: String,
    },
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Json { message } => write!(f, "invalid JSON: {message}"),
            DocumentError::Field(e) => write!(f, "invalid field: {e}"),
            DocumentError::Scalar { location, source } => {
                write!(f, "at {location}: {source}")
            }
            DocumentError::Structure { message } => write!(f, "{message}"),
        }
    }
}

impl std::error::Error for DocumentError {}

/// The document as stored on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDocument {
    pub field: FieldDescriptor,
    pub dimension: usize,
    pub a: Vec<Vec<String>>,
    pub a_star: Vec<Vec<String>>,
    pub thetas: Vec<String>,
    pub theta_stars: Vec<String>,
}

/// The document's content lifted into exact arithmetic, ready to assemble.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemInputs {
    pub field: FieldSpec,
    pub a: Matrix,
    pub a_star: Matrix,
    pub thetas: Vec<FieldScalar>,
    pub theta_stars: Vec<FieldScalar>,
}

impl SystemInputs {
    pub fn assemble(self) -> Result<MtdSystem, TdCoreError> {
        MtdSystem::assemble(self.a, self.thetas, self.a_star, self.theta_stars)
    }
}

impl SystemDocument {
    pub fn parse_str(text: &str) -> Result<SystemDocument, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Json {
            message: e.to_string(),
        })
    }

    /// Deterministic pretty JSON with a trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("plain struct serializes");
        text.push('\n');
        text
    }

    /// Validates shapes against the declared dimension and parses every
    /// scalar, reporting the first offender by location.
    pub fn to_system_inputs(&self) -> Result<SystemInputs, DocumentError> {
        let field = self.field.to_spec().map_err(DocumentError::Field)?;
        if self.dimension == 0 {
            return Err(DocumentError::Structure {
                message: "dimension must be positive".to_owned(),
            });
        }
        if self.thetas.is_empty() {
            return Err(DocumentError::Structure {
                message: "thetas must be nonempty".to_owned(),
            });
        }
        if self.thetas.len() != self.theta_stars.len() {
            return Err(DocumentError::Structure {
                message: format!(
                    "thetas has {} entries but theta_stars has {}",
                    self.thetas.len(),
                    self.theta_stars.len()
                ),
            });
        }
        let matrix = |name: &str, rows: &[Vec<String>]| -> Result<Matrix, DocumentError> {
            if rows.len() != self.dimension || rows.iter().any(|row| row.len() != self.dimension) {
                return Err(DocumentError::Structure {
                    message: format!(
                        "{name} must be a {0} x {0} matrix of scalars",
                        self.dimension
                    ),
                });
            }
            let mut parsed = Vec::with_capacity(rows.len());
            for (i, row) in rows.iter().enumerate() {
                let mut out = Vec::with_capacity(row.len());
                for (j, cell) in row.iter().enumerate() {
                    out.push(
                        field
                            .parse_scalar(cell)
                            .map_err(|source| DocumentError::Scalar {
                                location: format!("{name}[{i}][{j}]"),
                                source,
                            })?,
                    );
                }
                parsed.push(out);
            }
            Ok(Matrix::from_rows(parsed))
        };
        let list = |name: &str, items: &[String]| -> Result<Vec<FieldScalar>, DocumentError> {
            items
                .iter()
                .enumerate()
                .map(|(i, cell)| {
                    field
                        .parse_scalar(cell)
                        .map_err(|source| DocumentError::Scalar {
                            location: format!("{name}[{i}]"),
                            source,
                        })
                })
                .collect()
        };
        Ok(SystemInputs {
            field,
            a: matrix("a", &self.a)?,
            a_star: matrix("a_star", &self.a_star)?,
            thetas: list("thetas", &self.thetas)?,
            theta_stars: list("theta_stars", &self.theta_stars)?,
        })
    }

    /// Renders an assembled system back into document form.
    pub fn from_system(sys: &MtdSystem) -> SystemDocument {
        let render_matrix = |m: &Matrix| -> Vec<Vec<String>> {
            (0..m.rows())
                .map(|i| m.row(i).iter().map(FieldScalar::to_string).collect())
                .collect()
        };
        let render_list =
            |l: &[FieldScalar]| -> Vec<String> { l.iter().map(FieldScalar::to_string).collect() };
        SystemDocument {
            field: FieldDescriptor::from_spec(sys.field()),
            dimension: sys.dim(),
            a: render_matrix(sys.a()),
            a_star: render_matrix(sys.a_star()),
            thetas: render_list(sys.thetas()),
            theta_stars: render_list(sys.theta_stars()),
        }
    }
}

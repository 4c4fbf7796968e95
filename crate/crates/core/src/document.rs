//! JSON model files.
//!
//! ```json
//! {
//!   "base": { "rank": 1, "dim": 1, "nef_generators": [["1"]],
//!             "canonical": ["2"], "nef_equals_psef": true },
//!   "fibers": [["0"], ["2"], ["2"]],
//!   "classes": { "alpha": { "beta": ["-1"], "lambda": "1" } }
//! }
//! ```
//!
//! The nef cone is given by exactly one of `nef_generators` or `nef_facets`
//! (each facet `f` meaning `f·x ≥ 0`). Rationals are integers or `"p/q"`
//! strings on input and always strings on output.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cone::Cone;
use crate::error::{Error, Violation};
use crate::model::{BaseGeometry, BundleClass, BundleModel};
use crate::rational::RatVector;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseSection {
    pub rank: usize,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nef_generators: Option<Vec<RatVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nef_facets: Option<Vec<RatVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<RatVector>,
    pub nef_equals_psef: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelDocument {
    pub base: BaseSection,
    pub fibers: Vec<RatVector>,
    #[serde(default)]
    pub classes: BTreeMap<String, BundleClass>,
}

/// A validated model plus its named classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedModel {
    pub model: BundleModel,
    pub classes: BTreeMap<String, BundleClass>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocumentError {
    /// Unreadable file or malformed JSON; `line`/`column` are 1-based, zero
    /// when unknown.
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    Validation(Violation),
}

impl DocumentError {
    /// Process exit code: 1 for syntax, 2 for model validation.
    pub fn exit_code(&self) -> i32 {
        match self {
            DocumentError::Syntax { .. } => 1,
            DocumentError::Validation(_) => 2,
        }
    }
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Syntax {
                line,
                column,
                message,
            } => {
                if *line > 0 {
                    write!(f, "parse error at line {line}, column {column}: {message}")
                } else {
                    write!(f, "parse error: {message}")
                }
            }
            DocumentError::Validation(v) => write!(f, "validation error: {v}"),
        }
    }
}

impl std::error::Error for DocumentError {}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        DocumentError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

fn validation(e: Error) -> DocumentError {
    match e {
        Error::Validation(v) => DocumentError::Validation(v),
        Error::DimensionMismatch {
            context,
            expected,
            found,
        } => DocumentError::Validation(Violation::RankMismatch {
            what: context.to_string(),
            expected,
            found,
        }),
        other => DocumentError::Syntax {
            line: 0,
            column: 0,
            message: other.to_string(),
        },
    }
}

impl ModelDocument {
    pub fn from_json(text: &str) -> Result<ModelDocument, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// The canonical document for `model`: nef cone as extreme rays, classes
    /// sorted by name.
    pub fn from_model(
        model: &BundleModel,
        classes: &BTreeMap<String, BundleClass>,
    ) -> ModelDocument {
        let base = model.base();
        ModelDocument {
            base: BaseSection {
                rank: base.rank(),
                dim: base.dim(),
                nef_generators: Some(base.nef_cone().generators()),
                nef_facets: None,
                canonical: base.canonical().cloned(),
                nef_equals_psef: true,
            },
            fibers: model.fibers().to_vec(),
            classes: classes.clone(),
        }
    }

    pub fn validate(&self) -> Result<ParsedModel, DocumentError> {
        let b = &self.base;
        let nef = match (&b.nef_generators, &b.nef_facets) {
            (Some(g), None) => Cone::from_generators(b.rank, g),
            (None, Some(f)) => Cone::from_facets(b.rank, f),
            (None, None) => return Err(DocumentError::Validation(Violation::MissingNefCone)),
            (Some(_), Some(_)) => {
                return Err(DocumentError::Validation(Violation::AmbiguousNefCone))
            }
        }
        .map_err(validation)?;
        let base = BaseGeometry::new(b.rank, b.dim, nef, b.nef_equals_psef, b.canonical.clone())
            .map_err(validation)?;
        let model = BundleModel::new(base, self.fibers.clone()).map_err(validation)?;
        for (name, class) in &self.classes {
            if class.beta.len() != b.rank {
                return Err(DocumentError::Validation(Violation::RankMismatch {
                    what: format!("class {name}"),
                    expected: b.rank,
                    found: class.beta.len(),
                }));
            }
        }
        Ok(ParsedModel {
            model,
            classes: self.classes.clone(),
        })
    }
}

impl ParsedModel {
    pub fn to_document(&self) -> ModelDocument {
        ModelDocument::from_model(&self.model, &self.classes)
    }
}

pub fn parse_model(text: &str) -> Result<ParsedModel, DocumentError> {
    ModelDocument::from_json(text)?.validate()
}

pub fn read_model(path: &Path) -> Result<ParsedModel, DocumentError> {
    let text = std::fs::read_to_string(path).map_err(|e| DocumentError::Syntax {
        line: 0,
        column: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_model(&text)
}

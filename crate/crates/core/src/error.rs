use std::fmt;

/// Model invariant that a document or constructor failed to satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The base must have coinciding nef and psef cones.
    NefNotPsef,
    NonSalientNefCone,
    NefConeNotFullDimensional,
    MissingNefCone,
    AmbiguousNefCone,
    RankMismatch {
        what: String,
        expected: usize,
        found: usize,
    },
    ZeroRank,
    ZeroDimension,
    NoFibers,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NefNotPsef => f.write_str("nef_equals_psef must be true"),
            Violation::NonSalientNefCone => {
                f.write_str("nef cone is not salient (contains a line)")
            }
            Violation::NefConeNotFullDimensional => f.write_str("nef cone is not full-dimensional"),
            Violation::MissingNefCone => {
                f.write_str("base needs one of nef_generators or nef_facets")
            }
            Violation::AmbiguousNefCone => {
                f.write_str("base gives both nef_generators and nef_facets")
            }
            Violation::RankMismatch {
                what,
                expected,
                found,
            } => {
                write!(f, "{what} has length {found}, expected rank {expected}")
            }
            Violation::ZeroRank => f.write_str("base rank must be at least 1"),
            Violation::ZeroDimension => f.write_str("base dimension must be at least 1"),
            Violation::NoFibers => f.write_str("at least one fiber class l_0 is required"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("invalid stratum: {0}")]
    InvalidStratum(String),
    #[error("{0}")]
    Domain(String),
    #[error("model validation failed: {0}")]
    Validation(Violation),
    #[error("class is not pseudo-effective")]
    NotPsef,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            context,
            expected,
            found,
        })
    }
}

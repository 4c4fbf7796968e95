//! Exact positivity invariants of divisor classes on projectivized split
//! bundles `X = P(L_0 ⊕ … ⊕ L_r)` over a base with polyhedral nef cone.
//!
//! Layers, bottom up:
//!
//! * [`rational`] and [`lp`]: exact scalars and a certified simplex solver;
//! * [`cone`]: polyhedral cones with both generator and facet descriptions;
//! * [`model`]: the bundle model and its queries (nef, psef, big, minimal
//!   multiplicities along strata, nef-in-codimension-k cones, divisorial
//!   Zariski decomposition);
//! * [`instances`]: constructors for the worked examples with checkable
//!   expectations;
//! * [`document`]: the JSON model file format.

pub mod cone;
pub mod document;
pub mod error;
pub mod instances;
mod linalg;
pub mod lp;
pub mod model;
pub mod rational;

pub use cone::Cone;
pub use document::{parse_model, read_model, DocumentError, ModelDocument, ParsedModel};
pub use error::{Error, Result, Violation};
pub use instances::{catalog, find_example, verify_expectations, ExampleInstance};
pub use lp::{solve_lp, verify_certificate, Constraint, LinearProgram, LpOutcome, Relation};
pub use model::{
    BaseGeometry, BundleClass, BundleModel, Certificate, MultiplicityResult, MultiplicityWitness,
    NefCodim, PsefResult, Stratum, ZariskiDecomposition,
};
pub use rational::{q, RatVector, Rational};

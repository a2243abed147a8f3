//! Numerical toolkit for attractive points of nonlinear mappings on R^d.
//!
//! A point `z` is *attractive* for a mapping `T: C -> H` when
//! `||Tx - z|| <= ||x - z||` for every `x` in `C`. The toolkit
//!
//! - approximates the attractive-point set from finitely many generators as
//!   an intersection of half-spaces ([`attractive`]),
//! - extends `T` to all of `H` by metric projection onto that set, yielding
//!   a quasinonexpansive mapping whose fixed points are the attractive
//!   points ([`attractive::ExtensionMapping`]),
//! - runs Halpern-type and Mann-type iterations on the extension and tracks
//!   residuals ([`iterate`]),
//! - verifies or falsifies mapping-class inequalities (quasinonexpansive,
//!   generalized hybrid, widely more generalized hybrid) by seeded sampling
//!   with local refinement ([`classes`]),
//! - drives batch experiments from JSON configs ([`config`], [`experiment`]).

pub mod attractive;
pub mod classes;
pub mod config;
pub mod experiment;
pub mod iterate;
pub mod mappings;
pub mod space;

pub use attractive::{ExtensionMapping, Halfspace, HalfspaceSet};
pub use classes::{ClassVerdict, GhCoefficients, WmghCoefficients};
pub use iterate::{IterationTrace, Schedule, Verdict};
pub use mappings::MappingSpec;
pub use space::{DomainSpec, Vector};

/// Default absolute tolerance for comparisons of derived quantities (norms,
/// inequality slacks).
pub const DEFAULT_TOL: f64 = 1e-9;

//! Bloch-type function spaces on the unit ball of a finite-dimensional
//! complex Hilbert space.
//!
//! The crate computes the four Bloch-type seminorms, the invariant gradient,
//! growth norms, and Lipschitz/weighted difference quotients for holomorphic
//! test functions (sparse polynomials plus ridge power series), and runs a
//! battery of numerical experiments that exercise the norm-equivalence
//! theorems relating these quantities. All supremum estimates are certified
//! lower bounds: the exact maximum over a deterministic, seeded sample set
//! followed by golden-section refinement.

pub mod functions;
pub mod funcspec;
pub mod geometry;
pub mod harness;
pub mod quadrature;
pub mod report;
pub mod sampling;
pub mod seminorms;
pub mod series;

pub mod cli;

pub use functions::HoloFunction;
pub use geometry::{Complex, MobiusMap, Point};
pub use sampling::SamplingPlan;
pub use seminorms::{SeminormEstimate, SeminormKind, WeightConvention};
pub use series::DiskSeries;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("point lies outside the open unit ball (norm {norm:.6e})")]
    OutsideBall { norm: f64 },
    #[error("expected a unit vector, got norm {norm:.6e}")]
    NotUnit { norm: f64 },
    #[error("the zero vector has no direction")]
    ZeroVector,
    #[error("Moebius denominator vanished (1 - <x,a> = {value:.6e})")]
    DegenerateDenominator { value: f64 },
    #[error("monomial total degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: u32, max: u32 },
    #[error("ridge truncation order {order} exceeds the supported maximum {max}")]
    TruncationTooLarge { order: usize, max: usize },
    #[error("series would need {needed} coefficients, more than the cap {cap}")]
    SeriesTooLong { needed: usize, cap: usize },
    #[error("curve leaves the closed unit ball (boundary norm {norm:.6e})")]
    CurveEscapesBall { norm: f64 },
    #[error("invalid sampling plan: {reason}")]
    InvalidPlan { reason: String },
    #[error("finite-difference step {step:.3e} outside (0, 1e-4]")]
    InvalidStep { step: f64 },
    #[error("seminorm kind {kind} does not accept alpha = {alpha}")]
    UnsupportedAlpha { kind: String, alpha: f64 },
    #[error("seminorm {kind} cannot be estimated by this entry point; use its dedicated operation")]
    UnsupportedKind { kind: String },
    #[error(
        "the invariant-gradient seminorm coincides with the gradient seminorm in dimension 1; \
         use kind 1 instead"
    )]
    InvariantGradientDimensionOne,
    #[error("lambda = {lambda} outside the admissible range [0, {alpha}]")]
    InvalidLambda { lambda: f64, alpha: f64 },
    #[error("(alpha, lambda) = ({alpha}, {lambda}) lies outside every declared theorem region")]
    OutsideRegions { alpha: f64, lambda: f64 },
    #[error("check requires dimension >= 2, got {dim}")]
    DimensionTooSmall { dim: usize },
    #[error("family contains only constant functions; ratio checks are undefined")]
    ConstantFamily,
    #[error("invalid family parameters: {reason}")]
    InvalidFamily { reason: String },
    #[error("{0}")]
    Spec(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

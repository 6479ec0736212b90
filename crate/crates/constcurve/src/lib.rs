//! Constant-curvature trigonometry across the Euclidean plane, the unit
//! sphere, and the hyperboloid model of the hyperbolic plane.
//!
//! The crate is organized bottom-up:
//!
//! - [`gtrig`] — the generalized sine/cosine kernel for arbitrary real
//!   curvature `K` (series near `K·d² = 0`, closed forms elsewhere);
//! - [`surface`] — the three model surfaces embedded in 3-space: polar
//!   charts, geodesic distances, parallel translation, tangent-vector
//!   angles (the coordinate-geometry oracle);
//! - [`laws`] — the unified law of cosines with its curvature-dependent
//!   coefficients, the three-squares Pythagorean identity, the first law
//!   of cosines, the x-coordinate identities, and the 3×3 linear system
//!   recovering angles from sides;
//! - [`solver`] — SAS/SSS triangle solvers with residual verification;
//! - [`harness`] — seeded random-triangle generation from coordinates,
//!   bulk identity verification, and JSON/CSV report emission.
//!
//! Triangle trials in the harness are data-parallel; the `parallel`
//! feature (on by default) runs them on a rayon pool, with a sequential
//! path always available for comparison.

pub mod gtrig;
pub mod harness;
pub mod laws;
pub mod solver;
pub mod surface;

pub use gtrig::{gcos, gsin, gtrig_series, Curvature, GeometryClass};
pub use harness::{GeneratorConfig, ResidualReport};
pub use laws::{LabeledTriangle, TriangleAngles, TriangleSides};
pub use solver::{SolveResult, SolveRequest};
pub use surface::{Geometry, PolarCoordinate, SurfacePoint};

use thiserror::Error;

/// Errors shared across the triangle machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A curvature value was NaN or infinite.
    #[error("curvature must be finite, got {0}")]
    NonFiniteCurvature(f64),
    /// Points on different model surfaces were combined.
    #[error("geometry mismatch: {0:?} vs {1:?}")]
    GeometryMismatch(Geometry, Geometry),
    /// Spherical polar radius at or beyond the injectivity bound π.
    #[error("polar radius {0} outside the spherical chart [0, π)")]
    OutsideChart(f64),
    /// Angle requested at a vertex with an ill-defined geodesic direction.
    #[error("zero-length tangent: coincident or antipodal points")]
    ZeroTangent,
    /// A unified-law coefficient denominator 1 + gcos(r) vanished.
    #[error("degenerate coefficient denominator: 1 + gcos({0}) ≈ 0")]
    DegenerateDenominator(f64),
    /// The angle-recovery linear system is singular (a side with gsin = 0).
    #[error("singular linear system: |det| = {0}")]
    SingularSystem(f64),
    /// Side data does not describe a triangle in the given geometry.
    #[error("invalid triangle: {0}")]
    InvalidTriangle(String),
    /// A spherical law-of-cosines inversion left the domain of arccos.
    #[error("spherical domain violation: gcos(a) = {0} outside [-1, 1]")]
    SphericalDomain(f64),
    /// The triangle generator exhausted its rejection-sampling budget.
    #[error("triangle generation exhausted after {0} rejected draws")]
    GenerationExhausted(u32),
    /// Report emission failed at the output sink.
    #[error("report write failed: {0}")]
    ReportWrite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

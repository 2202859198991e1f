//! Error type shared by every module of the solver.
//!
//! Diagnostics are stored as `f64` regardless of the working scalar so that
//! error values render uniformly; conversions go through
//! [`crate::scalar::Real::to_f64_lossy`].

use thiserror::Error;

/// Everything that can go wrong while building geometry, evaluating layer
/// potentials, or solving for the tension.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The periodic grid size must be even and at least 8.
    #[error("invalid grid size {0}: the periodic grid needs an even number of points, at least 8")]
    InvalidGrid(usize),

    /// Sample array length does not match the grid it claims to live on.
    #[error("sample length {len} does not match the {expected}-point grid")]
    LengthMismatch { len: usize, expected: usize },

    /// Two grid quantities that must share a grid do not.
    #[error("mismatched grids: {0} points vs {1} points")]
    GridMismatch(usize, usize),

    /// A sample value is NaN or infinite.
    #[error("non-finite sample at node {0}")]
    NonFinite(usize),

    /// The curve parametrization degenerates: |∂θX| vanishes somewhere.
    #[error("curve speed vanishes: min |dX/dθ| = {min_speed:.3e}")]
    ZeroSpeed { min_speed: f64 },

    /// The curve is self-intersecting (or indistinguishable from it at this
    /// resolution): the chord-over-arc simplicity measure fell below the
    /// scale-relative threshold.
    #[error(
        "curve is self-intersecting or nearly so: simplicity measure {star_norm:.3e} \
         is at or below the threshold {threshold:.3e}"
    )]
    SelfIntersecting { star_norm: f64, threshold: f64 },

    /// The curve is traversed clockwise; counter-clockwise is required.
    #[error(
        "curve orientation is clockwise (signed area {signed_area:.3e} ≤ 0); \
         counter-clockwise parametrization required"
    )]
    Orientation { signed_area: f64 },

    /// A pointwise kernel was evaluated at (numerically) zero separation.
    #[error("kernel evaluated at a singular point: |r| = {distance:.3e} < {tolerance:.3e}")]
    SingularPoint { distance: f64, tolerance: f64 },

    /// An off-interface field evaluation was requested inside the quadrature
    /// accuracy guard around the interface.
    #[error(
        "evaluation point too close to the interface: distance {distance:.3e} \
         is within the accuracy guard h_safe = {h_safe:.3e}"
    )]
    TooCloseToInterface { distance: f64, h_safe: f64 },

    /// The tension operator is singular on this curve (circle nullspace);
    /// the plain solve cannot proceed.
    #[error(
        "tension operator is singular on this curve (eigenvalue of smallest \
         magnitude {leading:.3e}); use the mean-zero mode"
    )]
    SingularOperator { leading: f64 },

    /// A nullspace vector was requested from an operator that is not
    /// singular at the working tolerance.
    #[error(
        "operator is not singular: eigenvalue closest to zero is {leading:.3e}, \
         above the rank tolerance {tolerance:.3e}"
    )]
    NotSingular { leading: f64, tolerance: f64 },

    /// A dense factorization failed to produce a solution.
    #[error("linear solve failed: {0}")]
    SolveFailed(String),

    /// A sweep or fit was asked for with unusable inputs.
    #[error("invalid sweep request: {0}")]
    InvalidSweep(String),
}

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;

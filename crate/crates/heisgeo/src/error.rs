//! Error type shared across the crate.

use thiserror::Error;

/// Errors reported by geometric operations.
///
/// Numerical routines that can degrade gracefully (truncated curves,
/// unpolished oracle results) report diagnostics on their result types
/// instead of failing.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A precondition on an argument was violated (zero dilation factor,
    /// profile parameter out of range, empty search window, FD step out of
    /// its valid range, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The queried point does not satisfy the surface equation.
    #[error("point not on surface (residual {residual:.3e})")]
    NotOnSurface { residual: f64 },

    /// The point is characteristic: the horizontal gradient of the defining
    /// function is below the characteristic tolerance, so tangent/normal
    /// data and curvatures are undefined there.
    #[error("characteristic point (|grad_H g| = {grad_norm:.3e})")]
    CharacteristicPoint { grad_norm: f64 },

    /// The tangent plane is vertical (`∂_t g = 0`), so the distance to the
    /// characteristic point of the tangent plane is undefined.
    #[error("vertical tangent plane (d_t g = 0)")]
    VerticalTangent,

    /// A chart is evaluated on its center/axis where it degenerates.
    #[error("configuration on the chart center (R = 0)")]
    OnCenter,

    /// A closed form is evaluated at a singular configuration.
    #[error("singular configuration: {0}")]
    Singular(String),
}

pub type Result<T> = std::result::Result<T, Error>;

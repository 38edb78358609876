//! Numerical toolkit for the geometry of the first Heisenberg group H¹:
//! the group structure and its horizontal frame, unit-speed geodesics and
//! the Carnot-Carathéodory distance, oriented surfaces with their metric
//! normals, the horizontal Hessian of the signed distance together with the
//! mean and imaginary curvatures, closed forms for the plane {t = 0} and
//! the unit CC sphere, and an independent brute-force oracle that
//! cross-checks every closed form.
//!
//! Every quantity is computed by at least two routes (closed form vs.
//! finite differences of the brute-force signed distance, or two algebraic
//! assemblies of the same matrix); [`verify`] bundles the cross-checks into
//! a reproducible pass/fail suite.

pub mod curvature;
pub mod error;
pub mod geodesic;
pub mod heis;
pub mod oracle;
pub mod plane;
pub mod series;
pub mod sphere;
pub mod surface;
pub mod verify;

pub use error::{Error, Result};
pub use heis::{Point, ORIGIN};

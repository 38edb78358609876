//! Closed forms for the horizontal plane Π = {t = 0}.
//!
//! Off the t-axis, H¹ is charted by normal coordinates (R, α, β):
//!
//! ```text
//! (u, v, s) = (R cos β cos α, R cos β sin α, R²(β + ½ sin 2β)),
//! ```
//!
//! where R is the distance from the origin to the foot of the metric normal
//! through the point, α the angle of the point's z-coordinate, and
//! β = σ/R ∈ (−π/2, π/2) the normalized arclength. The signed distance is
//! δ_Π = Rβ, its horizontal gradient is (−sin(β−α), −cos(β−α)), and its
//! Hessian has the rank-one structure below.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heis::{Mat2, Point};

/// Normal coordinates for the plane {t = 0}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlaneCoords {
    /// Foot distance R ≥ 0.
    pub r: f64,
    /// Angle α ∈ [0, 2π) of the point's z-coordinate.
    pub alpha: f64,
    /// Normalized arclength β ∈ (−π/2, π/2).
    pub beta: f64,
}

impl PlaneCoords {
    pub fn new(r: f64, alpha: f64, beta: f64) -> Result<PlaneCoords> {
        if !(r >= 0.0) || beta.abs() >= PI / 2.0 {
            return Err(Error::InvalidArgument(format!(
                "plane chart needs R >= 0 and |beta| < pi/2, got R={r}, beta={beta}"
            )));
        }
        Ok(PlaneCoords { r, alpha, beta })
    }
}

/// Chart map (R, α, β) ↦ (u, v, s).
pub fn plane_point(c: &PlaneCoords) -> Point {
    let (sb, cb) = c.beta.sin_cos();
    let (sa, ca) = c.alpha.sin_cos();
    Point::new(
        c.r * cb * ca,
        c.r * cb * sa,
        c.r * c.r * (c.beta + sb * cb),
    )
}

/// T(β) = (β + sin β cos β)/cos²β, the chart profile t/|z|²; strictly
/// increasing on (−π/2, π/2).
fn chart_profile(beta: f64) -> f64 {
    let (s, c) = beta.sin_cos();
    (beta + s * c) / (c * c)
}

fn chart_profile_deriv(beta: f64) -> f64 {
    let (s, c) = beta.sin_cos();
    2.0 * (c + beta * s) / (c * c * c)
}

fn solve_beta(target: f64) -> f64 {
    if target == 0.0 {
        return 0.0;
    }
    let lim = PI / 2.0 - 1e-15;
    let (mut lo, mut hi) = if target > 0.0 { (0.0, lim) } else { (-lim, 0.0) };
    if target > 0.0 && chart_profile(hi) < target {
        return hi;
    }
    if target < 0.0 && chart_profile(lo) > target {
        return lo;
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if chart_profile(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut beta = 0.5 * (lo + hi);
    for _ in 0..30 {
        let f = chart_profile(beta) - target;
        let d = chart_profile_deriv(beta);
        let next = beta - f / d;
        if !(next > lo && next < hi) {
            break;
        }
        if chart_profile(next) < target {
            lo = next;
        } else {
            hi = next;
        }
        if (next - beta).abs() <= 1e-16 * beta.abs().max(1.0) {
            beta = next;
            break;
        }
        beta = next;
    }
    beta
}

/// Chart inversion; fails on the t-axis where α degenerates.
pub fn plane_coords(p: Point) -> Result<PlaneCoords> {
    let rho = p.z_norm();
    if rho < 1e-12 * p.t.abs().sqrt().max(1.0) {
        return Err(Error::OnCenter);
    }
    let beta = solve_beta(p.t / (rho * rho));
    Ok(PlaneCoords {
        r: rho / beta.cos(),
        alpha: p.y.atan2(p.x).rem_euclid(2.0 * PI),
        beta,
    })
}

/// Closed-form signed distance to {t = 0}: δ_Π = Rβ, with the on-axis value
/// sign(t)·√(π|t|/2).
pub fn plane_signed_distance(p: Point) -> f64 {
    match plane_coords(p) {
        Ok(c) => c.r * c.beta,
        Err(_) => p.t.signum() * (PI * p.t.abs() / 2.0).sqrt(),
    }
}

/// Horizontal gradient of δ_Π in the chart: (−sin(β−α), −cos(β−α)); unit
/// norm identically.
pub fn plane_grad_delta(c: &PlaneCoords) -> Result<(f64, f64)> {
    if c.r <= 0.0 {
        return Err(Error::OnCenter);
    }
    let (s, co) = (c.beta - c.alpha).sin_cos();
    Ok((-s, -co))
}

/// Horizontal Hessian of δ_Π in the chart:
///
/// ```text
/// 1/(R cos β (cos β + β sin β)) · [cos(α−β)·A  cos(α−β)·B]
///                                 [sin(α−β)·A  sin(α−β)·B]
/// A = −sin α cos β + β cos(α+β) − cos²β sin(α−β)
/// B =  cos α cos β + β sin(α+β) + cos²β cos(α−β)
/// ```
///
/// Diverges as β → ±π/2 (the YY entry in particular) and as R → 0.
pub fn plane_hessian(c: &PlaneCoords) -> Result<Mat2> {
    if c.r <= 0.0 {
        return Err(Error::OnCenter);
    }
    if c.beta.abs() >= PI / 2.0 - 1e-12 {
        return Err(Error::Singular(format!(
            "plane Hessian diverges as beta -> ±π/2 (beta = {})",
            c.beta
        )));
    }
    let (sb, cb) = c.beta.sin_cos();
    let (sa, ca) = c.alpha.sin_cos();
    let (s_ab, c_ab) = (c.alpha - c.beta).sin_cos();
    let (s_apb, c_apb) = (c.alpha + c.beta).sin_cos();
    let a = -sa * cb + c.beta * c_apb - cb * cb * s_ab;
    let b = ca * cb + c.beta * s_apb + cb * cb * c_ab;
    let pref = 1.0 / (c.r * cb * (cb + c.beta * sb));
    Ok(Mat2::new(c_ab * a, c_ab * b, s_ab * a, s_ab * b).scale(pref))
}

/// Metric normal of the plane {t = 0} from P = (x, y, 0), closed form:
///
/// ```text
/// γ_P(σ) = ( x/2·(1 + cos(2σ/|z|)) + y/2·sin(2σ/|z|),
///            y/2·(1 + cos(2σ/|z|)) − x/2·sin(2σ/|z|),
///            |z|²/2·(2σ/|z| + sin(2σ/|z|)) )
/// ```
///
/// It realizes the distance for |σ| ≤ π|z|/2.
pub fn plane_metric_normal(x: f64, y: f64, sigma: f64) -> Result<Point> {
    let z = x.hypot(y);
    if z == 0.0 {
        return Err(Error::OnCenter);
    }
    let w = 2.0 * sigma / z;
    let (sw, cw) = w.sin_cos();
    Ok(Point::new(
        0.5 * x * (1.0 + cw) + 0.5 * y * sw,
        0.5 * y * (1.0 + cw) - 0.5 * x * sw,
        0.5 * z * z * (w + sw),
    ))
}

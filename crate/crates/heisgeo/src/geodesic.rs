//! Unit-speed geodesics and the Carnot-Carathéodory distance.
//!
//! A geodesic through the origin is parametrized by the initial horizontal
//! angle α and a curvature parameter φ:
//!
//! ```text
//! x(σ) = sin α · (1 − cos φσ)/φ + cos α · sin(φσ)/φ
//! y(σ) = sin α · sin(φσ)/φ     − cos α · (1 − cos φσ)/φ
//! t(σ) = 2 (φσ − sin φσ)/φ²
//! ```
//!
//! φ = 0 degenerates to the straight line (σ cos α, σ sin α, 0). A geodesic
//! with φ ≠ 0 is length-minimizing over parameter intervals of length
//! 2π/|φ|; all geodesics are left translates of these.
//!
//! Point-to-point distance inverts this family: after translating one
//! endpoint to the origin, the half-turn angle θ = φr/2 of a minimizer to
//! (z, t) solves the monotone scalar equation t/|z|² = (2θ − sin 2θ)/(2 sin²θ),
//! and then r = |z|·θ/sin θ.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heis::{group_mul, inverse, Point};
use crate::series;

/// A unit-speed geodesic: left translate by `base` of the origin geodesic
/// with initial angle `alpha` and curvature parameter `phi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Geodesic {
    pub base: Point,
    pub alpha: f64,
    pub phi: f64,
}

impl Geodesic {
    /// Normalizes the angle into [0, 2π).
    pub fn new(base: Point, alpha: f64, phi: f64) -> Self {
        Geodesic { base, alpha: normalize_angle(alpha), phi }
    }

    /// Length over which the geodesic is minimizing: 2π/|φ|, +∞ when φ = 0.
    pub fn lifetime(&self) -> f64 {
        if self.phi == 0.0 {
            f64::INFINITY
        } else {
            2.0 * PI / self.phi.abs()
        }
    }
}

/// Result of a point-to-point distance query.
///
/// `phi` and `alpha` describe one minimizing geodesic from the first point;
/// `unique` is false on the center (z = z'), where a one-parameter rotation
/// family of minimizers exists and the α = 0 member is returned.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistanceResult {
    pub distance: f64,
    pub phi: f64,
    pub alpha: f64,
    pub unique: bool,
}

fn normalize_angle(a: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let r = a.rem_euclid(two_pi);
    if r == two_pi {
        0.0
    } else {
        r
    }
}

/// Evaluate the geodesic at arc-length parameter σ.
///
/// Defined for all σ; minimality holds only within the lifetime.
pub fn eval(g: &Geodesic, sigma: f64) -> Point {
    let w = g.phi * sigma;
    let f1 = sigma * series::one_minus_cos_over(w);
    let f2 = sigma * series::sin_over(w);
    let f3 = 2.0 * sigma * sigma * series::w_minus_sin_over_sq(w);
    let (sa, ca) = g.alpha.sin_cos();
    let local = Point::new(sa * f1 + ca * f2, sa * f2 - ca * f1, f3);
    group_mul(g.base, local)
}

/// Profile point (|z|, t) of the sphere ∂B(0, r) at curvature parameter φ.
///
/// φ ranges over [−2π/r, 2π/r]; φ = 0 is the equatorial limit (r, 0).
pub fn ball_profile(r: f64, phi: f64) -> Result<(f64, f64)> {
    if !(r > 0.0) {
        return Err(Error::InvalidArgument(format!("radius must be positive, got {r}")));
    }
    if phi.abs() > 2.0 * PI / r * (1.0 + 1e-12) {
        return Err(Error::InvalidArgument(format!(
            "profile parameter |{phi}| exceeds 2π/r = {}",
            2.0 * PI / r
        )));
    }
    let w = phi * r;
    Ok((
        r * series::sin_over(0.5 * w),
        2.0 * r * r * series::w_minus_sin_over_sq(w),
    ))
}

/// m(θ) = (2θ − sin 2θ) / (2 sin²θ), the strictly increasing profile ratio
/// t/|z|² as a function of the half-turn angle θ ∈ (−π, π).
fn profile_ratio(theta: f64) -> f64 {
    if theta.abs() < series::SERIES_CUTOFF {
        let t2 = theta * theta;
        (2.0 * theta / 3.0) * (1.0 + 2.0 * t2 / 15.0 + 2.0 * t2 * t2 / 105.0)
    } else {
        let s = theta.sin();
        (2.0 * theta - (2.0 * theta).sin()) / (2.0 * s * s)
    }
}

fn profile_ratio_deriv(theta: f64) -> f64 {
    if theta.abs() < series::SERIES_CUTOFF {
        let t2 = theta * theta;
        2.0 / 3.0 + 4.0 * t2 / 15.0
    } else {
        let s = theta.sin();
        let s2 = (2.0 * theta).sin();
        2.0 - s2 * (2.0 * theta - s2) / (2.0 * s * s * s * s)
    }
}

/// Solve m(θ) = target for θ ∈ (−π, π) by bisection refined with Newton.
fn solve_theta(target: f64) -> f64 {
    if target == 0.0 {
        return 0.0;
    }
    let eps = 1e-12;
    let (mut lo, mut hi) = if target > 0.0 { (0.0, PI - eps) } else { (-PI + eps, 0.0) };
    if target > 0.0 && profile_ratio(hi) < target {
        return hi;
    }
    if target < 0.0 && profile_ratio(lo) > target {
        return lo;
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if profile_ratio(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // Newton polish to machine precision, kept inside the bracket.
    let mut th = 0.5 * (lo + hi);
    for _ in 0..40 {
        let f = profile_ratio(th) - target;
        let d = profile_ratio_deriv(th);
        if d <= 0.0 {
            break;
        }
        let mut next = th - f / d;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if profile_ratio(next) < target {
            lo = next;
        } else {
            hi = next;
        }
        if (next - th).abs() <= 1e-16 * th.abs().max(1.0) {
            th = next;
            break;
        }
        th = next;
    }
    th
}

// Center threshold: below it the query point is treated as lying on the
// center {z = 0}, where the θ-equation degenerates.
fn near_center(z_norm: f64, t: f64) -> bool {
    z_norm < 1e-9 * t.abs().sqrt().max(1.0)
}

/// Carnot-Carathéodory distance between two points, with the parameters of
/// one minimizing geodesic from `p`.
pub fn cc_distance(p: Point, q: Point) -> DistanceResult {
    let d = group_mul(inverse(p), q);
    let rho = d.z_norm();
    if near_center(rho, d.t) {
        if d.t.abs() < 1e-300 {
            return DistanceResult { distance: 0.0, phi: 0.0, alpha: 0.0, unique: false };
        }
        let r = (PI * d.t.abs()).sqrt();
        return DistanceResult {
            distance: r,
            phi: d.t.signum() * 2.0 * PI / r,
            alpha: 0.0,
            unique: false,
        };
    }
    let theta = solve_theta(d.t / (rho * rho));
    let r = rho * series::over_sin(theta);
    let phi = 2.0 * theta / r;
    let alpha = normalize_angle(d.y.atan2(d.x) + theta);
    DistanceResult { distance: r, phi, alpha, unique: true }
}

/// Distance-only fast path used by the brute-force oracle.
pub fn cc_distance_value(p: Point, q: Point) -> f64 {
    let d = group_mul(inverse(p), q);
    let rho = d.z_norm();
    if near_center(rho, d.t) {
        return (PI * d.t.abs()).sqrt();
    }
    let theta = solve_theta(d.t / (rho * rho));
    rho * series::over_sin(theta)
}

/// Distance between the endpoints of the arc [0, σ] of a geodesic.
///
/// Equals σ when the arc is within the lifetime, and drops strictly below σ
/// once the arc overshoots it.
pub fn min_check(g: &Geodesic, sigma: f64) -> f64 {
    cc_distance(eval(g, 0.0), eval(g, sigma)).distance
}

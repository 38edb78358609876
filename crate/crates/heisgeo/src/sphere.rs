//! Closed forms for the unit Carnot-Carathéodory sphere Σ = ∂B(0, 1).
//!
//! The upper half is parametrized by (u, φ) with u ∈ (0, 2π):
//!
//! ```text
//! z(u) = e^{iφ}·2 sin(u/2)/u,    t(u) = 2(u − sin u)/u²,
//! ```
//!
//! reaching the north pole NP = (0, 0, 1/π) as u → 2π. (The south pole is
//! (0, 0, −1/π); the lower half follows from the upper one by the isometry
//! t ↦ −t composed with a reflection and is not separately tabulated.)
//! Σ minus its poles is ruled by horizontal curves obtained by composing
//! the profile with the phase ψ, ψ' = cot²p − cot(p)/p, ψ(0) = 0.
//!
//! With v = u/2, the first-order data of the graph form is
//! Xf = (2/v)cos(φ−v), Yf = (2/v)sin(φ−v), so |∇_H f| = 2/v and the
//! curvature of the metric normal is p_Σ = 4/|∇_H f| = u (the factored
//! Hessian with p_Σ = u is the one confirmed by the finite-difference
//! oracle; see the arbitration test in the acceptance suite).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::curvature::CurvatureReport;
use crate::error::{Error, Result};
use crate::heis::{HVec, Mat2, Point};
use crate::surface::sphere_profile_point;

/// Chart parameters of the upper half of Σ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SphereParam {
    /// Profile parameter u ∈ (0, 2π).
    pub u: f64,
    /// Rotation angle.
    pub phi: f64,
}

impl SphereParam {
    pub fn new(u: f64, phi: f64) -> Result<SphereParam> {
        check_u(u)?;
        Ok(SphereParam { u, phi })
    }

    /// v = u/2.
    pub fn v(&self) -> f64 {
        0.5 * self.u
    }
}

fn check_u(u: f64) -> Result<()> {
    if !(u > 0.0 && u < 2.0 * PI) {
        return Err(Error::InvalidArgument(format!(
            "sphere parameter u must lie in (0, 2π), got {u} (the poles are excluded)"
        )));
    }
    Ok(())
}

/// The surface point of the chart; d(O, ·) = 1.
pub fn sphere_point(sp: &SphereParam) -> Result<Point> {
    check_u(sp.u)?;
    Ok(sphere_profile_point(sp.u, sp.phi))
}

/// Mean curvature of Σ at profile parameter u:
///
/// ```text
/// h_Σ(u) = (u cos u − sin u) / ((u/2)cos(u/2) − sin(u/2)) · u/(4 sin(u/2))
/// ```
///
/// Continuous on (0, 2π) with limit 4 as u → 0 (series below 1e-3) and a
/// pole-type divergence as u → 2π.
pub fn sphere_mean_curvature(u: f64) -> Result<f64> {
    check_u(u)?;
    if u < 1e-3 {
        // h = 4(1 − u²/30 + O(u⁴)) near the equator.
        return Ok(4.0 * (1.0 - u * u / 30.0));
    }
    let v = 0.5 * u;
    Ok((u * u.cos() - u.sin()) / (v * v.cos() - v.sin()) * u / (4.0 * v.sin()))
}

/// First-order data (Xf, Yf) = ((2/v)cos(φ−v), (2/v)sin(φ−v)) of the graph
/// form at a chart point.
pub fn sphere_first_order(sp: &SphereParam) -> Result<(f64, f64)> {
    check_u(sp.u)?;
    let v = sp.v();
    let (s, c) = (sp.phi - v).sin_cos();
    Ok((2.0 / v * c, 2.0 / v * s))
}

/// Curvature report of Σ at a chart point, assembled from the closed forms:
/// the factored Hessian (v⊗v)(hI + pJ) with h = h_Σ(u), p = u, and
/// v = sin(φ−v)·X − cos(φ−v)·Y.
pub fn sphere_hessian(sp: &SphereParam) -> Result<CurvatureReport> {
    let point = sphere_point(sp)?;
    let h = sphere_mean_curvature(sp.u)?;
    let p = sp.u;
    let v = sp.v();
    let (s, c) = (sp.phi - v).sin_cos();
    let tangent = HVec::new(point, s, -c);
    let normal = HVec::new(point, c, s);
    let m = Mat2::outer(tangent.a, tangent.b);
    let k = Mat2::identity().scale(h).add(&Mat2::symplectic().scale(p));
    let hess = m.mul(&k);
    let hess_sym = hess.symmetrize();
    let eigen = hess_sym.eigenvalues_symmetric();
    let (xf, yf) = sphere_first_order(sp)?;
    let grad = xf.hypot(yf);
    let q = h * grad * grad * grad;
    Ok(CurvatureReport {
        point,
        h,
        p,
        q,
        v: tangent,
        n: normal,
        hess,
        hess_sym,
        eigen,
    })
}

/// Phase derivative of the horizontal ruling, ψ'(p) = cot²p − cot(p)/p,
/// with the removable value −1/3 at p = 0.
pub fn sphere_psi_prime(p: f64) -> f64 {
    if p.abs() < 1e-3 {
        let p2 = p * p;
        return -1.0 / 3.0 + 4.0 * p2 / 45.0 + 4.0 * p2 * p2 / 315.0;
    }
    let c = 1.0 / p.tan();
    c * c - c / p
}

/// One sample of a horizontal ruling curve.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct RulingSample {
    pub u: f64,
    /// Accumulated phase ψ(u/2).
    pub psi: f64,
    pub point: Point,
}

/// A sampled ruling curve; `truncated` is set when the requested range had
/// to be clipped away from the poles.
#[derive(Debug, Clone)]
pub struct RulingCurve {
    pub theta: f64,
    pub samples: Vec<RulingSample>,
    pub truncated: bool,
}

/// Sample the horizontal curve of phase offset θ on Σ over u ∈ [u0, u1]:
///
/// ```text
/// z(u) = e^{i(ψ(u/2) + θ)}·2 sin(u/2)/u,   t(u) = 2(u − sin u)/u²,
/// ```
///
/// with ψ integrated from ψ(0) = 0 by a 4th-order quadrature of ψ'.
pub fn sphere_ruling(theta: f64, u_range: (f64, f64), step: f64) -> Result<RulingCurve> {
    if !(step > 0.0) || !(u_range.0 < u_range.1) {
        return Err(Error::InvalidArgument(format!(
            "ruling needs u0 < u1 and positive step, got {u_range:?}, {step}"
        )));
    }
    let lo_lim = 1e-6;
    let hi_lim = 2.0 * PI - 1e-6;
    let truncated = u_range.0 < lo_lim || u_range.1 > hi_lim;
    let u0 = u_range.0.max(lo_lim);
    let u1 = u_range.1.min(hi_lim);
    if !(u0 < u1) {
        return Err(Error::InvalidArgument(
            "ruling range lies entirely outside (0, 2π)".to_string(),
        ));
    }

    // RK4 quadrature of ψ' in the variable p = u/2, from 0 to each sample.
    let quad_step = (step / 2.0).min(1e-3);
    let mut psi = 0.0;
    let mut p_cur = 0.0;
    let advance_to = |p_target: f64, psi: &mut f64, p_cur: &mut f64| {
        while *p_cur < p_target - 1e-15 {
            let h = quad_step.min(p_target - *p_cur);
            let k1 = sphere_psi_prime(*p_cur);
            let k2 = sphere_psi_prime(*p_cur + 0.5 * h);
            let k4 = sphere_psi_prime(*p_cur + h);
            *psi += h / 6.0 * (k1 + 4.0 * k2 + k4);
            *p_cur += h;
        }
    };

    let n = ((u1 - u0) / step).round().max(1.0) as usize;
    let mut samples = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let u = if k == n { u1 } else { u0 + k as f64 * step };
        advance_to(0.5 * u, &mut psi, &mut p_cur);
        samples.push(RulingSample {
            u,
            psi,
            point: sphere_profile_point(u, psi + theta),
        });
    }
    Ok(RulingCurve { theta, samples, truncated })
}

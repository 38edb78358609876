//! Curvatures of a surface and the horizontal Hessian of its signed
//! distance.
//!
//! At a non-characteristic surface point, with Q the horizontal second
//! fundamental polynomial
//!
//! ```text
//! Q = XXg·(Yg)² − 2(XY)*g·Xg·Yg + YYg·(Xg)²,    (XY)* = (XY + YX)/2,
//! ```
//!
//! the mean curvature is h = Q/|∇_H g|³ (equivalently the horizontal
//! divergence of the unit normal, and the Weingarten multiplier), the
//! curvature of the metric normal is p = 4 ∂_t g / |∇_H g|, and the
//! horizontal Hessian of the signed distance factors as
//!
//! ```text
//! Hess_H δ_S = (v ⊗ v) · (h·I + p·J)
//! ```
//!
//! with v the unit horizontal tangent. The matrix layout is
//! [[XXδ, YXδ], [XYδ, YYδ]]; the trace is h, the determinant vanishes, and
//! the symmetrized matrix has characteristic polynomial λ² − hλ − p²/4.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heis::{HVec, Mat2, Point};
use crate::surface::Surface;

/// Curvature data of a surface at a point.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurvatureReport {
    pub point: Point,
    /// Mean ("real") curvature h_S.
    pub h: f64,
    /// Imaginary curvature p_S (curvature of the metric normal).
    pub p: f64,
    /// The polynomial Q.
    pub q: f64,
    /// Unit horizontal tangent.
    pub v: HVec,
    /// Unit outward horizontal normal.
    pub n: HVec,
    /// Horizontal Hessian of δ_S, layout [[XXδ, YXδ], [XYδ, YYδ]].
    pub hess: Mat2,
    /// (hess + hessᵀ)/2.
    pub hess_sym: Mat2,
    /// Eigenvalues of `hess_sym`, ascending.
    pub eigen: (f64, f64),
}

/// Q evaluated from the horizontal second derivatives of the defining
/// function.
pub fn q_form(s: &Surface, p: Point) -> Result<f64> {
    let (xg, yg) = s.horizontal_gradient(p)?;
    let hs = s.horizontal_second(p);
    let xy_sym = 0.5 * (hs.xy + hs.yx);
    Ok(hs.xx * yg * yg - 2.0 * xy_sym * xg * yg + hs.yy * xg * xg)
}

/// Mean curvature h = Q / |∇_H g|³.
pub fn mean_curvature(s: &Surface, p: Point) -> Result<f64> {
    let fr = s.frame(p)?;
    let q = q_form(s, p)?;
    Ok(q / fr.grad_norm.powi(3))
}

/// Mean curvature through the divergence form X(Xg/|∇_H g|) + Y(Yg/|∇_H g|),
/// assembled independently of `mean_curvature`.
pub fn mean_curvature_divergence(s: &Surface, p: Point) -> Result<f64> {
    let w = weingarten_matrix(s, p)?;
    Ok(w.trace())
}

/// Imaginary curvature p = 4 ∂_t g / |∇_H g| = −[X,Y]g/|∇_H g|.
///
/// Controls the metric normal's minimizing lifetime π/|p|; vanishes exactly
/// on vertical surfaces.
pub fn imaginary_curvature(s: &Surface, p: Point) -> Result<f64> {
    let fr = s.frame(p)?;
    let (_, _, gt) = s.g_gradient(p);
    Ok(4.0 * gt / fr.grad_norm)
}

/// Full curvature report.
///
/// The Hessian is assembled twice: from the explicit entry formulas and as
/// the matrix product (v⊗v)(hI + pJ) with h from the divergence form. The
/// two routes must agree to 1e-12 relative; a disagreement is reported as a
/// singular configuration.
pub fn hessian(s: &Surface, p: Point) -> Result<CurvatureReport> {
    let fr = s.frame(p)?;
    let (_, _, gt) = s.g_gradient(p);
    let n = fr.grad_norm;
    let q = q_form(s, p)?;
    let h = q / n.powi(3);
    let imag = 4.0 * gt / n;

    // Explicit entries. For a graph (∂_t g = 1) these are the classical
    // display; the ∂_t g factor generalizes them to implicit orientations.
    let (xg, yg) = (fr.xg, fr.yg);
    let n3 = n.powi(3);
    let n5 = n.powi(5);
    let explicit = Mat2::new(
        yg * yg * q / n5 + 4.0 * gt * xg * yg / n3,
        -yg * (xg * q / n5 - 4.0 * gt * yg / n3),
        -xg * (yg * q / n5 + 4.0 * gt * xg / n3),
        xg * xg * q / n5 - 4.0 * gt * xg * yg / n3,
    );

    // Factored form with the divergence-route h.
    let h_div = mean_curvature_divergence(s, p)?;
    let m = Mat2::outer(fr.v.a, fr.v.b);
    let k = Mat2::identity().scale(h_div).add(&Mat2::symplectic().scale(imag));
    let factored = m.mul(&k);

    let denom = explicit.frobenius().max(factored.frobenius()).max(f64::MIN_POSITIVE);
    let rel = explicit
        .0
        .iter()
        .zip(factored.0.iter())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max)
        / denom;
    if rel > 1e-12 {
        return Err(Error::Singular(format!(
            "hessian assembly routes disagree (relative {rel:.3e})"
        )));
    }

    let hess_sym = explicit.symmetrize();
    let eigen = hess_sym.eigenvalues_symmetric();
    Ok(CurvatureReport {
        point: p,
        h,
        p: imag,
        q,
        v: fr.v,
        n: fr.n,
        hess: explicit,
        hess_sym,
        eigen,
    })
}

/// The Weingarten matrix
/// [[X(Xg/|∇|), Y(Xg/|∇|)], [X(Yg/|∇|), Y(Yg/|∇|)]]
/// assembled from analytic derivatives of g.
pub fn weingarten_matrix(s: &Surface, p: Point) -> Result<Mat2> {
    let fr = s.frame(p)?;
    let hs = s.horizontal_second(p);
    let n = fr.grad_norm;
    let (xg, yg) = (fr.xg, fr.yg);
    // X|∇| = (Xg·XXg + Yg·XYg)/|∇|, Y|∇| = (Xg·YXg + Yg·YYg)/|∇|.
    let xn = (xg * hs.xx + yg * hs.xy) / n;
    let yn = (xg * hs.yx + yg * hs.yy) / n;
    Ok(Mat2::new(
        hs.xx / n - xg * xn / (n * n),
        hs.yx / n - xg * yn / (n * n),
        hs.xy / n - yg * xn / (n * n),
        hs.yy / n - yg * yn / (n * n),
    ))
}

/// The Weingarten map restricted to the horizontal tangent line: applies the
/// matrix to the basis vector (−Yg, Xg) and extracts the multiplication
/// constant, which equals the mean curvature.
pub fn weingarten(s: &Surface, p: Point) -> Result<f64> {
    let fr = s.frame(p)?;
    let w = weingarten_matrix(s, p)?;
    let basis = [-fr.yg, fr.xg];
    let image = w.mul_vec(basis);
    let norm_sq = basis[0] * basis[0] + basis[1] * basis[1];
    Ok((image[0] * basis[0] + image[1] * basis[1]) / norm_sq)
}

/// A numerically integrated horizontal curve on a surface.
#[derive(Debug, Clone)]
pub struct HorizontalCurve {
    /// (τ, Γ(τ)) samples, ascending in τ.
    pub samples: Vec<(f64, Point)>,
    /// Set when integration stopped at a characteristic point.
    pub truncated: Option<CurveTruncation>,
}

#[derive(Debug, Clone, Copy)]
pub struct CurveTruncation {
    pub tau: f64,
    pub grad_norm: f64,
}

fn leaf_velocity(s: &Surface, q: Point) -> [f64; 3] {
    let (xg, yg) = s.xg_yg(q);
    // Γ' = Yg·X − Xg·Y, in ambient coordinates.
    [yg, -xg, 2.0 * q.y * yg + 2.0 * q.x * xg]
}

fn rk4_step(s: &Surface, q: Point, dt: f64) -> Point {
    let f = |p: Point| leaf_velocity(s, p);
    let add = |p: Point, k: [f64; 3], c: f64| Point::new(p.x + c * k[0], p.y + c * k[1], p.t + c * k[2]);
    let k1 = f(q);
    let k2 = f(add(q, k1, 0.5 * dt));
    let k3 = f(add(q, k2, 0.5 * dt));
    let k4 = f(add(q, k3, dt));
    Point::new(
        q.x + dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
        q.y + dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
        q.t + dt / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]),
    )
}

/// Default integrator step at a point: min(1e-3, 0.01/|h|).
pub fn default_curve_step(s: &Surface, p: Point) -> f64 {
    match mean_curvature(s, p) {
        Ok(h) if h.abs() > 1e-12 => (0.01 / h.abs()).min(1e-3),
        _ => 1e-3,
    }
}

/// Integrate the horizontal curve Γ' = Yg·X − Xg·Y, Γ(0) = p over
/// τ ∈ [arc.0, arc.1] (arc.0 ≤ 0 ≤ arc.1) with a classical 4th-order
/// one-step method at fixed step.
///
/// No on-surface renormalization is applied; drift is a test signal.
/// Reaching a characteristic point truncates the curve with a diagnostic.
pub fn horizontal_curve(
    s: &Surface,
    p: Point,
    arc: (f64, f64),
    step: f64,
) -> Result<HorizontalCurve> {
    if !(step > 0.0) || !(arc.0 <= 0.0 && arc.1 >= 0.0) || !arc.0.is_finite() || !arc.1.is_finite()
    {
        return Err(Error::InvalidArgument(format!(
            "curve window must satisfy arc.0 <= 0 <= arc.1 with positive step, got {arc:?}, {step}"
        )));
    }
    s.frame(p)?; // non-characteristic at the start, and on the surface

    let mut truncated = None;
    let mut forward: Vec<(f64, Point)> = vec![(0.0, p)];
    'dir: for dir in [1.0f64, -1.0] {
        let mut q = p;
        let mut tau = 0.0;
        let limit = if dir > 0.0 { arc.1 } else { -arc.0 };
        let n_steps = (limit / step).round() as usize;
        for _ in 0..n_steps {
            let (xg, yg) = s.xg_yg(q);
            let gn = xg.hypot(yg);
            if gn <= crate::surface::char_tol(q) {
                truncated = Some(CurveTruncation { tau: dir * tau, grad_norm: gn });
                continue 'dir;
            }
            q = rk4_step(s, q, dir * step);
            tau += step;
            forward.push((dir * tau, q));
        }
    }
    forward.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    Ok(HorizontalCurve { samples: forward, truncated })
}

/// Euclidean signed curvature of the projected horizontal curve at p,
/// estimated from integrated samples (three-point stencil with one level of
/// step halving).
///
/// Equals the mean curvature; the comparison is an integration-based check
/// on h, independent of the closed forms.
pub fn projected_curvature(s: &Surface, p: Point) -> Result<f64> {
    s.frame(p)?;
    let k_at = |dt: f64| -> f64 {
        let fwd = rk4_step(s, p, dt);
        let bwd = rk4_step(s, p, -dt);
        let xp = (fwd.x - bwd.x) / (2.0 * dt);
        let yp = (fwd.y - bwd.y) / (2.0 * dt);
        let xpp = (fwd.x - 2.0 * p.x + bwd.x) / (dt * dt);
        let ypp = (fwd.y - 2.0 * p.y + bwd.y) / (dt * dt);
        -(xp * ypp - yp * xpp) / (xp * xp + yp * yp).powf(1.5)
    };
    // The stencil error is O(dt²); one Richardson level removes it.
    let dt = 5e-4;
    let k1 = k_at(dt);
    let k2 = k_at(0.5 * dt);
    Ok((4.0 * k2 - k1) / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heis::{rotate, ORIGIN};
    use crate::surface::sphere_profile_point;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn plane_pt(x: f64, y: f64) -> Point {
        Point::new(x, y, 0.0)
    }

    #[test]
    fn q_on_plane_vanishes() {
        let plane = Surface::plane(0.0);
        for p in [plane_pt(1.0, 0.0), plane_pt(-0.3, 2.0), plane_pt(0.5, 0.5)] {
            assert_abs_diff_eq!(q_form(&plane, p).unwrap(), 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn q_on_paraboloid_matches_hand_value() {
        // XXg = −2, YYg = −2, (XY)* = 0, Xg = Yg = −2 at (1,0,1): Q = −16.
        let parab = Surface::paraboloid(1.0);
        assert_abs_diff_eq!(q_form(&parab, Point::new(1.0, 0.0, 1.0)).unwrap(), -16.0, epsilon = 1e-13);
    }

    #[test]
    fn q_over_grad_cubed_is_rotation_invariant() {
        let parab = Surface::paraboloid(1.0);
        let p = Point::new(1.0, 0.0, 1.0);
        let h0 = mean_curvature(&parab, p).unwrap();
        for theta in [0.7, 2.9, 4.4] {
            let h = mean_curvature(&parab, rotate(theta, p)).unwrap();
            assert_abs_diff_eq!(h, h0, epsilon = 1e-12);
        }
    }

    #[test]
    fn mean_curvature_plane_zero_cylinder_inverse_radius() {
        let plane = Surface::plane(0.0);
        assert_abs_diff_eq!(mean_curvature(&plane, plane_pt(1.0, 0.0)).unwrap(), 0.0, epsilon = 1e-14);
        for r in [0.5, 1.0, 2.0] {
            let cyl = Surface::cylinder(r).unwrap();
            let p = Point::new(r * 0.6f64.cos(), r * 0.6f64.sin(), 0.4);
            assert_abs_diff_eq!(mean_curvature(&cyl, p).unwrap(), 1.0 / r, epsilon = 1e-12);
        }
    }

    #[test]
    fn sphere_mean_curvature_at_u_pi() {
        let sph = Surface::cc_sphere();
        let p = sphere_profile_point(PI, 0.0);
        assert_abs_diff_eq!(mean_curvature(&sph, p).unwrap(), PI * PI / 4.0, epsilon = 1e-10);
    }

    #[test]
    fn imaginary_curvature_values() {
        let plane = Surface::plane(0.0);
        assert_abs_diff_eq!(imaginary_curvature(&plane, plane_pt(1.0, 0.0)).unwrap(), 2.0, epsilon = 1e-14);
        let cyl = Surface::cylinder(1.0).unwrap();
        assert_abs_diff_eq!(
            imaginary_curvature(&cyl, Point::new(0.0, 1.0, 0.2)).unwrap(),
            0.0,
            epsilon = 1e-15
        );
        // Graph form: p = 4/|∇_H f| = 2/d(P,C).
        let parab = Surface::paraboloid(1.0);
        let p = Point::new(1.0, 0.0, 1.0);
        let d = parab.char_plane_distance(p).unwrap();
        assert_abs_diff_eq!(imaginary_curvature(&parab, p).unwrap(), 2.0 / d, epsilon = 1e-13);
    }

    #[test]
    fn hessian_on_plane_matches_hand_matrix() {
        let plane = Surface::plane(0.0);
        let rep = hessian(&plane, plane_pt(1.0, 0.0)).unwrap();
        assert_abs_diff_eq!(rep.h, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(rep.p, 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(rep.v.a, -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(rep.v.b, 0.0, epsilon = 1e-15);
        let expect = [0.0, 2.0, 0.0, 0.0];
        for i in 0..4 {
            assert_abs_diff_eq!(rep.hess.0[i], expect[i], epsilon = 1e-13);
        }
        assert_abs_diff_eq!(rep.hess.det(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn hessian_trace_and_spectrum_on_random_paraboloid_points() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let parab = Surface::paraboloid(1.0);
        for _ in 0..100 {
            let r = rng.random_range(0.3..1.8);
            let ang = rng.random_range(0.0..2.0 * PI);
            let (x, y) = (r * ang.cos(), r * ang.sin());
            let p = Point::new(x, y, x * x + y * y);
            let rep = hessian(&parab, p).unwrap();
            assert_abs_diff_eq!(rep.hess.trace(), rep.h, epsilon = 1e-10 * (1.0 + rep.h.abs()));
            // char poly of hess_sym: λ² − hλ − p²/4
            let tr = rep.hess_sym.trace();
            let det = rep.hess_sym.det();
            assert_abs_diff_eq!(tr, rep.h, epsilon = 1e-10 * (1.0 + rep.h.abs()));
            assert_abs_diff_eq!(det, -rep.p * rep.p / 4.0, epsilon = 1e-10 * (1.0 + rep.p * rep.p));
            // opposite-sign eigenvalues when p ≠ 0
            assert!(rep.eigen.0 < 0.0 && rep.eigen.1 > 0.0);
        }
    }

    #[test]
    fn cylinder_symmetric_hessian_spectrum() {
        // p = 0 on vertical sets: eigenvalues are {0, h}.
        let cyl = Surface::cylinder(2.0).unwrap();
        let p = Point::new(2.0 * 0.3f64.cos(), 2.0 * 0.3f64.sin(), -0.7);
        let rep = hessian(&cyl, p).unwrap();
        assert_abs_diff_eq!(rep.p, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(rep.eigen.0, 0.0, epsilon = 1e-13);
        assert_abs_diff_eq!(rep.eigen.1, rep.h, epsilon = 1e-13);
        // hess symmetric here
        assert_abs_diff_eq!(rep.hess.0[1], rep.hess.0[2], epsilon = 1e-13);
    }

    #[test]
    fn hessian_blowup_rate_near_characteristic_point() {
        // ‖hess‖_F · d(P,C) = √5 along the ray (s, 0, s²) on the paraboloid.
        let parab = Surface::paraboloid(1.0);
        for &sx in &[1e-1, 1e-2, 1e-3, 1e-4] {
            let p = Point::new(sx, 0.0, sx * sx);
            let rep = hessian(&parab, p).unwrap();
            let d = parab.char_plane_distance(p).unwrap();
            assert_abs_diff_eq!(rep.hess.frobenius() * d, 5.0f64.sqrt(), epsilon = 1e-6);
        }
    }

    #[test]
    fn weingarten_equals_mean_curvature_and_stays_tangent() {
        let parab = Surface::paraboloid(1.0);
        let p = Point::new(1.0, 0.0, 1.0);
        let lam = weingarten(&parab, p).unwrap();
        let h = mean_curvature(&parab, p).unwrap();
        assert_abs_diff_eq!(lam, h, epsilon = 1e-10);
        // Image of the tangent basis has no component along n.
        let fr = parab.frame(p).unwrap();
        let w = weingarten_matrix(&parab, p).unwrap();
        let img = w.mul_vec([-fr.yg, fr.xg]);
        let along_n = img[0] * fr.n.a + img[1] * fr.n.b;
        assert_abs_diff_eq!(along_n, 0.0, epsilon = 1e-10);
        // Plane: zero curvature.
        let plane = Surface::plane(0.0);
        assert_abs_diff_eq!(weingarten(&plane, plane_pt(1.0, 0.0)).unwrap(), 0.0, epsilon = 1e-13);
    }

    #[test]
    fn three_way_mean_curvature_agreement() {
        for (s, p) in [
            (Surface::plane(0.0), plane_pt(0.7, -1.1)),
            (Surface::paraboloid(1.0), Point::new(1.0, 0.0, 1.0)),
            (Surface::cylinder(2.0).unwrap(), Point::new(2.0, 0.0, 0.1)),
            (Surface::cc_sphere(), sphere_profile_point(2.4, 1.0)),
        ] {
            let a = mean_curvature(&s, p).unwrap();
            let b = mean_curvature_divergence(&s, p).unwrap();
            let c = weingarten(&s, p).unwrap();
            assert_abs_diff_eq!(a, b, epsilon = 1e-10 * (1.0 + a.abs()));
            assert_abs_diff_eq!(a, c, epsilon = 1e-10 * (1.0 + a.abs()));
        }
    }

    #[test]
    fn horizontal_curve_on_plane_is_radial_ray() {
        // Γ' = (−2x)X − (2y)Y on {t=0}: the projection runs along the ray
        // through the start point toward the (characteristic) origin.
        let plane = Surface::plane(0.0);
        let start = plane_pt(1.0, 0.0);
        let curve = horizontal_curve(&plane, start, (-0.1, 0.4), 1e-3).unwrap();
        assert!(curve.truncated.is_none());
        for &(_, q) in &curve.samples {
            assert_abs_diff_eq!(q.y, 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(q.t, 0.0, epsilon = 1e-12);
            assert!(q.x > 0.0);
        }
        // x(τ) = e^{−2τ}
        let (tau, q) = *curve.samples.last().unwrap();
        assert_abs_diff_eq!(q.x, (-2.0 * tau).exp(), epsilon = 1e-10);
    }

    #[test]
    fn horizontal_curve_stays_on_surface_and_horizontal() {
        let sph = Surface::cc_sphere();
        let start = sphere_profile_point(PI / 2.0, 0.3);
        let step = 1e-3;
        let curve = horizontal_curve(&sph, start, (-0.05, 0.05), step).unwrap();
        assert!(curve.samples.len() > 50);
        for &(_, q) in &curve.samples {
            assert!(sph.g(q).abs() < 1e-8);
        }
        // ṫ = 2(ẋy − xẏ) along the samples (central differences).
        for w in curve.samples.windows(3) {
            let (a, m, b) = (w[0].1, w[1].1, w[2].1);
            let xd = (b.x - a.x) / (2.0 * step);
            let yd = (b.y - a.y) / (2.0 * step);
            let td = (b.t - a.t) / (2.0 * step);
            assert_abs_diff_eq!(td, 2.0 * (xd * m.y - m.x * yd), epsilon = 1e-8);
        }
    }

    #[test]
    fn horizontal_curve_truncates_at_characteristic_point() {
        // On the plane the curve heads to the characteristic origin;
        // with a long window it must truncate rather than step over it.
        let plane = Surface::plane(0.0);
        let curve = horizontal_curve(&plane, plane_pt(0.05, 0.0), (0.0, 20.0), 1e-2).unwrap();
        let trunc = curve.truncated.expect("curve should truncate at the origin");
        assert!(trunc.grad_norm <= 1e-8 * 2.0);
    }

    #[test]
    fn projected_curvature_matches_mean_curvature() {
        for (s, p) in [
            (Surface::plane(0.0), plane_pt(1.0, 0.0)),
            (Surface::cylinder(2.0).unwrap(), Point::new(2.0, 0.0, 0.0)),
            (Surface::paraboloid(1.0), Point::new(1.0, 0.0, 1.0)),
            (Surface::cc_sphere(), sphere_profile_point(2.0, 0.7)),
        ] {
            let k = projected_curvature(&s, p).unwrap();
            let h = mean_curvature(&s, p).unwrap();
            assert_abs_diff_eq!(k, h, epsilon = 1e-5 * (1.0 + h.abs()));
        }
        // Cylinder r=2 projects to a circle of curvature 1/2 with this
        // orientation.
        let cyl = Surface::cylinder(2.0).unwrap();
        let k = projected_curvature(&cyl, Point::new(2.0, 0.0, 0.0)).unwrap();
        assert_abs_diff_eq!(k, 0.5, epsilon = 1e-6);
    }

    #[test]
    fn report_rejects_characteristic_and_off_surface_points() {
        let plane = Surface::plane(0.0);
        assert!(matches!(hessian(&plane, ORIGIN), Err(Error::CharacteristicPoint { .. })));
        assert!(matches!(
            hessian(&plane, Point::new(1.0, 0.0, 0.5)),
            Err(Error::NotOnSurface { .. })
        ));
    }
}

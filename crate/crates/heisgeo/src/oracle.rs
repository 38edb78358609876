//! Independent brute-force ground truth: numerical signed distance to a
//! surface, finite-difference horizontal derivatives, and eikonal
//! residuals.
//!
//! This module is the arbiter for the closed forms: it never calls the
//! curvature formulas. The signed distance is found by minimizing
//! q ↦ d(p, q) over a chart window of the surface with a coarse grid and
//! derivative-free local grid refinement; when the minimizing geodesic is a
//! well-posed metric normal, a Newton solve of the normal-shooting
//! equations sharpens the refined value to machine precision (the pure
//! value search bottoms out near √ε at on-surface queries, because chart
//! moves displace the candidate foot vertically at first order). The
//! shooting result is accepted only when it stays consistent with the
//! grid value, which keeps the grid as the arbiter at its own accuracy and
//! rejects normals past their minimizing lifetime.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geodesic::cc_distance_value;
use crate::heis::{Mat2, Point};
use crate::surface::Surface;

/// Finite-difference configuration.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct FdConfig {
    /// Base step; valid range [1e-7, 1e-2].
    pub step: f64,
    /// Richardson extrapolation levels (0 = plain central differences).
    pub richardson: u32,
}

impl FdConfig {
    /// Default configuration at a point: step 1e-4·(1+|p|), two Richardson
    /// levels.
    pub fn for_point(p: Point) -> FdConfig {
        FdConfig { step: 1e-4 * (1.0 + p.scale()), richardson: 2 }
    }

    pub fn with_richardson(self, levels: u32) -> FdConfig {
        FdConfig { richardson: levels, ..self }
    }

    fn validate(&self) -> Result<()> {
        if !(self.step >= 1e-7 && self.step <= 1e-2) {
            return Err(Error::InvalidArgument(format!(
                "fd step {} outside [1e-7, 1e-2]",
                self.step
            )));
        }
        Ok(())
    }
}

/// Rectangular window in the surface chart parameters.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ChartWindow {
    pub a: (f64, f64),
    pub b: (f64, f64),
}

impl ChartWindow {
    pub fn new(a: (f64, f64), b: (f64, f64)) -> Result<ChartWindow> {
        if !(a.0 < a.1 && b.0 < b.1) {
            return Err(Error::InvalidArgument(format!(
                "empty chart window a={a:?} b={b:?}"
            )));
        }
        Ok(ChartWindow { a, b })
    }

    /// Window of half-width `half` centered at chart coordinates (a, b).
    pub fn centered(a: f64, b: f64, half: f64) -> ChartWindow {
        ChartWindow { a: (a - half, a + half), b: (b - half, b + half) }
    }

    fn clamp(&self, a: f64, b: f64) -> (f64, f64) {
        (a.clamp(self.a.0, self.a.1), b.clamp(self.b.0, self.b.1))
    }

    fn near_boundary(&self, a: f64, b: f64) -> bool {
        let ea = 1e-3 * (self.a.1 - self.a.0);
        let eb = 1e-3 * (self.b.1 - self.b.0);
        a - self.a.0 < ea || self.a.1 - a < ea || b - self.b.0 < eb || self.b.1 - b < eb
    }
}

/// Brute-force signed distance result.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct OracleDistance {
    /// Signed distance; negative inside Ω.
    pub value: f64,
    /// Arg-min on the surface.
    pub foot: Point,
    /// Distance evaluations spent.
    pub iterations: u32,
    /// False when the minimizer sits on the window boundary (the true foot
    /// may be outside).
    pub trusted: bool,
    /// True when the shooting polish converged and was accepted.
    pub polished: bool,
}

/// Default coarse grid resolution.
pub const DEFAULT_GRID: usize = 64;

/// Brute-force signed distance from `p` to the surface patch covered by
/// `window`, minimized over an `grid`×`grid` coarse grid with local
/// refinement. The caller is responsible for a window containing the true
/// foot.
pub fn oracle_signed_distance(
    s: &Surface,
    p: Point,
    window: &ChartWindow,
    grid: usize,
) -> Result<OracleDistance> {
    if grid < 2 {
        return Err(Error::InvalidArgument(format!("grid must be at least 2, got {grid}")));
    }
    ChartWindow::new(window.a, window.b)?;
    let mut evals: u32 = 0;
    let mut dist = |a: f64, b: f64| -> f64 {
        evals += 1;
        cc_distance_value(p, s.chart_point(a, b))
    };

    // Stage 1: coarse grid over the window.
    let (mut best_a, mut best_b, mut best_d) = (f64::NAN, f64::NAN, f64::INFINITY);
    for i in 0..grid {
        let a = window.a.0 + (window.a.1 - window.a.0) * (i as f64 + 0.5) / grid as f64;
        for j in 0..grid {
            let b = window.b.0 + (window.b.1 - window.b.0) * (j as f64 + 0.5) / grid as f64;
            let d = dist(a, b);
            if d < best_d {
                (best_a, best_b, best_d) = (a, b, d);
            }
        }
    }

    // Stage 2: shrinking local grids around the incumbent. Derivative-free,
    // so it remains robust where d(p, ·) loses smoothness (cut locus,
    // lifetime boundary).
    let mut span = 2.0 * ((window.a.1 - window.a.0) / grid as f64)
        .max((window.b.1 - window.b.0) / grid as f64);
    for _ in 0..24 {
        let n = 9;
        let (ca, cb) = (best_a, best_b);
        for i in 0..n {
            let a = ca + span * (2.0 * (i as f64 / (n - 1) as f64) - 1.0);
            for j in 0..n {
                let b = cb + span * (2.0 * (j as f64 / (n - 1) as f64) - 1.0);
                let (a, b) = window.clamp(a, b);
                let d = dist(a, b);
                if d < best_d {
                    (best_a, best_b, best_d) = (a, b, d);
                }
            }
        }
        span *= 0.35;
        if span < 1e-9 * (1.0 + best_a.abs() + best_b.abs()) {
            break;
        }
    }

    let side = s.side(p);
    let sign = if side < 0.0 { -1.0 } else { 1.0 };

    // Stage 3: normal-shooting polish. Solve q = N⁺_{chart(a,b)}(σ) for
    // (a, b, σ); accept only if the Newton iteration converges and |σ| does
    // not exceed the grid value beyond its own accuracy (a longer normal is
    // not the distance).
    let guard = 1e-5 * (1.0 + best_d);
    if let Some((fa, fb, sigma, its)) = shoot_normal(s, p, best_a, best_b, sign * best_d) {
        evals += its;
        if sigma.abs() <= best_d + guard && sigma * sign >= -guard {
            let (fa_c, fb_c) = window.clamp(fa, fb);
            let trusted = !window.near_boundary(fa_c, fb_c) && (fa, fb) == (fa_c, fb_c);
            return Ok(OracleDistance {
                value: sigma,
                foot: s.chart_point(fa, fb),
                iterations: evals,
                trusted,
                polished: true,
            });
        }
    }

    Ok(OracleDistance {
        value: sign * best_d,
        foot: s.chart_point(best_a, best_b),
        iterations: evals,
        trusted: !window.near_boundary(best_a, best_b),
        polished: false,
    })
}

/// Damped Newton on F(a, b, σ) = N⁺_{chart(a,b)}(σ) − p with a
/// finite-difference Jacobian. Returns (a, b, σ, evaluations) on
/// convergence.
fn shoot_normal(s: &Surface, p: Point, a0: f64, b0: f64, sigma0: f64) -> Option<(f64, f64, f64, u32)> {
    let mut x = [a0, b0, sigma0];
    let mut evals = 0u32;
    let res = |x: &[f64; 3]| -> Option<[f64; 3]> {
        let q = s.metric_normal(s.chart_point(x[0], x[1]), x[2]).ok()?;
        Some([q.x - p.x, q.y - p.y, q.t - p.t])
    };
    let norm = |r: &[f64; 3]| r[0].abs().max(r[1].abs()).max(r[2].abs());
    let tol = 1e-12 * (1.0 + p.scale());
    let mut f = res(&x)?;
    evals += 1;
    for _ in 0..30 {
        if norm(&f) <= tol {
            return Some((x[0], x[1], x[2], evals));
        }
        // FD Jacobian, column by column.
        let mut jac = [[0.0f64; 3]; 3];
        for c in 0..3 {
            let h = 1e-6 * (1.0 + x[c].abs());
            let mut xp = x;
            let mut xm = x;
            xp[c] += h;
            xm[c] -= h;
            let fp = res(&xp)?;
            let fm = res(&xm)?;
            evals += 2;
            for r in 0..3 {
                jac[r][c] = (fp[r] - fm[r]) / (2.0 * h);
            }
        }
        let step = solve3(&jac, [-f[0], -f[1], -f[2]])?;
        // Damping: halve until the residual decreases.
        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..8 {
            let xn = [x[0] + lambda * step[0], x[1] + lambda * step[1], x[2] + lambda * step[2]];
            if let Some(fn_) = res(&xn) {
                evals += 1;
                if norm(&fn_) < norm(&f) {
                    x = xn;
                    f = fn_;
                    accepted = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if !accepted {
            return None;
        }
    }
    if norm(&f) <= tol {
        Some((x[0], x[1], x[2], evals))
    } else {
        None
    }
}

/// Solve a 3×3 linear system by Gaussian elimination with partial pivoting.
fn solve3(a: &[[f64; 3]; 3], b: [f64; 3]) -> Option<[f64; 3]> {
    let mut m = [[0.0f64; 4]; 3];
    for r in 0..3 {
        m[r][..3].copy_from_slice(&a[r]);
        m[r][3] = b[r];
    }
    for col in 0..3 {
        let piv = (col..3).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[piv][col].abs() < 1e-300 {
            return None;
        }
        m.swap(col, piv);
        for r in (col + 1)..3 {
            let f = m[r][col] / m[col][col];
            for c in col..4 {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    let mut x = [0.0f64; 3];
    for r in (0..3).rev() {
        let mut acc = m[r][3];
        for c in (r + 1)..3 {
            acc -= m[r][c] * x[c];
        }
        x[r] = acc / m[r][r];
    }
    Some(x)
}

// ---------------------------------------------------------------------------
// Finite-difference horizontal derivatives
// ---------------------------------------------------------------------------

fn richardson<F: FnMut(f64) -> f64>(mut d: F, h: f64, levels: u32) -> f64 {
    // Ladder for O(h²) base differences.
    let n = levels as usize + 1;
    let mut tab: Vec<f64> = (0..n).map(|k| d(h / (1u64 << k) as f64)).collect();
    let mut factor = 4.0;
    for _ in 0..levels {
        for k in 0..tab.len() - 1 {
            tab[k] = (factor * tab[k + 1] - tab[k]) / (factor - 1.0);
        }
        tab.pop();
        factor *= 4.0;
    }
    tab[0]
}

fn x_chord(p: Point, h: f64) -> Point {
    // The straight chord along (1, 0, 2y) is the exact flow of X.
    Point::new(p.x + h, p.y, p.t + 2.0 * p.y * h)
}

fn y_chord(p: Point, h: f64) -> Point {
    Point::new(p.x, p.y + h, p.t - 2.0 * p.x * h)
}

/// Central-difference horizontal gradient (Xφ, Yφ) of a scalar field along
/// the flows of X and Y, Richardson-extrapolated.
pub fn fd_horizontal_gradient<F: Fn(Point) -> f64>(
    phi: &F,
    p: Point,
    cfg: FdConfig,
) -> Result<(f64, f64)> {
    cfg.validate()?;
    let gx = richardson(
        |h| (phi(x_chord(p, h)) - phi(x_chord(p, -h))) / (2.0 * h),
        cfg.step,
        cfg.richardson,
    );
    let gy = richardson(
        |h| (phi(y_chord(p, h)) - phi(y_chord(p, -h))) / (2.0 * h),
        cfg.step,
        cfg.richardson,
    );
    Ok((gx, gy))
}

/// Nested finite-difference horizontal Hessian, layout
/// [[XXφ, YXφ], [XYφ, YYφ]].
pub fn fd_horizontal_hessian<F: Fn(Point) -> f64>(
    phi: &F,
    p: Point,
    cfg: FdConfig,
) -> Result<Mat2> {
    cfg.validate()?;
    let grad_x = |q: Point| -> f64 {
        richardson(|h| (phi(x_chord(q, h)) - phi(x_chord(q, -h))) / (2.0 * h), cfg.step, cfg.richardson)
    };
    let grad_y = |q: Point| -> f64 {
        richardson(|h| (phi(y_chord(q, h)) - phi(y_chord(q, -h))) / (2.0 * h), cfg.step, cfg.richardson)
    };
    let xx = richardson(|h| (grad_x(x_chord(p, h)) - grad_x(x_chord(p, -h))) / (2.0 * h), cfg.step, cfg.richardson);
    let yx = richardson(|h| (grad_x(y_chord(p, h)) - grad_x(y_chord(p, -h))) / (2.0 * h), cfg.step, cfg.richardson);
    let xy = richardson(|h| (grad_y(x_chord(p, h)) - grad_y(x_chord(p, -h))) / (2.0 * h), cfg.step, cfg.richardson);
    let yy = richardson(|h| (grad_y(y_chord(p, h)) - grad_y(y_chord(p, -h))) / (2.0 * h), cfg.step, cfg.richardson);
    Ok(Mat2::new(xx, yx, xy, yy))
}

/// | |∇_H δ̂_S(p)| − 1 | for the brute-force signed distance δ̂_S.
pub fn eikonal_residual(s: &Surface, p: Point, window: &ChartWindow) -> Result<f64> {
    let field = |q: Point| -> f64 {
        oracle_signed_distance(s, q, window, DEFAULT_GRID / 2)
            .map(|o| o.value)
            .unwrap_or(f64::NAN)
    };
    let (gx, gy) = fd_horizontal_gradient(&field, p, FdConfig::for_point(p))?;
    Ok((gx.hypot(gy) - 1.0).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heis::ORIGIN;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn fd_gradient_of_coordinate_fields() {
        let cfg = FdConfig::for_point(ORIGIN);
        let (gx, gy) = fd_horizontal_gradient(&|q: Point| q.x, ORIGIN, cfg).unwrap();
        assert_abs_diff_eq!(gx, 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(gy, 0.0, epsilon = 1e-10);
        // Xt = 2y, Yt = −2x.
        let p = Point::new(0.7, -1.2, 0.4);
        let (gx, gy) = fd_horizontal_gradient(&|q: Point| q.t, p, FdConfig::for_point(p)).unwrap();
        assert_abs_diff_eq!(gx, 2.0 * p.y, epsilon = 1e-9);
        assert_abs_diff_eq!(gy, -2.0 * p.x, epsilon = 1e-9);
    }

    #[test]
    fn fd_hessian_of_polynomials() {
        // Quadratic fields make central differences exact along the flows,
        // so a larger step just lowers the roundoff floor.
        let cfg = FdConfig { step: 1e-3, richardson: 1 };
        let h = fd_horizontal_hessian(&|q: Point| q.x * q.x, ORIGIN, cfg).unwrap();
        assert_abs_diff_eq!(h.0[0], 2.0, epsilon = 1e-8);
        for i in 1..4 {
            assert_abs_diff_eq!(h.0[i], 0.0, epsilon = 1e-8);
        }
        // φ = t: XXφ = YYφ = 0, YXφ = 2, XYφ = −2.
        let p = Point::new(0.3, 0.9, -0.2);
        let h = fd_horizontal_hessian(&|q: Point| q.t, p, cfg).unwrap();
        assert_abs_diff_eq!(h.0[0], 0.0, epsilon = 1e-8);
        assert_abs_diff_eq!(h.0[1], 2.0, epsilon = 1e-8);
        assert_abs_diff_eq!(h.0[2], -2.0, epsilon = 1e-8);
        assert_abs_diff_eq!(h.0[3], 0.0, epsilon = 1e-8);
    }

    #[test]
    fn fd_step_validation() {
        let bad = FdConfig { step: 1e-9, richardson: 1 };
        assert!(fd_horizontal_gradient(&|q: Point| q.x, ORIGIN, bad).is_err());
    }

    #[test]
    fn oracle_on_surface_point_is_zero() {
        let plane = Surface::plane(0.0);
        let p = Point::new(1.0, 0.0, 0.0);
        let window = ChartWindow::centered(1.0, 0.0, 1.0);
        let o = oracle_signed_distance(&plane, p, &window, 32).unwrap();
        assert!(o.value.abs() < 1e-9, "value {}", o.value);
        assert!(o.polished);
        assert!(o.trusted);
        assert_abs_diff_eq!(o.foot.x, 1.0, epsilon = 1e-6);
        assert_abs_diff_eq!(o.foot.y, 0.0, epsilon = 1e-6);
    }

    #[test]
    fn oracle_vertical_point_over_plane() {
        // δ((0,0,s)) = √(πs/2): the normal-coordinate inversion of the
        // plane chart at β = π/2.
        let plane = Surface::plane(0.0);
        let s = 0.5;
        let window = ChartWindow::new((-2.0, 2.0), (-2.0, 2.0)).unwrap();
        let o = oracle_signed_distance(&plane, Point::new(0.0, 0.0, s), &window, 64).unwrap();
        assert_abs_diff_eq!(o.value, (PI * s / 2.0).sqrt(), epsilon = 1e-8);
    }

    #[test]
    fn oracle_sign_inside_outside() {
        let parab = Surface::paraboloid(1.0);
        let window = ChartWindow::centered(1.0, 0.0, 1.0);
        let above = oracle_signed_distance(&parab, Point::new(1.0, 0.0, 1.3), &window, 32).unwrap();
        assert!(above.value > 0.0);
        let below = oracle_signed_distance(&parab, Point::new(1.0, 0.0, 0.7), &window, 32).unwrap();
        assert!(below.value < 0.0);
        assert!(above.polished && below.polished);
    }

    #[test]
    fn oracle_matches_metric_normal_arclength() {
        // δ(N⁺(σ)) = σ on the paraboloid inside the lifetime.
        let parab = Surface::paraboloid(1.0);
        let p = Point::new(1.0, 0.0, 1.0);
        let window = ChartWindow::centered(1.0, 0.0, 1.2);
        for &sigma in &[0.3, 0.05, -0.2] {
            let q = parab.metric_normal(p, sigma).unwrap();
            let o = oracle_signed_distance(&parab, q, &window, 32).unwrap();
            assert_abs_diff_eq!(o.value, sigma, epsilon = 1e-8);
        }
    }

    #[test]
    fn oracle_flags_boundary_minimizer() {
        // Query far to the +x side of a window that cannot contain the foot.
        let plane = Surface::plane(0.0);
        let window = ChartWindow::new((-1.0, 0.2), (-1.0, 1.0)).unwrap();
        let o = oracle_signed_distance(&plane, Point::new(2.0, 0.0, 0.05), &window, 32).unwrap();
        assert!(!o.trusted);
    }

    #[test]
    fn oracle_rejects_empty_window() {
        let plane = Surface::plane(0.0);
        let w = ChartWindow { a: (1.0, 1.0), b: (0.0, 1.0) };
        assert!(oracle_signed_distance(&plane, ORIGIN, &w, 16).is_err());
    }

    #[test]
    fn eikonal_residual_near_plane_and_paraboloid() {
        let plane = Surface::plane(0.0);
        let w = ChartWindow::centered(1.0, 0.0, 1.0);
        let r = eikonal_residual(&plane, Point::new(1.0, 0.0, 0.2), &w).unwrap();
        assert!(r < 1e-5, "plane residual {r}");

        // Query very near the surface (σ = 1e-3).
        let parab = Surface::paraboloid(1.0);
        let q = parab.metric_normal(Point::new(1.0, 0.0, 1.0), 1e-3).unwrap();
        let w = ChartWindow::centered(1.0, 0.0, 1.0);
        let r = eikonal_residual(&parab, q, &w).unwrap();
        assert!(r < 1e-4, "paraboloid residual {r}");
    }

    #[test]
    fn eikonal_residual_for_sphere_exterior_point() {
        // The distance field of the sphere is radial outside. The exact
        // axis point (0,0,0.5) is on the cut locus of the radial field
        // (central differences vanish there by rotational symmetry), so the
        // check runs just off the axis.
        let sph = Surface::cc_sphere();
        let w = ChartWindow::new((4.0, 2.0 * PI - 0.15), (-PI, PI)).unwrap();
        let r = eikonal_residual(&sph, Point::new(0.05, 0.0, 0.5), &w).unwrap();
        assert!(r < 1e-5, "sphere residual {r}");
    }
}

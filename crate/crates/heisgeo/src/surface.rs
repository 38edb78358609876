//! Oriented C³ surfaces: horizontal tangent/normal data, characteristic
//! points, the metric normal, and the surface exponential map.
//!
//! A surface is carried either as a graph t = f(x, y) (with Ω below the
//! graph, so g = t − f is the compatible implicit form) or implicitly as
//! g = 0 with Ω = {g < 0}. All horizontal quantities are derived from the
//! order-two jet of g:
//!
//! ```text
//! Xg = g_x + 2y g_t          Yg = g_y − 2x g_t
//! XXg = g_xx + 4y g_xt + 4y² g_tt
//! YXg = g_xy + 2g_t + 2y g_yt − 2x g_xt − 4xy g_tt
//! XYg = g_xy − 2g_t − 2x g_xt + 2y g_yt − 4xy g_tt
//! YYg = g_yy − 4x g_yt + 4x² g_tt
//! ```

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geodesic;
use crate::heis::{group_mul, HVec, Mat3, Point, ORIGIN};
use crate::series;

/// Analytic jet of a graph function t = f(x, y), to second order.
pub trait GraphJet: Send + Sync {
    fn value(&self, x: f64, y: f64) -> f64;
    /// (f_x, f_y)
    fn gradient(&self, x: f64, y: f64) -> (f64, f64);
    /// (f_xx, f_xy, f_yy)
    fn second(&self, x: f64, y: f64) -> (f64, f64, f64);
}

/// Second partials of an implicit defining function.
#[derive(Debug, Clone, Copy, Default)]
pub struct SecondPartials {
    pub gxx: f64,
    pub gxy: f64,
    pub gxt: f64,
    pub gyy: f64,
    pub gyt: f64,
    pub gtt: f64,
}

/// Analytic jet of an implicit defining function g(x, y, t), to second order.
pub trait ImplicitJet: Send + Sync {
    fn value(&self, p: Point) -> f64;
    /// (g_x, g_y, g_t)
    fn gradient(&self, p: Point) -> (f64, f64, f64);
    fn second(&self, p: Point) -> SecondPartials;
}

enum Form {
    Graph(Arc<dyn GraphJet>),
    Implicit(Arc<dyn ImplicitJet>),
}

/// How the brute-force oracle parametrizes the surface, and how the side of
/// Ω is decided.
#[derive(Clone)]
enum Chart {
    /// (a, b) ↦ (a, b, f(a, b)); inside Ω below the graph.
    GraphXy,
    /// (angle, height) on a vertical cylinder of radius r; Ω is the inside.
    Cylinder { r: f64 },
    /// (u, φ) profile chart of the unit CC sphere; u < 0 is the lower half.
    /// Ω is the unit ball, tested radially.
    SphereProfile,
}

/// First-order horizontal data of a surface at a non-characteristic point.
#[derive(Debug, Clone, Copy)]
pub struct SurfaceFrame {
    pub point: Point,
    pub xg: f64,
    pub yg: f64,
    /// |∇_H g| > 0.
    pub grad_norm: f64,
    /// Unit horizontal tangent, (Yg, −Xg)/|∇_H g|.
    pub v: HVec,
    /// Unit outward horizontal normal, (Xg, Yg)/|∇_H g|.
    pub n: HVec,
}

/// Horizontal second derivatives of the defining function, in the layout
/// [[XXg, YXg], [XYg, YYg]].
#[derive(Debug, Clone, Copy)]
pub struct HorizontalSecond {
    pub xx: f64,
    pub yx: f64,
    pub xy: f64,
    pub yy: f64,
}

/// An oriented surface with analytic derivative data.
#[derive(Clone)]
pub struct Surface {
    form: Arc<Form>,
    chart: Chart,
    descr: String,
    fd_partials: bool,
}

impl fmt::Debug for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Surface({}{})", self.descr, if self.fd_partials { ", fd-partials" } else { "" })
    }
}

/// Characteristic tolerance: below it a point is treated as characteristic
/// and frame/normal operations refuse (curvatures blow up like d(P,C)⁻¹).
pub fn char_tol(p: Point) -> f64 {
    1e-8 * (1.0 + p.scale())
}

fn membership_tol(p: Point) -> f64 {
    1e-9 * (1.0 + p.scale() * p.scale())
}

impl Surface {
    fn from_graph(jet: Arc<dyn GraphJet>, descr: String) -> Surface {
        Surface { form: Arc::new(Form::Graph(jet)), chart: Chart::GraphXy, descr, fd_partials: false }
    }

    /// The horizontal plane {t = c} as a graph, Ω below.
    pub fn plane(c: f64) -> Surface {
        Surface::from_graph(Arc::new(PolyGraph::plane(c)), format!("plane t={c}"))
    }

    /// The paraboloid t = a(x² + y²), Ω below.
    pub fn paraboloid(a: f64) -> Surface {
        Surface::from_graph(Arc::new(PolyGraph::paraboloid(a)), format!("paraboloid a={a}"))
    }

    /// A polynomial graph t = Σ c·xⁱyʲ from (i, j, c) coefficient triples.
    pub fn graph_poly(coeffs: &[(u32, u32, f64)]) -> Surface {
        Surface::from_graph(Arc::new(PolyGraph::new(coeffs)), "graph-poly".to_string())
    }

    /// A custom analytic graph.
    pub fn graph(jet: Arc<dyn GraphJet>) -> Surface {
        Surface::from_graph(jet, "graph".to_string())
    }

    /// A graph given by its values only; partials fall back to central
    /// differences and the surface is flagged accordingly. Downstream
    /// second-order quantities inherit the O(h²) truncation of the fallback.
    pub fn graph_fd(f: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>) -> Surface {
        let mut s = Surface::from_graph(Arc::new(FdGraph { f }), "graph (fd partials)".to_string());
        s.fd_partials = true;
        s
    }

    /// The vertical cylinder x² + y² = r², Ω inside, outward orientation.
    pub fn cylinder(r: f64) -> Result<Surface> {
        if !(r > 0.0) {
            return Err(Error::InvalidArgument(format!("cylinder radius must be positive, got {r}")));
        }
        Ok(Surface {
            form: Arc::new(Form::Implicit(Arc::new(CylinderJet { r }))),
            chart: Chart::Cylinder { r },
            descr: format!("cylinder r={r}"),
            fd_partials: false,
        })
    }

    /// The unit Carnot-Carathéodory sphere ∂B(0,1), upper half as a graph,
    /// Ω = B(0,1) below.
    pub fn cc_sphere() -> Surface {
        Surface {
            form: Arc::new(Form::Graph(Arc::new(CcSphereJet))),
            chart: Chart::SphereProfile,
            descr: "cc-sphere".to_string(),
            fd_partials: false,
        }
    }

    pub fn description(&self) -> &str {
        &self.descr
    }

    pub fn uses_fd_partials(&self) -> bool {
        self.fd_partials
    }

    pub fn is_graph(&self) -> bool {
        matches!(*self.form, Form::Graph(_))
    }

    /// Value of the compatible defining function g (g = t − f for graphs).
    pub fn g(&self, p: Point) -> f64 {
        match &*self.form {
            Form::Graph(j) => p.t - j.value(p.x, p.y),
            Form::Implicit(j) => j.value(p),
        }
    }

    /// (g_x, g_y, g_t).
    pub fn g_gradient(&self, p: Point) -> (f64, f64, f64) {
        match &*self.form {
            Form::Graph(j) => {
                let (fx, fy) = j.gradient(p.x, p.y);
                (-fx, -fy, 1.0)
            }
            Form::Implicit(j) => j.gradient(p),
        }
    }

    pub fn g_second(&self, p: Point) -> SecondPartials {
        match &*self.form {
            Form::Graph(j) => {
                let (fxx, fxy, fyy) = j.second(p.x, p.y);
                SecondPartials { gxx: -fxx, gxy: -fxy, gyy: -fyy, ..Default::default() }
            }
            Form::Implicit(j) => j.second(p),
        }
    }

    pub fn is_on_surface(&self, p: Point) -> bool {
        self.g(p).abs() <= membership_tol(p)
    }

    fn require_on_surface(&self, p: Point) -> Result<()> {
        let residual = self.g(p).abs();
        if residual > membership_tol(p) {
            return Err(Error::NotOnSurface { residual });
        }
        Ok(())
    }

    /// (Xg, Yg) without a membership check.
    pub fn xg_yg(&self, p: Point) -> (f64, f64) {
        let (gx, gy, gt) = self.g_gradient(p);
        (gx + 2.0 * p.y * gt, gy - 2.0 * p.x * gt)
    }

    /// The horizontal gradient (Xg, Yg) of the defining function at a
    /// surface point.
    pub fn horizontal_gradient(&self, p: Point) -> Result<(f64, f64)> {
        self.require_on_surface(p)?;
        Ok(self.xg_yg(p))
    }

    /// Horizontal second derivatives of g in the layout [[XXg, YXg], [XYg, YYg]].
    pub fn horizontal_second(&self, p: Point) -> HorizontalSecond {
        let (_, _, gt) = self.g_gradient(p);
        let s = self.g_second(p);
        let (x, y) = (p.x, p.y);
        HorizontalSecond {
            xx: s.gxx + 4.0 * y * s.gxt + 4.0 * y * y * s.gtt,
            yx: s.gxy + 2.0 * gt + 2.0 * y * s.gyt - 2.0 * x * s.gxt - 4.0 * x * y * s.gtt,
            xy: s.gxy - 2.0 * gt - 2.0 * x * s.gxt + 2.0 * y * s.gyt - 4.0 * x * y * s.gtt,
            yy: s.gyy - 4.0 * x * s.gyt + 4.0 * x * x * s.gtt,
        }
    }

    /// Unit horizontal tangent and outward normal at a non-characteristic
    /// surface point.
    pub fn frame(&self, p: Point) -> Result<SurfaceFrame> {
        self.require_on_surface(p)?;
        let (xg, yg) = self.xg_yg(p);
        let grad_norm = xg.hypot(yg);
        if grad_norm <= char_tol(p) {
            return Err(Error::CharacteristicPoint { grad_norm });
        }
        Ok(SurfaceFrame {
            point: p,
            xg,
            yg,
            grad_norm,
            v: HVec::new(p, yg / grad_norm, -xg / grad_norm),
            n: HVec::new(p, xg / grad_norm, yg / grad_norm),
        })
    }

    /// Distance from p to the characteristic point of the tangent plane,
    /// |∇_H g| / (2|∂_t g|).
    pub fn char_plane_distance(&self, p: Point) -> Result<f64> {
        self.require_on_surface(p)?;
        let (_, _, gt) = self.g_gradient(p);
        if gt == 0.0 {
            return Err(Error::VerticalTangent);
        }
        let (xg, yg) = self.xg_yg(p);
        Ok(xg.hypot(yg) / (2.0 * gt.abs()))
    }

    /// The oriented metric normal N⁺_P S(σ) = P·η(σ): the geodesic leaving
    /// Ω at P along which the signed distance equals arclength (for |σ|
    /// within the lifetime π/|p_S|).
    ///
    /// With w = 4 ∂_t g σ / |∇_H g|,
    ///
    /// ```text
    /// η = ( (σ/|∇|)(Yg·(1−cos w)/w + Xg·sin(w)/w),
    ///       (σ/|∇|)(−Xg·(1−cos w)/w + Yg·sin(w)/w),
    ///       2σ²(w − sin w)/w² )
    /// ```
    ///
    /// ∂_t g = 0 is the straight-normal limit (w = 0).
    pub fn metric_normal(&self, p: Point, sigma: f64) -> Result<Point> {
        let fr = self.frame(p)?;
        let (_, _, gt) = self.g_gradient(p);
        let w = 4.0 * gt * sigma / fr.grad_norm;
        let f1 = series::one_minus_cos_over(w);
        let f2 = series::sin_over(w);
        let f3 = series::w_minus_sin_over_sq(w);
        let s_over_n = sigma / fr.grad_norm;
        let eta = Point::new(
            s_over_n * (fr.yg * f1 + fr.xg * f2),
            s_over_n * (-fr.xg * f1 + fr.yg * f2),
            2.0 * sigma * sigma * f3,
        );
        Ok(group_mul(p, eta))
    }

    /// Chart map used by the brute-force oracle.
    pub fn chart_point(&self, a: f64, b: f64) -> Point {
        match (&self.chart, &*self.form) {
            (Chart::GraphXy, Form::Graph(j)) => Point::new(a, b, j.value(a, b)),
            (Chart::Cylinder { r }, _) => Point::new(r * a.cos(), r * a.sin(), b),
            (Chart::SphereProfile, _) => sphere_profile_point(a, b),
            _ => unreachable!("graph chart on implicit surface"),
        }
    }

    /// Which side of Ω the point is on: negative inside, positive outside.
    /// This is an orientation indicator, not a distance.
    pub fn side(&self, p: Point) -> f64 {
        match &self.chart {
            Chart::GraphXy => self.g(p),
            Chart::Cylinder { r } => p.z_norm() - r,
            Chart::SphereProfile => geodesic::cc_distance_value(ORIGIN, p) - 1.0,
        }
    }

    /// Max relative mismatch between supplied analytic partials and central
    /// differences of the value, over the given probe points (self-test).
    pub fn check_partials(&self, points: &[Point]) -> f64 {
        let h = 1e-5;
        let mut worst: f64 = 0.0;
        for &p in points {
            let (gx, gy, gt) = self.g_gradient(p);
            let fd = |dx: f64, dy: f64, dt: f64| {
                (self.g(Point::new(p.x + dx * h, p.y + dy * h, p.t + dt * h))
                    - self.g(Point::new(p.x - dx * h, p.y - dy * h, p.t - dt * h)))
                    / (2.0 * h)
            };
            let scale = 1.0 + gx.abs() + gy.abs() + gt.abs();
            worst = worst
                .max((fd(1.0, 0.0, 0.0) - gx).abs() / scale)
                .max((fd(0.0, 1.0, 0.0) - gy).abs() / scale)
                .max((fd(0.0, 0.0, 1.0) - gt).abs() / scale);
        }
        worst
    }
}

/// Profile point of the unit CC sphere at (u, φ); u ∈ [−2π, 2π] with u < 0
/// the lower half, u = 0 the equator.
pub fn sphere_profile_point(u: f64, phi: f64) -> Point {
    let zr = series::sin_over(0.5 * u);
    let t = 2.0 * series::w_minus_sin_over_sq(u);
    Point::new(zr * phi.cos(), zr * phi.sin(), t)
}

// ---------------------------------------------------------------------------
// Surface exponential map
// ---------------------------------------------------------------------------

/// F(u, v, σ): the metric normal at σ from the graph point (u, v, f(u, v)).
pub fn exp_map(s: &Surface, u: f64, v: f64, sigma: f64) -> Result<Point> {
    if !s.is_graph() {
        return Err(Error::InvalidArgument(
            "the exponential map chart requires a graph surface".to_string(),
        ));
    }
    let p = s.chart_point_graph(u, v)?;
    s.metric_normal(p, sigma)
}

impl Surface {
    fn chart_point_graph(&self, u: f64, v: f64) -> Result<Point> {
        match &*self.form {
            Form::Graph(j) => Ok(Point::new(u, v, j.value(u, v))),
            Form::Implicit(_) => Err(Error::InvalidArgument(
                "the exponential map chart requires a graph surface".to_string(),
            )),
        }
    }
}

/// Jacobian of F at σ = 0:
///
/// ```text
/// [ 1    0    Xf/|∇f|                 ]
/// [ 0    1    Yf/|∇f|                 ]
/// [ f_u  f_v  (2v·Xf − 2u·Yf)/|∇f|    ]
/// ```
///
/// Its determinant is |∇_H f|.
pub fn exp_map_jacobian0(s: &Surface, u: f64, v: f64) -> Result<Mat3> {
    let p = s.chart_point_graph(u, v)?;
    let fr = s.frame(p)?;
    let (gx, gy, _) = s.g_gradient(p);
    let (fu, fv) = (-gx, -gy);
    let n = fr.grad_norm;
    Ok(Mat3([
        [1.0, 0.0, fr.xg / n],
        [0.0, 1.0, fr.yg / n],
        [fu, fv, (2.0 * v * fr.xg - 2.0 * u * fr.yg) / n],
    ]))
}

// ---------------------------------------------------------------------------
// Catalog jets
// ---------------------------------------------------------------------------

/// Polynomial graph t = Σ c·xⁱyʲ.
struct PolyGraph {
    coeffs: Vec<(u32, u32, f64)>,
}

impl PolyGraph {
    fn new(coeffs: &[(u32, u32, f64)]) -> Self {
        PolyGraph { coeffs: coeffs.to_vec() }
    }

    fn plane(c: f64) -> Self {
        PolyGraph::new(&[(0, 0, c)])
    }

    fn paraboloid(a: f64) -> Self {
        PolyGraph::new(&[(2, 0, a), (0, 2, a)])
    }
}

fn powi(x: f64, n: u32) -> f64 {
    x.powi(n as i32)
}

impl GraphJet for PolyGraph {
    fn value(&self, x: f64, y: f64) -> f64 {
        self.coeffs.iter().map(|&(i, j, c)| c * powi(x, i) * powi(y, j)).sum()
    }

    fn gradient(&self, x: f64, y: f64) -> (f64, f64) {
        let mut fx = 0.0;
        let mut fy = 0.0;
        for &(i, j, c) in &self.coeffs {
            if i > 0 {
                fx += c * i as f64 * powi(x, i - 1) * powi(y, j);
            }
            if j > 0 {
                fy += c * j as f64 * powi(x, i) * powi(y, j - 1);
            }
        }
        (fx, fy)
    }

    fn second(&self, x: f64, y: f64) -> (f64, f64, f64) {
        let mut fxx = 0.0;
        let mut fxy = 0.0;
        let mut fyy = 0.0;
        for &(i, j, c) in &self.coeffs {
            if i > 1 {
                fxx += c * (i * (i - 1)) as f64 * powi(x, i - 2) * powi(y, j);
            }
            if i > 0 && j > 0 {
                fxy += c * (i * j) as f64 * powi(x, i - 1) * powi(y, j - 1);
            }
            if j > 1 {
                fyy += c * (j * (j - 1)) as f64 * powi(x, i) * powi(y, j - 2);
            }
        }
        (fxx, fxy, fyy)
    }
}

/// Value-only graph with central-difference partials (flagged fallback).
struct FdGraph {
    f: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>,
}

impl GraphJet for FdGraph {
    fn value(&self, x: f64, y: f64) -> f64 {
        (self.f)(x, y)
    }

    fn gradient(&self, x: f64, y: f64) -> (f64, f64) {
        let h = f64::EPSILON.cbrt() * (1.0 + x.abs() + y.abs());
        (
            ((self.f)(x + h, y) - (self.f)(x - h, y)) / (2.0 * h),
            ((self.f)(x, y + h) - (self.f)(x, y - h)) / (2.0 * h),
        )
    }

    fn second(&self, x: f64, y: f64) -> (f64, f64, f64) {
        let h = f64::EPSILON.cbrt() * 10.0 * (1.0 + x.abs() + y.abs());
        let f = |a: f64, b: f64| (self.f)(a, b);
        let fxx = (f(x + h, y) - 2.0 * f(x, y) + f(x - h, y)) / (h * h);
        let fyy = (f(x, y + h) - 2.0 * f(x, y) + f(x, y - h)) / (h * h);
        let fxy =
            (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) / (4.0 * h * h);
        (fxx, fxy, fyy)
    }
}

/// Implicit cylinder g = x² + y² − r².
struct CylinderJet {
    r: f64,
}

impl ImplicitJet for CylinderJet {
    fn value(&self, p: Point) -> f64 {
        p.x * p.x + p.y * p.y - self.r * self.r
    }

    fn gradient(&self, p: Point) -> (f64, f64, f64) {
        (2.0 * p.x, 2.0 * p.y, 0.0)
    }

    fn second(&self, _p: Point) -> SecondPartials {
        SecondPartials { gxx: 2.0, gyy: 2.0, ..Default::default() }
    }
}

/// Upper half of the unit CC sphere as a radial graph t = F(ρ), ρ = |z|.
///
/// With v = u/2 solving sin(v)/v = ρ on (0, π):
///   F = (2v − sin 2v)/(2v²),  F' = −2cos(v)/v,
///   F'' = 2(v sin v + cos v)/(v cos v − sin v).
struct CcSphereJet;

/// Solve sin(v)/v = ρ for v ∈ (0, π); ρ is clamped into (0, 1).
fn sphere_v_of_rho(rho: f64) -> f64 {
    let rho = rho.clamp(1e-12, 1.0 - 1e-15);
    let (mut lo, mut hi) = (1e-12, PI - 1e-12);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if series::sin_over(mid) > rho {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // Newton polish; d(sin v / v)/dv = (v cos v − sin v)/v².
    let mut v = 0.5 * (lo + hi);
    for _ in 0..30 {
        let f = series::sin_over(v) - rho;
        let d = (v * v.cos() - v.sin()) / (v * v);
        if d == 0.0 {
            break;
        }
        let next = v - f / d;
        if !(next > lo && next < hi) {
            break;
        }
        if (next - v).abs() <= 1e-16 * v {
            v = next;
            break;
        }
        v = next;
    }
    v
}

impl GraphJet for CcSphereJet {
    fn value(&self, x: f64, y: f64) -> f64 {
        let v = sphere_v_of_rho(x.hypot(y));
        (2.0 * v - (2.0 * v).sin()) / (2.0 * v * v)
    }

    fn gradient(&self, x: f64, y: f64) -> (f64, f64) {
        let rho = x.hypot(y);
        let v = sphere_v_of_rho(rho);
        let fp = -2.0 * v.cos() / v;
        (fp * x / rho, fp * y / rho)
    }

    fn second(&self, x: f64, y: f64) -> (f64, f64, f64) {
        let rho = x.hypot(y);
        let v = sphere_v_of_rho(rho);
        let fp = -2.0 * v.cos() / v;
        let fpp = 2.0 * (v * v.sin() + v.cos()) / (v * v.cos() - v.sin());
        let (r2, r3) = (rho * rho, rho * rho * rho);
        (
            fpp * x * x / r2 + fp * y * y / r3,
            fpp * x * y / r2 - fp * x * y / r3,
            fpp * y * y / r2 + fp * x * x / r3,
        )
    }
}

// ---------------------------------------------------------------------------
// JSON catalog configuration
// ---------------------------------------------------------------------------

/// Serializable selector for the built-in surface catalog.
///
/// ```json
/// {"type": "plane", "c": 0.0}
/// {"type": "paraboloid", "a": 1.0}
/// {"type": "cylinder", "r": 1.0}
/// {"type": "graph-poly", "coeffs": [[2, 0, 1.0], [0, 2, 1.0]]}
/// {"type": "cc-sphere"}
/// ```
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SurfaceConfig {
    Plane {
        #[serde(default)]
        c: f64,
    },
    Paraboloid {
        #[serde(default = "default_one")]
        a: f64,
    },
    Cylinder {
        #[serde(default = "default_one")]
        r: f64,
    },
    GraphPoly { coeffs: Vec<(u32, u32, f64)> },
    CcSphere,
}

fn default_one() -> f64 {
    1.0
}

impl SurfaceConfig {
    pub fn build(&self) -> Result<Surface> {
        match self {
            SurfaceConfig::Plane { c } => Ok(Surface::plane(*c)),
            SurfaceConfig::Paraboloid { a } => Ok(Surface::paraboloid(*a)),
            SurfaceConfig::Cylinder { r } => Surface::cylinder(*r),
            SurfaceConfig::GraphPoly { coeffs } => Ok(Surface::graph_poly(coeffs)),
            SurfaceConfig::CcSphere => Ok(Surface::cc_sphere()),
        }
    }
}

impl Surface {
    /// Build a catalog surface from a JSON document, or from a bare catalog
    /// name ("plane", "cylinder", "paraboloid", "cc-sphere") with default
    /// parameters.
    pub fn from_json(spec: &str) -> Result<Surface> {
        let trimmed = spec.trim();
        let doc = if trimmed.starts_with('{') {
            trimmed.to_string()
        } else {
            format!("{{\"type\":\"{trimmed}\"}}")
        };
        let cfg: SurfaceConfig = serde_json::from_str(&doc)
            .map_err(|e| Error::InvalidArgument(format!("bad surface spec: {e}")))?;
        cfg.build()
    }
}

//! The first Heisenberg group H¹ as an algebraic object.
//!
//! H¹ is ℝ³ with coordinates (x, y, t) and the non-commutative product
//!
//! ```text
//! (x,y,t)·(x',y',t') = (x+x', y+y', t+t' + 2(x'y − xy'))
//! ```
//!
//! The left-invariant fields X = ∂_x + 2y∂_t and Y = ∂_y − 2x∂_t span the
//! horizontal bundle and satisfy [X,Y] = −4∂_t. Dilations δ_λ(z,t) = (λz, λ²t)
//! and rotations about the t-axis are the automorphisms used throughout.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of H¹ = ℝ³.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
    pub t: f64,
}

/// The group identity.
pub const ORIGIN: Point = Point { x: 0.0, y: 0.0, t: 0.0 };

impl Point {
    pub fn new(x: f64, y: f64, t: f64) -> Self {
        Point { x, y, t }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.t.is_finite()
    }

    /// Euclidean norm of the horizontal coordinates, |z| for z = x + iy.
    pub fn z_norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    /// A homogeneous-ish local scale used for relative tolerances.
    pub fn scale(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.t.abs()).sqrt()
    }
}

/// The Heisenberg product p·q.
pub fn group_mul(p: Point, q: Point) -> Point {
    Point {
        x: p.x + q.x,
        y: p.y + q.y,
        t: p.t + q.t + 2.0 * (q.x * p.y - p.x * q.y),
    }
}

/// The group inverse, p⁻¹ = (−x, −y, −t).
pub fn inverse(p: Point) -> Point {
    Point { x: -p.x, y: -p.y, t: -p.t }
}

/// The dilation δ_λ(z,t) = (λz, λ²t). Fails for λ = 0.
pub fn dilate(lambda: f64, p: Point) -> Result<Point> {
    if lambda == 0.0 || !lambda.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "dilation factor must be nonzero and finite, got {lambda}"
        )));
    }
    Ok(Point {
        x: lambda * p.x,
        y: lambda * p.y,
        t: lambda * lambda * p.t,
    })
}

/// Rotation by θ about the t-axis, an isometry of the CC distance.
pub fn rotate(theta: f64, p: Point) -> Point {
    let (s, c) = theta.sin_cos();
    Point {
        x: c * p.x - s * p.y,
        y: s * p.x + c * p.y,
        t: p.t,
    }
}

/// A horizontal tangent vector a·X_P + b·Y_P at a base point.
///
/// The base point is carried so frame-dependent operations cannot mix
/// fibers; combining vectors at different bases is a programming error and
/// asserts rather than silently casting.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HVec {
    pub base: Point,
    pub a: f64,
    pub b: f64,
}

impl HVec {
    pub fn new(base: Point, a: f64, b: f64) -> Self {
        HVec { base, a, b }
    }

    /// Ambient ℝ³ representative a·(1,0,2y) + b·(0,1,−2x) at the base.
    pub fn ambient(&self) -> [f64; 3] {
        [
            self.a,
            self.b,
            2.0 * self.base.y * self.a - 2.0 * self.base.x * self.b,
        ]
    }

    /// Rebuild a horizontal vector from an ambient representative.
    ///
    /// Fails when the ambient vector is not tangent to the horizontal plane
    /// at `base` (relative residual above `tol`).
    pub fn from_ambient(base: Point, v: [f64; 3], tol: f64) -> Result<HVec> {
        let expected_t = 2.0 * base.y * v[0] - 2.0 * base.x * v[1];
        let scale = v[0].abs() + v[1].abs() + v[2].abs() + 1.0;
        let residual = (v[2] - expected_t).abs();
        if residual > tol * scale {
            return Err(Error::InvalidArgument(format!(
                "ambient vector is not horizontal at its base (residual {residual:.3e})"
            )));
        }
        Ok(HVec { base, a: v[0], b: v[1] })
    }

    pub fn norm(&self) -> f64 {
        self.a.hypot(self.b)
    }

    /// Horizontal inner product. Both vectors must live in the same fiber.
    pub fn dot(&self, other: &HVec) -> f64 {
        assert_eq!(
            self.base, other.base,
            "inner product of horizontal vectors at different base points"
        );
        self.a * other.a + self.b * other.b
    }
}

/// The horizontal frame (X_p, Y_p) at a point.
pub fn frame_at(p: Point) -> (HVec, HVec) {
    (HVec::new(p, 1.0, 0.0), HVec::new(p, 0.0, 1.0))
}

/// A 2×2 real matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mat2(pub [f64; 4]);

impl Mat2 {
    pub fn new(m11: f64, m12: f64, m21: f64, m22: f64) -> Self {
        Mat2([m11, m12, m21, m22])
    }

    pub fn identity() -> Self {
        Mat2([1.0, 0.0, 0.0, 1.0])
    }

    /// The symplectic matrix J = [[0, 1], [−1, 0]].
    pub fn symplectic() -> Self {
        Mat2([0.0, 1.0, -1.0, 0.0])
    }

    pub fn rotation(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Mat2([c, -s, s, c])
    }

    /// The rank-one projector v ⊗ v for v = (a, b).
    pub fn outer(a: f64, b: f64) -> Self {
        Mat2([a * a, a * b, b * a, b * b])
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let a = &self.0;
        let b = &rhs.0;
        Mat2([
            a[0] * b[0] + a[1] * b[2],
            a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3],
        ])
    }

    pub fn mul_vec(&self, v: [f64; 2]) -> [f64; 2] {
        let a = &self.0;
        [a[0] * v[0] + a[1] * v[1], a[2] * v[0] + a[3] * v[1]]
    }

    pub fn add(&self, rhs: &Mat2) -> Mat2 {
        Mat2([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
            self.0[3] + rhs.0[3],
        ])
    }

    pub fn scale(&self, s: f64) -> Mat2 {
        Mat2([s * self.0[0], s * self.0[1], s * self.0[2], s * self.0[3]])
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2([self.0[0], self.0[2], self.0[1], self.0[3]])
    }

    /// Symmetric part (M + Mᵀ)/2.
    pub fn symmetrize(&self) -> Mat2 {
        let off = 0.5 * (self.0[1] + self.0[2]);
        Mat2([self.0[0], off, off, self.0[3]])
    }

    pub fn trace(&self) -> f64 {
        self.0[0] + self.0[3]
    }

    pub fn det(&self) -> f64 {
        self.0[0] * self.0[3] - self.0[1] * self.0[2]
    }

    pub fn frobenius(&self) -> f64 {
        self.0.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Real eigenvalues of a (symmetric) matrix, in ascending order.
    ///
    /// A slightly negative discriminant from roundoff is clamped to zero.
    pub fn eigenvalues_symmetric(&self) -> (f64, f64) {
        let tr = self.trace();
        let det = self.det();
        let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
        (0.5 * (tr - disc), 0.5 * (tr + disc))
    }
}

/// A 3×3 real matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mat3(pub [[f64; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Self {
        Mat3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    }

    pub fn mul_vec(&self, v: [f64; 3]) -> [f64; 3] {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        ]
    }

    pub fn det(&self) -> f64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }
}

/// The differential of left translation by q = (a, b, c).
///
/// It is the constant matrix [[1,0,0],[0,1,0],[2b,−2a,1]] and maps the
/// horizontal fiber at P isometrically onto the fiber at q·P.
pub fn d_left_translation(q: Point) -> Mat3 {
    Mat3([
        [1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [2.0 * q.y, -2.0 * q.x, 1.0],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    const TOL: f64 = 1e-12;

    #[test]
    fn product_identity_and_substitution() {
        let p = Point::new(0.7, -0.2, 3.1);
        assert_eq!(group_mul(ORIGIN, p), p);
        assert_eq!(group_mul(p, ORIGIN), p);
        // (1,0,0)·(0,1,0) = (1,1,−2)
        let r = group_mul(Point::new(1.0, 0.0, 0.0), Point::new(0.0, 1.0, 0.0));
        assert_eq!(r, Point::new(1.0, 1.0, -2.0));
    }

    #[test]
    fn inverse_axioms() {
        assert_eq!(inverse(ORIGIN), ORIGIN);
        assert_eq!(inverse(Point::new(1.0, 2.0, 3.0)), Point::new(-1.0, -2.0, -3.0));
        let p = Point::new(0.3, -1.2, 5.0);
        let prod = group_mul(p, inverse(p));
        assert_abs_diff_eq!(prod.x, 0.0, epsilon = TOL);
        assert_abs_diff_eq!(prod.y, 0.0, epsilon = TOL);
        assert_abs_diff_eq!(prod.t, 0.0, epsilon = TOL);
        assert_eq!(inverse(inverse(p)), p);
    }

    #[test]
    fn dilation() {
        let p = Point::new(0.4, -0.9, 2.2);
        assert_eq!(dilate(1.0, p).unwrap(), p);
        assert_eq!(dilate(2.0, Point::new(1.0, 1.0, 1.0)).unwrap(), Point::new(2.0, 2.0, 4.0));
        assert!(dilate(0.0, p).is_err());
        // δ_λ ∘ δ_μ = δ_{λμ}
        let q = Point::new(0.5, -0.3, 2.0);
        let lhs = dilate(3.0, dilate(-2.0, q).unwrap()).unwrap();
        let rhs = dilate(-6.0, q).unwrap();
        assert_abs_diff_eq!(lhs.x, rhs.x, epsilon = TOL);
        assert_abs_diff_eq!(lhs.y, rhs.y, epsilon = TOL);
        assert_abs_diff_eq!(lhs.t, rhs.t, epsilon = TOL);
    }

    #[test]
    fn rotation() {
        let p = Point::new(1.0, 0.0, 5.0);
        assert_eq!(rotate(0.0, p), p);
        let q = rotate(PI / 2.0, p);
        assert_abs_diff_eq!(q.x, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(q.y, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(q.t, 5.0, epsilon = 1e-15);
        let full = rotate(2.0 * PI, p);
        assert_abs_diff_eq!(full.x, p.x, epsilon = 1e-15);
        assert_abs_diff_eq!(full.y, p.y, epsilon = 1e-15);
    }

    #[test]
    fn frame_ambient_forms() {
        let (x0, y0) = frame_at(ORIGIN);
        assert_eq!(x0.ambient(), [1.0, 0.0, 0.0]);
        assert_eq!(y0.ambient(), [0.0, 1.0, 0.0]);
        let (x1, _) = frame_at(Point::new(0.0, 1.0, 0.0));
        assert_eq!(x1.ambient(), [1.0, 0.0, 2.0]);
        let (_, y2) = frame_at(Point::new(1.0, 0.0, 0.0));
        assert_eq!(y2.ambient(), [0.0, 1.0, -2.0]);
    }

    #[test]
    fn left_translation_matrix() {
        assert_eq!(d_left_translation(ORIGIN).0, Mat3::identity().0);
        let m = d_left_translation(Point::new(1.0, 2.0, 0.0));
        assert_eq!(m.0[2], [4.0, -2.0, 1.0]);
    }

    #[test]
    fn left_translation_preserves_horizontal_norm() {
        // dL(q)·X_P decomposes in the frame at q·P with unit norm.
        let q = Point::new(1.0, 2.0, 3.0);
        let p = Point::new(0.5, 0.0, -1.0);
        let (xp, _) = frame_at(p);
        let pushed = d_left_translation(q).mul_vec(xp.ambient());
        let at = group_mul(q, p);
        let hv = HVec::from_ambient(at, pushed, 1e-12).unwrap();
        assert_abs_diff_eq!(hv.norm(), 1.0, epsilon = TOL);
    }

    #[test]
    fn frame_left_invariance() {
        // dL(q) applied to the ambient form of X_P equals the ambient form
        // of X at q·P (and likewise for Y).
        let q = Point::new(-0.8, 1.7, 0.4);
        let p = Point::new(2.0, -0.5, 1.0);
        let at = group_mul(q, p);
        let (xp, yp) = frame_at(p);
        let (xq, yq) = frame_at(at);
        let m = d_left_translation(q);
        let px = m.mul_vec(xp.ambient());
        let py = m.mul_vec(yp.ambient());
        for i in 0..3 {
            assert_abs_diff_eq!(px[i], xq.ambient()[i], epsilon = TOL);
            assert_abs_diff_eq!(py[i], yq.ambient()[i], epsilon = TOL);
        }
    }

    #[test]
    fn rotation_acts_on_frame_as_rotation_matrix() {
        // Horizontal components of the pushforward of X_P under R_θ at R_θP
        // are (cos θ, sin θ).
        let theta = 0.83;
        let p = Point::new(1.3, -0.4, 2.0);
        let rp = rotate(theta, p);
        // Pushforward of the ambient form of X_P under the linear map R_θ⊕1.
        let (xp, _) = frame_at(p);
        let amb = xp.ambient();
        let (s, c) = theta.sin_cos();
        let pushed = [c * amb[0] - s * amb[1], s * amb[0] + c * amb[1], amb[2]];
        let hv = HVec::from_ambient(rp, pushed, 1e-12).unwrap();
        assert_abs_diff_eq!(hv.a, c, epsilon = TOL);
        assert_abs_diff_eq!(hv.b, s, epsilon = TOL);
    }

    #[test]
    fn commutator_is_minus_four_dt() {
        // Finite-difference commutator of the X and Y flows on a smooth test
        // function matches −4 ∂_t to O(h²).
        let f = |p: Point| (p.x * p.t).sin() + p.y * p.y * p.t + p.x * p.y;
        let p = Point::new(0.4, -0.7, 0.9);
        let flow_x = |q: Point, h: f64| Point::new(q.x + h, q.y, q.t + 2.0 * q.y * h);
        let flow_y = |q: Point, h: f64| Point::new(q.x, q.y + h, q.t - 2.0 * q.x * h);
        let xf = |q: Point, h: f64| (f(flow_x(q, h)) - f(flow_x(q, -h))) / (2.0 * h);
        let yf = |q: Point, h: f64| (f(flow_y(q, h)) - f(flow_y(q, -h))) / (2.0 * h);
        let h = 1e-5;
        let xyf = (yf(flow_x(p, h), h) - yf(flow_x(p, -h), h)) / (2.0 * h);
        let yxf = (xf(flow_y(p, h), h) - xf(flow_y(p, -h), h)) / (2.0 * h);
        let dtf = (f(Point::new(p.x, p.y, p.t + h)) - f(Point::new(p.x, p.y, p.t - h))) / (2.0 * h);
        assert_abs_diff_eq!(xyf - yxf, -4.0 * dtf, epsilon = 1e-6);
    }

    #[test]
    #[should_panic(expected = "different base points")]
    fn hvec_fiber_mixing_panics() {
        let u = HVec::new(ORIGIN, 1.0, 0.0);
        let v = HVec::new(Point::new(1.0, 0.0, 0.0), 1.0, 0.0);
        let _ = u.dot(&v);
    }
}

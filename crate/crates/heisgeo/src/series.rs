//! Cancellation-safe evaluations of the trigonometric ratios that appear in
//! the geodesic equations. Each switches to a Taylor expansion for small
//! arguments, where the closed form loses digits to cancellation.

/// Threshold below which the series branches are used.
pub const SERIES_CUTOFF: f64 = 1e-4;

/// (1 − cos w) / w, with removable value 0 at w = 0.
pub fn one_minus_cos_over(w: f64) -> f64 {
    if w.abs() < SERIES_CUTOFF {
        let w2 = w * w;
        w * (0.5 - w2 / 24.0 + w2 * w2 / 720.0)
    } else {
        (1.0 - w.cos()) / w
    }
}

/// sin(w) / w, with removable value 1 at w = 0.
pub fn sin_over(w: f64) -> f64 {
    if w.abs() < SERIES_CUTOFF {
        let w2 = w * w;
        1.0 - w2 / 6.0 + w2 * w2 / 120.0
    } else {
        w.sin() / w
    }
}

/// (w − sin w) / w², with removable value 0 at w = 0.
pub fn w_minus_sin_over_sq(w: f64) -> f64 {
    if w.abs() < SERIES_CUTOFF {
        let w2 = w * w;
        w * (1.0 / 6.0 - w2 / 120.0 + w2 * w2 / 5040.0)
    } else {
        (w - w.sin()) / (w * w)
    }
}

/// θ / sin θ, with removable value 1 at θ = 0.
pub fn over_sin(theta: f64) -> f64 {
    if theta.abs() < SERIES_CUTOFF {
        let t2 = theta * theta;
        1.0 + t2 / 6.0 + 7.0 * t2 * t2 / 360.0
    } else {
        theta / theta.sin()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn series_agree_with_closed_forms_at_cutoff() {
        // The closed forms themselves carry ~eps/w cancellation noise at
        // these arguments; the series is the more accurate side.
        for &w in &[0.9e-4, 1.1e-4, -0.9e-4, -1.1e-4, 2e-4, 5e-5] {
            assert_abs_diff_eq!(one_minus_cos_over(w), (1.0 - w.cos()) / w, epsilon = 1e-12);
            assert_abs_diff_eq!(sin_over(w), w.sin() / w, epsilon = 1e-13);
            assert_abs_diff_eq!(w_minus_sin_over_sq(w), (w - w.sin()) / (w * w), epsilon = 1e-12);
            assert_abs_diff_eq!(over_sin(w), w / w.sin(), epsilon = 1e-13);
        }
    }

    #[test]
    fn removable_values() {
        assert_eq!(one_minus_cos_over(0.0), 0.0);
        assert_eq!(sin_over(0.0), 1.0);
        assert_eq!(w_minus_sin_over_sq(0.0), 0.0);
        assert_eq!(over_sin(0.0), 1.0);
    }
}

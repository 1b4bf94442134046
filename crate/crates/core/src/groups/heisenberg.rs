//! The one-dimensional Heisenberg group.
//!
//! Points are `(s, z)` with `s` real and `z = x + iy` complex; the law is
//! `(s, z) * (s', z') = (s + s' + ½ Im(z̄ z'), z + z')`. The symplectic form
//! `½ Im(z̄ z')` in the centre is what makes the group noncommutative.

use num_complex::Complex64;

/// A point `(s, x, y)` of the Heisenberg group, `z = x + iy`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeisPoint {
    /// Central coordinate.
    pub s: f64,
    pub x: f64,
    pub y: f64,
}

impl HeisPoint {
    pub fn new(s: f64, x: f64, y: f64) -> Self {
        debug_assert!(s.is_finite() && x.is_finite() && y.is_finite());
        HeisPoint { s, x, y }
    }

    pub fn identity() -> Self {
        HeisPoint::new(0.0, 0.0, 0.0)
    }

    pub fn z(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }
}

/// Group product `(s+s'+½Im(z̄z'), z+z')`.
pub fn heis_mul(g: HeisPoint, h: HeisPoint) -> HeisPoint {
    // Im(z̄ z') = x y' − y x'
    let twist = 0.5 * (g.x * h.y - g.y * h.x);
    HeisPoint::new(g.s + h.s + twist, g.x + h.x, g.y + h.y)
}

/// Group inverse; `(−s, −z)` since `Im(z̄ z)` vanishes.
pub fn heis_inv(g: HeisPoint) -> HeisPoint {
    HeisPoint::new(-g.s, -g.x, -g.y)
}

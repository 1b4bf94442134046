//! Linear symplectomorphisms and the automorphisms they induce on the
//! Heisenberg group.

use crate::error::{Error, Result};
use crate::groups::HeisPoint;

/// An element `[[a, b], [c, d]]` of `SL(2,R) ≅ Sp(2,R)`, `ad − bc = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SympElt {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl SympElt {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if (a * d - b * c - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "ad − bc = {} is not 1",
                a * d - b * c
            )));
        }
        Ok(SympElt { a, b, c, d })
    }

    pub fn identity() -> Self {
        SympElt {
            a: 1.0,
            b: 0.0,
            c: 0.0,
            d: 1.0,
        }
    }

    /// Rotation family: `(p, q) ↦ (p cosθ + q sinθ, −p sinθ + q cosθ)`.
    pub fn rotation(theta: f64) -> Self {
        SympElt {
            a: theta.cos(),
            b: theta.sin(),
            c: -theta.sin(),
            d: theta.cos(),
        }
    }

    /// Scaling family `(p, q) ↦ (tp, q/t)`, `t > 0`.
    pub fn scaling(t: f64) -> Result<Self> {
        if t <= 0.0 {
            return Err(Error::Domain(format!(
                "scaling parameter {t} must be positive"
            )));
        }
        Ok(SympElt {
            a: t,
            b: 0.0,
            c: 0.0,
            d: 1.0 / t,
        })
    }

    /// Shear family `(p, q) ↦ (p + cq, q)`.
    pub fn shear(c: f64) -> Self {
        SympElt {
            a: 1.0,
            b: c,
            c: 0.0,
            d: 1.0,
        }
    }

    pub fn inverse(&self) -> SympElt {
        SympElt {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    pub fn mul(&self, rhs: &SympElt) -> SympElt {
        SympElt {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }
}

/// `τ(g): (p, q) ↦ (ap + bq, cp + dq)`.
pub fn symplecto_act(g: &SympElt, pq: (f64, f64)) -> (f64, f64) {
    (g.a * pq.0 + g.b * pq.1, g.c * pq.0 + g.d * pq.1)
}

/// The automorphism `α(g): (s, x, y) ↦ (s, ax + by, cx + dy)` of the
/// Heisenberg group; the central coordinate is untouched because `g`
/// preserves the symplectic form in the group law.
pub fn heis_auto(g: &SympElt, h: HeisPoint) -> HeisPoint {
    HeisPoint::new(h.s, g.a * h.x + g.b * h.y, g.c * h.x + g.d * h.y)
}

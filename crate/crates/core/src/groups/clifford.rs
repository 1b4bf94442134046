//! The Clifford algebra `Cl(1,1)` and the hyperbolic Möbius action.
//!
//! `Cl(1,1)` is the four-dimensional real algebra on `{1, e₁, e₂, e₁e₂}`
//! with `e₁² = −1`, `e₂² = +1` and `e₁e₂ = −e₂e₁`. Vectors `u₁e₁ + u₂e₂`
//! model two-dimensional space-time; even elements `c + d·e₁e₂` play the
//! role complex numbers play for the elliptic disk. `SL(2,R)` acts on the
//! hyperbolic "unit disk" through 2×2 matrices `[[a, b], [−b, a]]` with
//! even `a`, vector `b` and `āa − b̄b = 1`.

use crate::error::{Error, Result};

use super::SINGULARITY_EPS;

/// Element `c0 + c1·e₁ + c2·e₂ + c12·e₁e₂` of `Cl(1,1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cliff11 {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    pub c12: f64,
}

impl Cliff11 {
    pub const ZERO: Cliff11 = Cliff11 {
        c0: 0.0,
        c1: 0.0,
        c2: 0.0,
        c12: 0.0,
    };
    pub const ONE: Cliff11 = Cliff11 {
        c0: 1.0,
        c1: 0.0,
        c2: 0.0,
        c12: 0.0,
    };
    pub const E1: Cliff11 = Cliff11 {
        c0: 0.0,
        c1: 1.0,
        c2: 0.0,
        c12: 0.0,
    };
    pub const E2: Cliff11 = Cliff11 {
        c0: 0.0,
        c1: 0.0,
        c2: 1.0,
        c12: 0.0,
    };
    pub const E12: Cliff11 = Cliff11 {
        c0: 0.0,
        c1: 0.0,
        c2: 0.0,
        c12: 1.0,
    };

    pub fn new(c0: f64, c1: f64, c2: f64, c12: f64) -> Self {
        Cliff11 { c0, c1, c2, c12 }
    }

    pub fn scalar(c: f64) -> Self {
        Cliff11::new(c, 0.0, 0.0, 0.0)
    }

    pub fn vector(u1: f64, u2: f64) -> Self {
        Cliff11::new(0.0, u1, u2, 0.0)
    }

    /// Hyperbolic rotor `e^{e₁e₂·τ} = cosh τ + e₁e₂ sinh τ`.
    pub fn hyperbolic_rotor(tau: f64) -> Self {
        Cliff11::new(tau.cosh(), 0.0, 0.0, tau.sinh())
    }

    pub fn add(&self, rhs: &Cliff11) -> Cliff11 {
        Cliff11::new(
            self.c0 + rhs.c0,
            self.c1 + rhs.c1,
            self.c2 + rhs.c2,
            self.c12 + rhs.c12,
        )
    }

    pub fn neg(&self) -> Cliff11 {
        Cliff11::new(-self.c0, -self.c1, -self.c2, -self.c12)
    }

    pub fn scale(&self, t: f64) -> Cliff11 {
        Cliff11::new(t * self.c0, t * self.c1, t * self.c2, t * self.c12)
    }

    /// Clifford conjugation: `1 ↦ 1`, `e₁ ↦ −e₁`, `e₂ ↦ −e₂`, `e₁e₂ ↦ −e₁e₂`.
    pub fn conj(&self) -> Cliff11 {
        Cliff11::new(self.c0, -self.c1, -self.c2, -self.c12)
    }

    /// `x·x̄`, always a scalar: `c0² + c1² − c2² − c12²`.
    pub fn norm_scalar(&self) -> f64 {
        self.c0 * self.c0 + self.c1 * self.c1 - self.c2 * self.c2 - self.c12 * self.c12
    }

    /// Euclidean magnitude of the coefficient vector.
    pub fn magnitude(&self) -> f64 {
        (self.c0 * self.c0 + self.c1 * self.c1 + self.c2 * self.c2 + self.c12 * self.c12).sqrt()
    }

    /// Inverse `x̄ / (x·x̄)`; fails on the light cone where `x·x̄ = 0`.
    pub fn inverse(&self) -> Result<Cliff11> {
        let n = self.norm_scalar();
        let scale = self.magnitude().powi(2).max(1.0);
        if n.abs() < SINGULARITY_EPS * scale {
            return Err(Error::Singularity(format!(
                "Clifford norm {n} vanishes; element on the light cone"
            )));
        }
        Ok(self.conj().scale(1.0 / n))
    }
}

/// Geometric product with `e₁² = −1`, `e₂² = +1`, `e₁e₂ = −e₂e₁`.
pub fn cliff11_mul(x: &Cliff11, y: &Cliff11) -> Cliff11 {
    Cliff11 {
        c0: x.c0 * y.c0 - x.c1 * y.c1 + x.c2 * y.c2 + x.c12 * y.c12,
        c1: x.c0 * y.c1 + x.c1 * y.c0 - x.c2 * y.c12 + x.c12 * y.c2,
        c2: x.c0 * y.c2 + x.c2 * y.c0 - x.c1 * y.c12 + x.c12 * y.c1,
        c12: x.c0 * y.c12 + x.c12 * y.c0 + x.c1 * y.c2 - x.c2 * y.c1,
    }
}

/// A vector `u = u₁e₁ + u₂e₂` in `R^{1,1}` with `1 + u²` invertible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypPoint {
    pub u1: f64,
    pub u2: f64,
}

impl HypPoint {
    /// Fails when `1 + u² = 1 − u₁² + u₂²` is not safely invertible.
    pub fn new(u1: f64, u2: f64) -> Result<Self> {
        let denom = 1.0 - u1 * u1 + u2 * u2;
        if denom.abs() < 1e-12 {
            return Err(Error::Domain(format!("1 + u² = {denom} is not invertible")));
        }
        Ok(HypPoint { u1, u2 })
    }

    pub fn as_cliff(&self) -> Cliff11 {
        Cliff11::vector(self.u1, self.u2)
    }

    /// Inside the hyperbolic unit disk: `|u₂² − u₁²| < 1`.
    pub fn in_unit_disk(&self) -> bool {
        (self.u2 * self.u2 - self.u1 * self.u1).abs() < 1.0
    }
}

/// A 2×2 matrix `[[a, b], [−b, a]]` over `Cl(1,1)` with even `a`, vector `b`
/// and `āa − b̄b = 1`.
#[derive(Debug, Clone, Copy)]
pub struct HypElt {
    a: Cliff11,
    b: Cliff11,
}

impl HypElt {
    /// Validates grades and the unit condition within `1e-12`.
    pub fn new(a: Cliff11, b: Cliff11) -> Result<Self> {
        if a.c1 != 0.0 || a.c2 != 0.0 {
            return Err(Error::Domain("entry a must be even (scalar + e₁e₂)".into()));
        }
        if b.c0 != 0.0 || b.c12 != 0.0 {
            return Err(Error::Domain("entry b must be a vector".into()));
        }
        let unit = cliff11_mul(&a.conj(), &a).add(&cliff11_mul(&b.conj(), &b).neg());
        if (unit.c0 - 1.0).abs() > 1e-12 || unit.c1.abs() + unit.c2.abs() + unit.c12.abs() > 1e-12 {
            return Err(Error::Domain(format!("āa − b̄b = {unit:?} is not 1")));
        }
        Ok(HypElt { a, b })
    }

    pub fn identity() -> Self {
        HypElt {
            a: Cliff11::ONE,
            b: Cliff11::ZERO,
        }
    }

    /// Subgroup `A` of hyperbolic rotations, `a = e^{e₁e₂τ}`, `b = 0`.
    pub fn rotor(tau: f64) -> Self {
        HypElt {
            a: Cliff11::hyperbolic_rotor(tau),
            b: Cliff11::ZERO,
        }
    }

    /// Section of the hyperbolic disk, `(1 + u²)^{-1/2}·[[1, u], [−u, 1]]`.
    ///
    /// Requires `1 + u² > 0` so that the real square root exists.
    pub fn section(u: HypPoint) -> Result<Self> {
        let denom = 1.0 - u.u1 * u.u1 + u.u2 * u.u2;
        if denom <= 0.0 {
            return Err(Error::Domain(format!("1 + u² = {denom} is not positive")));
        }
        let k = denom.sqrt().recip();
        Ok(HypElt {
            a: Cliff11::scalar(k),
            b: u.as_cliff().scale(k),
        })
    }

    pub fn a(&self) -> Cliff11 {
        self.a
    }

    pub fn b(&self) -> Cliff11 {
        self.b
    }
}

/// Fraction-linear action `u ↦ (a·u + b)(−b·u + a)⁻¹` on the hyperbolic disk.
///
/// The matrix `m = [[a, b], [−b, a]]` plays the role of the displayed `g⁻¹`,
/// mirroring the elliptic convention of [`super::mobius_disk`]. Fails with a
/// light-cone singularity when the denominator has vanishing Clifford norm.
pub fn mobius_hyp(m: &HypElt, u: HypPoint) -> Result<HypPoint> {
    let uc = u.as_cliff();
    let num = cliff11_mul(&m.a, &uc).add(&m.b);
    let den = cliff11_mul(&m.b.neg(), &uc).add(&m.a);
    let den_inv = den.inverse()?;
    let res = cliff11_mul(&num, &den_inv);
    // even·vector·even is always a vector
    debug_assert!(res.c0.abs() + res.c12.abs() < 1e-9 * res.magnitude().max(1.0));
    HypPoint::new(res.c1, res.c2)
}

//! `SL(2,R)` in its `SU(1,1)` form and the Möbius action on the unit disk.
//!
//! An element is stored as the pair `(α, β)` of its matrix
//! `[[α, β], [β̄, ᾱ]]` with `|α|² − |β|² = 1`. Every such element factors
//! uniquely as `s(a)·h_ψ` where `s(a) = (1−|a|²)^{-1/2}·[[1, a], [ā, 1]]` is
//! the section over the unit disk and `h_ψ = diag(e^{iψ}, e^{-iψ})` lies in
//! the maximal compact subgroup `K`.
//!
//! The point action on the disk follows the fraction-linear convention in
//! which the *displayed* matrix is the one of `g⁻¹`: the element `g` moves
//! `z` to `(αz + β)/(β̄z + ᾱ)` built from the entries of `g⁻¹`. Composing two
//! moves therefore reverses the product: `g·(h·z) = (hg)·z`.

use num_complex::Complex64;

use super::SINGULARITY_EPS;
use crate::error::{Error, Result};

/// An element of `SU(1,1)`, i.e. the matrix `[[α, β], [β̄, ᾱ]]`.
#[derive(Debug, Clone, Copy)]
pub struct SL2Elt {
    alpha: Complex64,
    beta: Complex64,
}

/// A point of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint {
    z: Complex64,
}

impl DiskPoint {
    /// Fails when `|z| ≥ 1`.
    pub fn new(z: Complex64) -> Result<Self> {
        if z.norm() < 1.0 {
            Ok(DiskPoint { z })
        } else {
            Err(Error::Domain(format!("|z| = {} is not < 1", z.norm())))
        }
    }

    pub fn origin() -> Self {
        DiskPoint {
            z: Complex64::new(0.0, 0.0),
        }
    }

    pub fn value(&self) -> Complex64 {
        self.z
    }
}

impl SL2Elt {
    /// Builds the element from `(α, β)`, renormalizing `|α|²−|β|² = 1`.
    ///
    /// Fails when the pair cannot be normalized (`|α| ≤ |β|`) or drifts more
    /// than `1e-6` from the constraint.
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let det = alpha.norm_sqr() - beta.norm_sqr();
        if det <= 0.0 {
            return Err(Error::Domain(format!(
                "|α|²−|β|² = {det} cannot be normalized to 1"
            )));
        }
        let scale = det.sqrt();
        if (scale - 1.0).abs() > 1e-6 {
            return Err(Error::Domain(format!(
                "entries violate |α|²−|β|² = 1 by {}",
                (det - 1.0).abs()
            )));
        }
        Ok(SL2Elt {
            alpha: alpha / scale,
            beta: beta / scale,
        })
    }

    pub fn identity() -> Self {
        SL2Elt {
            alpha: Complex64::new(1.0, 0.0),
            beta: Complex64::new(0.0, 0.0),
        }
    }

    /// The compact-subgroup element `h_ψ = diag(e^{iψ}, e^{-iψ})`.
    pub fn rotation(psi: f64) -> Self {
        SL2Elt {
            alpha: Complex64::from_polar(1.0, psi),
            beta: Complex64::new(0.0, 0.0),
        }
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    /// Matrix product; `SU(1,1)` is closed under it.
    pub fn mul(&self, rhs: &SL2Elt) -> SL2Elt {
        SL2Elt {
            alpha: self.alpha * rhs.alpha + self.beta * rhs.beta.conj(),
            beta: self.alpha * rhs.beta + self.beta * rhs.alpha.conj(),
        }
    }

    /// Matrix inverse `[[ᾱ, −β], [−β̄, α]]`.
    pub fn inverse(&self) -> SL2Elt {
        SL2Elt {
            alpha: self.alpha.conj(),
            beta: -self.beta,
        }
    }

    /// Componentwise distance, for tests and tolerant comparisons.
    pub fn dist(&self, rhs: &SL2Elt) -> f64 {
        (self.alpha - rhs.alpha)
            .norm()
            .max((self.beta - rhs.beta).norm())
    }
}

/// Section `s(a) = (1−|a|²)^{-1/2}·[[1, a], [ā, 1]]` over the disk.
pub fn sl2_section(a: DiskPoint) -> SL2Elt {
    let k = 1.0 / (1.0 - a.value().norm_sqr()).sqrt();
    SL2Elt {
        alpha: Complex64::new(k, 0.0),
        beta: k * a.value(),
    }
}

/// Unique factorization `g = s(a)·h_ψ`.
///
/// Returns `a = β·ᾱ⁻¹` and `ψ = Im ln α` on the principal branch `(−π, π]`.
pub fn sl2_decompose(g: &SL2Elt) -> (DiskPoint, f64) {
    let a = g.beta / g.alpha.conj();
    let psi = g.alpha.arg();
    // |a| < 1 is forced by |α|² − |β|² = 1.
    (DiskPoint { z: a }, psi)
}

/// Fraction-linear action of `g` on the disk.
///
/// With `g⁻¹ = [[α, β], [β̄, ᾱ]]` the image is `(αz + β)/(β̄z + ᾱ)`; the
/// result stays in the disk. The denominator cannot vanish for legitimate
/// inputs, the singularity check is defensive.
pub fn mobius_disk(g: &SL2Elt, z: DiskPoint) -> Result<DiskPoint> {
    let inv = g.inverse();
    let num = inv.alpha * z.value() + inv.beta;
    let den = inv.beta.conj() * z.value() + inv.alpha.conj();
    if den.norm() < SINGULARITY_EPS {
        return Err(Error::Singularity(format!(
            "Möbius denominator |{den}| below threshold"
        )));
    }
    DiskPoint::new(num / den)
}

//! Dunford-Riesz contour calculus by trapezoid quadrature on a circle.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::funcalc::holo::HoloMap;
use crate::linalg::{inverse, spectral_radius, CMat};

/// Circular contour descriptor for the resolvent integral.
#[derive(Debug, Clone, Copy)]
pub struct Contour {
    pub nodes: usize,
    pub radius: f64,
}

impl Contour {
    /// `nodes ≥ 16` and a power of two.
    pub fn new(nodes: usize, radius: f64) -> Result<Self> {
        if nodes < 16 || !nodes.is_power_of_two() {
            return Err(Error::Domain(format!(
                "contour nodes {nodes} must be a power of two ≥ 16"
            )));
        }
        if radius <= 0.0 {
            return Err(Error::Domain(format!(
                "contour radius {radius} must be positive"
            )));
        }
        Ok(Contour { nodes, radius })
    }
}

impl Default for Contour {
    fn default() -> Self {
        Contour {
            nodes: 256,
            radius: 1.0,
        }
    }
}

/// `f(a) = (2πi)⁻¹ ∮ f(t)(te − a)⁻¹ dt` on the contour circle.
///
/// Trapezoid quadrature on the circle is exponentially convergent in the
/// node count since the integrand is analytic in an annulus around it.
/// Fails when the spectral radius of `a` reaches the contour.
pub fn dunford_riesz(f: &HoloMap, a: &CMat, contour: &Contour) -> Result<CMat> {
    let rho = spectral_radius(a)?;
    if rho >= contour.radius {
        return Err(Error::SpectralDomain(format!(
            "spectral radius {rho} must stay below the contour radius {}",
            contour.radius
        )));
    }
    contour_integral(|t| f.eval(t), a, contour)
}

/// Same quadrature with an arbitrary boundary integrand; used for
/// intertwining checks where the integrand is a transformed function.
pub fn contour_integral(
    f: impl Fn(Complex64) -> Complex64,
    a: &CMat,
    contour: &Contour,
) -> Result<CMat> {
    let n = a.nrows();
    let mut acc = CMat::zeros(n, n);
    for j in 0..contour.nodes {
        let t = Complex64::from_polar(
            contour.radius,
            std::f64::consts::TAU * j as f64 / contour.nodes as f64,
        );
        let resolvent = inverse(&(CMat::identity(n, n) * t - a))?;
        acc += resolvent * (f(t) * t);
    }
    Ok(acc / Complex64::new(contour.nodes as f64, 0.0))
}

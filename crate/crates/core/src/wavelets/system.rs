//! Wavelet-system descriptors and the admissibility certificate.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::GridFn;
use crate::groups::HeisPoint;

use super::fourier::schrodinger_act;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemKind {
    Fourier,
    Bargmann,
    Hardy,
}

/// A coherent-state system: representation, vacuum, analysing functional and
/// the quadrature resolution used for integrals over the parameter space.
#[derive(Debug, Clone)]
pub struct WaveletSystem {
    pub kind: SystemKind,
    pub vacuum: String,
    pub analysing: String,
    /// Nodes per axis for quadrature over the parameter space.
    pub quadrature: usize,
}

impl WaveletSystem {
    pub fn fourier() -> Self {
        WaveletSystem {
            kind: SystemKind::Fourier,
            vacuum: "constant (2π)^{-1/2}, lives in the enlarged space L^∞".into(),
            analysing: "integration functional (2π)^{-1/2}∫·dy".into(),
            quadrature: 64,
        }
    }

    pub fn bargmann() -> Self {
        WaveletSystem {
            kind: SystemKind::Bargmann,
            vacuum: "normalized Gaussian π^{-1/4} e^{−x²/2}".into(),
            analysing: "pairing against the same Gaussian".into(),
            quadrature: 64,
        }
    }

    pub fn hardy() -> Self {
        WaveletSystem {
            kind: SystemKind::Hardy,
            vacuum: "constant 1 on the circle".into(),
            analysing: "normalized mean over the circle".into(),
            quadrature: 64,
        }
    }
}

/// Admissibility defect
/// `|∫_X ⟨ρ(x⁻¹)b₀,l₀⟩⟨ρ(x)b₀,l₀⟩ dμ(x) − ⟨b₀,l₀⟩|`.
///
/// Only the Bargmann system is supported: its parameter space `C` carries
/// the finite invariant measure `dμ = dA/π` for which the Gaussian overlaps
/// integrate exactly to `⟨b₀,l₀⟩ = 1`. The overlaps are computed honestly
/// through [`schrodinger_act`] on a sample grid and integrated by trapezoid
/// sums over the square `[−R, R]²` with `quadrature` nodes per axis; the
/// integrand decays like `e^{−|z|²}` so the trapezoid sum is spectrally
/// accurate.
pub fn admissibility_defect(system: &WaveletSystem) -> Result<f64> {
    if system.kind != SystemKind::Bargmann {
        return Err(Error::UnsupportedSystem(format!(
            "admissibility integral realized only for the Bargmann system, got {:?}",
            system.kind
        )));
    }
    let norm = std::f64::consts::PI.powf(-0.25);
    let b0 = GridFn::from_fn(256, 32.0, |x| {
        Complex64::new(norm * (-0.5 * x * x).exp(), 0.0)
    })?;
    let pairing = b0.inner(&b0); // ⟨b₀, l₀⟩ = 1 for the Gaussian pair

    let nodes = system.quadrature;
    let radius = 5.0;
    let h = 2.0 * radius / nodes as f64;
    let mut integral = Complex64::default();
    for i in 0..nodes {
        let u = -radius + (i as f64 + 0.5) * h;
        for j in 0..nodes {
            let v = -radius + (j as f64 + 0.5) * h;
            let plus = schrodinger_act(HeisPoint::new(0.0, u, v), &b0, 1.0)?;
            let minus = schrodinger_act(HeisPoint::new(0.0, -u, -v), &b0, 1.0)?;
            let overlap = minus.inner(&b0) * plus.inner(&b0);
            integral += overlap * (h * h / std::f64::consts::PI);
        }
    }
    Ok((integral - pairing).norm())
}

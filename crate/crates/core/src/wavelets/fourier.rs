//! The Fourier system: Heisenberg group over the subgroup `{(s, x, 0)}`.
//!
//! The homogeneous space is the real line and the reduced wavelet transform
//! is the Fourier transform with kernel `(2π)^{-1/2} e^{i√2xy}`. The inverse
//! integrates against the conjugate kernel with the invariant measure
//! `√2·dx` on the phase side; the factor is the Jacobian of `ξ = √2x` and
//! makes the round trip the identity.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::GridFn;
use crate::groups::HeisPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Fourier transform with kernel `e^{i√2xy}` by trapezoid quadrature.
///
/// Spectrally accurate for smooth decaying samples that are band-limited
/// relative to the grid (caller responsibility). The kernel couples the
/// grid to itself, so self-duality bounds the extent: the largest output
/// oscillation `√2·x_max` must stay below the Nyquist rate `π/h`, i.e.
/// `extent² ≤ √2·π·n`. Forward and inverse compose to the identity.
pub fn fourier_wavelet(f: &GridFn, direction: Direction) -> GridFn {
    let n = f.len();
    let root = (std::f64::consts::TAU).sqrt().recip();
    let (scale, sign) = match direction {
        Direction::Forward => (root * f.h, 1.0),
        Direction::Inverse => (std::f64::consts::SQRT_2 * root * f.h, -1.0),
    };
    let mut out = f.zeros_like();
    for m in 0..n {
        let x = f.x(m);
        let mut acc = Complex64::default();
        for j in 0..n {
            let phase = sign * std::f64::consts::SQRT_2 * x * f.x(j);
            acc += f.samples[j] * Complex64::from_polar(1.0, phase);
        }
        out.samples[m] = acc * scale;
    }
    out
}

/// Inner product on the phase side of the Fourier system (measure `√2·dx`).
pub fn fourier_inner(u: &GridFn, w: &GridFn) -> Complex64 {
    std::f64::consts::SQRT_2 * u.inner(w)
}

/// Schrödinger representation with parameter `hbar`:
/// `f(y) ↦ e^{i(2sħ − √(2ħ)vy + ħuv)} f(y − √(2ħ)u)` for `z = u + iv`.
///
/// Fractional shifts go through band-limited interpolation; the `L²` norm is
/// preserved to roundoff. Fails when the shift exceeds half the grid extent.
pub fn schrodinger_act(g: HeisPoint, f: &GridFn, hbar: f64) -> Result<GridFn> {
    if hbar <= 0.0 {
        return Err(Error::Domain(format!("hbar = {hbar} must be positive")));
    }
    let (u, v) = (g.x, g.y);
    let root = (2.0 * hbar).sqrt();
    let mut out = if u == 0.0 {
        f.clone()
    } else {
        f.shift(root * u)?
    };
    let constant = 2.0 * g.s * hbar + hbar * u * v;
    for (j, val) in out.samples.iter_mut().enumerate() {
        let y = f.x(j);
        *val *= Complex64::from_polar(1.0, constant - root * v * y);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaussian_grid(n: usize, extent: f64) -> GridFn {
        GridFn::from_fn(n, extent, |x| Complex64::new((-0.5 * x * x).exp(), 0.0)).unwrap()
    }

    #[test]
    fn zero_maps_to_zero() {
        let z = GridFn::from_fn(64, 16.0, |_| Complex64::default()).unwrap();
        let w = fourier_wavelet(&z, Direction::Forward);
        assert!(w.samples.iter().all(|c| c.norm() == 0.0));
    }

    #[test]
    fn gaussian_twice_narrower() {
        // e^{−y²/2} ↦ e^{−x²} for the kernel e^{i√2xy}.
        let f = gaussian_grid(256, 32.0);
        let w = fourier_wavelet(&f, Direction::Forward);
        let exact = GridFn::from_fn(256, 32.0, |x| Complex64::new((-x * x).exp(), 0.0)).unwrap();
        assert!(w.max_abs_diff(&exact) < 1e-12);
    }

    #[test]
    fn shift_theorem() {
        // f(y − c) ↦ e^{i√2xc} f̂(x).
        let c = 0.8;
        let n = 256;
        let f = gaussian_grid(n, 32.0);
        let fc = GridFn::from_fn(n, 32.0, |x| {
            Complex64::new((-0.5 * (x - c) * (x - c)).exp(), 0.0)
        })
        .unwrap();
        let lhs = fourier_wavelet(&fc, Direction::Forward);
        let base = fourier_wavelet(&f, Direction::Forward);
        let mut rhs = base.clone();
        for (m, val) in rhs.samples.iter_mut().enumerate() {
            *val *= Complex64::from_polar(1.0, std::f64::consts::SQRT_2 * base.x(m) * c);
        }
        assert!(lhs.max_abs_diff(&rhs) < 1e-11);
    }

    #[test]
    fn round_trip_identity() {
        let f = GridFn::from_fn(256, 32.0, |x| {
            Complex64::new((-0.4 * x * x).exp() * (1.0 + x), 0.3 * (-0.6 * x * x).exp())
        })
        .unwrap();
        let back = fourier_wavelet(&fourier_wavelet(&f, Direction::Forward), Direction::Inverse);
        assert!(back.max_abs_diff(&f) < 1e-10);
    }

    #[test]
    fn plancherel_with_phase_measure() {
        let v = gaussian_grid(256, 32.0);
        let l = GridFn::from_fn(256, 32.0, |x| {
            Complex64::new((-0.5 * (x - 0.7) * (x - 0.7)).exp(), 0.2 * (-x * x).exp())
        })
        .unwrap();
        let wv = fourier_wavelet(&v, Direction::Forward);
        let wl = fourier_wavelet(&l, Direction::Forward);
        let lhs = fourier_inner(&wv, &wl);
        let rhs = v.inner(&l);
        assert!((lhs - rhs).norm() < 1e-10, "{lhs} vs {rhs}");
    }

    #[test]
    fn modulation_intertwines_with_translation() {
        // W(e^{i√2vy} f) = (Wf) shifted by −v.
        let v = 1.3;
        let f = gaussian_grid(256, 32.0);
        let modulated = GridFn::from_fn(256, 32.0, |x| {
            Complex64::new((-0.5 * x * x).exp(), 0.0)
                * Complex64::from_polar(1.0, std::f64::consts::SQRT_2 * v * x)
        })
        .unwrap();
        let lhs = fourier_wavelet(&modulated, Direction::Forward);
        let rhs = fourier_wavelet(&f, Direction::Forward).shift(-v).unwrap();
        assert!(lhs.max_abs_diff(&rhs) < 1e-10);
    }

    #[test]
    fn schrodinger_identity_and_centre_phase() {
        let f = gaussian_grid(128, 24.0);
        let id = schrodinger_act(HeisPoint::identity(), &f, 1.0).unwrap();
        assert!(id.max_abs_diff(&f) == 0.0);

        // (s, 0, 0) acts by the exact phase e^{2isħ}.
        let s = 0.83;
        let hbar = 0.7;
        let acted = schrodinger_act(HeisPoint::new(s, 0.0, 0.0), &f, hbar).unwrap();
        let mut expect = f.clone();
        for val in expect.samples.iter_mut() {
            *val *= Complex64::from_polar(1.0, 2.0 * s * hbar);
        }
        assert!(acted.max_abs_diff(&expect) < 1e-15);
    }

    #[test]
    fn schrodinger_pure_shift() {
        let hbar = 1.0;
        let u = 0.6;
        let f = gaussian_grid(256, 32.0);
        let acted = schrodinger_act(HeisPoint::new(0.0, u, 0.0), &f, hbar).unwrap();
        let root = (2.0 * hbar).sqrt();
        let exact = GridFn::from_fn(256, 32.0, |y| {
            Complex64::new((-0.5 * (y - root * u) * (y - root * u)).exp(), 0.0)
        })
        .unwrap();
        assert!(acted.max_abs_diff(&exact) < 1e-11);
        assert!((acted.norm_l2() - f.norm_l2()).abs() < 1e-10);
    }

    #[test]
    fn schrodinger_norm_preserved_generic() {
        let f = GridFn::from_fn(256, 32.0, |x| {
            Complex64::new((-0.3 * x * x).exp(), 0.5 * x * (-0.4 * x * x).exp())
        })
        .unwrap();
        let g = HeisPoint::new(0.4, 0.7, -1.1);
        let acted = schrodinger_act(g, &f, 0.9).unwrap();
        assert!((acted.norm_l2() - f.norm_l2()).abs() < 1e-10);
    }

    #[test]
    fn schrodinger_rejects_large_shift() {
        let f = gaussian_grid(64, 8.0);
        assert!(schrodinger_act(HeisPoint::new(0.0, 4.0, 0.0), &f, 1.0).is_err());
    }
}

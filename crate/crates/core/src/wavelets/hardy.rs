//! The Hardy system: `SL(2,R)` over its compact subgroup `K`.
//!
//! The constant vacuum on the circle generates, via the mock discrete
//! series, the boundary values of functions holomorphic in the disk. The
//! reduced wavelet transform evaluates the analytic part at a disk point
//! with the weight `√(1−|a|²)`; the Szegő projection is its inverse
//! composed with itself.
//!
//! Convention: [`rho1_act`] applies the operator whose fraction-linear data
//! is the matrix of its argument, i.e. `ρ(m)f = (β̄z+ᾱ)^{-1}f((αz+β)/(β̄z+ᾱ))`
//! for `m = [[α, β], [β̄, ᾱ]]`. Under this convention the vacuum transforms
//! with the phase `e^{iψ}` under `h_ψ` and the transform intertwines `ρ`
//! with the disk action [`lambda_disk_act`] whose twist character is
//! `χ₁(h_ψ) = e^{iψ}`.

use num_complex::Complex64;

use crate::grid::{signed_freq, CircleFn};
use crate::groups::{sl2_decompose, sl2_section, DiskPoint, SL2Elt};

/// Finitely truncated Taylor coefficients `c_0..c_{M−1}`.
#[derive(Debug, Clone)]
pub struct TaylorSeries {
    pub coeffs: Vec<Complex64>,
}

/// A series value together with the truncation tail bound at that point.
#[derive(Debug, Clone, Copy)]
pub struct SeriesEval {
    pub value: Complex64,
    pub tail_bound: f64,
}

impl TaylorSeries {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        TaylorSeries { coeffs }
    }

    /// Horner evaluation of the analytic part at `z`, `|z| < 1`, with a
    /// geometric bound on the dropped tail.
    pub fn eval(&self, z: Complex64) -> SeriesEval {
        let mut acc = Complex64::default();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        let r = z.norm();
        let last = self
            .coeffs
            .iter()
            .rev()
            .take(4)
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        let tail_bound = if r < 1.0 {
            last * r.powi(self.coeffs.len() as i32) / (1.0 - r)
        } else {
            f64::INFINITY
        };
        SeriesEval {
            value: acc,
            tail_bound,
        }
    }
}

/// Reduced wavelet transform of the Hardy system at the disk point `a`:
/// `√(1−|a|²)·Σ_{k≥0} c_k a^k` over the nonnegative-frequency coefficients.
pub fn hardy_transform(f: &CircleFn, a: DiskPoint) -> Complex64 {
    let n = f.len();
    let coeffs = f.fourier_coeffs();
    let mut acc = Complex64::default();
    let mut ak = Complex64::new(1.0, 0.0);
    for c in coeffs.iter().take(n / 2) {
        acc += c * ak;
        ak *= a.value();
    }
    acc * (1.0 - a.value().norm_sqr()).sqrt()
}

/// Literal contour form `(√(1−|a|²)/i)·∮ f(z)/(a+z) dz` of the transform.
///
/// Kept as a cross-check: by the residue at `z = −a` it evaluates to
/// `2π·hardy_transform(f, −a)`, which pins the normalization constant the
/// contour formula leaves open.
pub fn hardy_transform_contour(f: &CircleFn, a: DiskPoint) -> Complex64 {
    let n = f.len();
    let mut acc = Complex64::default();
    for (j, v) in f.samples.iter().enumerate() {
        let z = Complex64::from_polar(1.0, CircleFn::angle_of(j, n));
        acc += v * z / (a.value() + z);
    }
    acc * (1.0 - a.value().norm_sqr()).sqrt() * std::f64::consts::TAU / n as f64
}

/// Szegő projection: zeroes every Fourier bin of negative frequency (the
/// Nyquist bin counts as negative); identity on Hardy inputs, idempotent.
pub fn szego_project(f: &CircleFn) -> CircleFn {
    let n = f.len();
    let mut coeffs = f.fourier_coeffs();
    for (k, c) in coeffs.iter_mut().enumerate() {
        if k >= n / 2 {
            *c = Complex64::default();
        }
    }
    CircleFn::from_fourier_coeffs(&coeffs).expect("same length")
}

/// First `m` Taylor coefficients of the analytic part of `f`.
///
/// Bins beyond the positive-frequency range carry no Taylor data and are
/// returned as zeros.
pub fn taylor_decompose(f: &CircleFn, m: usize) -> TaylorSeries {
    let n = f.len();
    let coeffs = f.fourier_coeffs();
    let taken = m.min(n / 2);
    let mut out: Vec<Complex64> = coeffs[..taken].to_vec();
    out.resize(m, Complex64::default());
    TaylorSeries::new(out)
}

/// Mock discrete series operator attached to the matrix `m = [[α,β],[β̄,ᾱ]]`:
/// `f(e^{iφ}) ↦ (β̄e^{iφ}+ᾱ)^{-1} f((αe^{iφ}+β)/(β̄e^{iφ}+ᾱ))`.
///
/// Values at grid angles come from trigonometric interpolation of `f` at the
/// transformed angles; the `L²` norm is preserved up to interpolation error.
pub fn rho1_act(m: &SL2Elt, f: &CircleFn) -> CircleFn {
    let n = f.len();
    let coeffs = f.fourier_coeffs();
    let (alpha, beta) = (m.alpha(), m.beta());
    let samples = (0..n)
        .map(|j| {
            let z = Complex64::from_polar(1.0, CircleFn::angle_of(j, n));
            let den = beta.conj() * z + alpha.conj();
            let w = (alpha * z + beta) / den;
            let theta = w.arg();
            let mut acc = Complex64::default();
            for (k, c) in coeffs.iter().enumerate() {
                let freq = signed_freq(k, n);
                if 2 * k == n {
                    acc += c * (freq as f64 * theta).cos();
                } else {
                    acc += c * Complex64::from_polar(1.0, freq as f64 * theta);
                }
            }
            acc / den
        })
        .collect();
    CircleFn::new(samples).expect("same length")
}

/// Induced disk action `[λ(m)F](a) = χ₁(h)·F(b)` where `m·s(a) = s(b)·h`
/// and `χ₁(h_ψ) = e^{iψ}`.
///
/// `F` is a Hardy-image function: the stored Taylor series weighted by
/// `√(1−|b|²)` at the evaluation point. The returned [`SeriesEval`] carries
/// the truncation bound of the series evaluation.
pub fn lambda_disk_act(m: &SL2Elt, f: &TaylorSeries, a: DiskPoint) -> SeriesEval {
    let (b, psi) = sl2_decompose(&m.mul(&sl2_section(a)));
    let chi = Complex64::from_polar(1.0, psi);
    let inner = f.eval(b.value());
    let weight = (1.0 - b.value().norm_sqr()).sqrt();
    SeriesEval {
        value: chi * weight * inner.value,
        tail_bound: weight * inner.tail_bound,
    }
}

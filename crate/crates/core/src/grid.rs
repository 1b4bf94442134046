//! Sampled functions on uniform grids and their spectral helpers.
//!
//! Two sample containers are used throughout the crate: [`GridFn`] for
//! complex functions on a uniform grid of the real line and [`CircleFn`] for
//! functions on the unit circle sampled at `N` equispaced angles. Both keep
//! `N` a power of two so every transform can go through the FFT, and both
//! treat smooth decaying (respectively periodic) data, for which trapezoid
//! sums are spectrally accurate.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};

/// In-place unnormalized forward FFT.
pub fn fft_forward(buf: &mut [Complex64]) {
    let mut planner = FftPlanner::new();
    planner.plan_fft_forward(buf.len()).process(buf);
}

/// In-place inverse FFT normalized by `1/N`.
pub fn fft_inverse(buf: &mut [Complex64]) {
    let n = buf.len();
    let mut planner = FftPlanner::new();
    planner.plan_fft_inverse(n).process(buf);
    let scale = 1.0 / n as f64;
    for v in buf.iter_mut() {
        *v *= scale;
    }
}

/// Signed frequency of DFT bin `k` out of `n` (Nyquist bin mapped to `+n/2`).
pub fn signed_freq(k: usize, n: usize) -> i64 {
    if k <= n / 2 {
        k as i64
    } else {
        k as i64 - n as i64
    }
}

fn check_pow2(n: usize) -> Result<()> {
    if n < 8 || !n.is_power_of_two() {
        return Err(Error::Domain(format!(
            "grid size {n} must be a power of two ≥ 8"
        )));
    }
    Ok(())
}

/// Complex samples `f(x0 + j·h)`, `j = 0..n`.
#[derive(Debug, Clone)]
pub struct GridFn {
    pub samples: Vec<Complex64>,
    pub x0: f64,
    pub h: f64,
}

impl GridFn {
    pub fn new(samples: Vec<Complex64>, x0: f64, h: f64) -> Result<Self> {
        check_pow2(samples.len())?;
        if h <= 0.0 {
            return Err(Error::Domain(format!("step h = {h} must be positive")));
        }
        Ok(GridFn { samples, x0, h })
    }

    /// Symmetric grid of `n` points covering `[−extent/2, extent/2)`.
    pub fn from_fn(n: usize, extent: f64, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        check_pow2(n)?;
        let h = extent / n as f64;
        let x0 = -extent / 2.0;
        let samples = (0..n).map(|j| f(x0 + j as f64 * h)).collect();
        GridFn::new(samples, x0, h)
    }

    pub fn zeros_like(&self) -> GridFn {
        GridFn {
            samples: vec![Complex64::default(); self.samples.len()],
            x0: self.x0,
            h: self.h,
        }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn x(&self, j: usize) -> f64 {
        self.x0 + j as f64 * self.h
    }

    pub fn extent(&self) -> f64 {
        self.h * self.len() as f64
    }

    /// Trapezoid `L²(R)` inner product `h·Σ f ḡ` (exact for decaying data).
    pub fn inner(&self, other: &GridFn) -> Complex64 {
        let s: Complex64 = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a * b.conj())
            .sum();
        s * self.h
    }

    pub fn norm_l2(&self) -> f64 {
        self.inner(self).re.sqrt()
    }

    pub fn max_abs_diff(&self, other: &GridFn) -> f64 {
        self.samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Band-limited shift `f(x) ↦ f(x − delta)` through the FFT.
    ///
    /// Fails when `|delta|` exceeds half the grid extent; the periodic wrap
    /// would then dominate the result.
    pub fn shift(&self, delta: f64) -> Result<GridFn> {
        if delta.abs() > 0.5 * self.extent() {
            return Err(Error::Domain(format!(
                "shift {delta} exceeds half the grid extent {}",
                self.extent()
            )));
        }
        let n = self.len();
        let mut buf = self.samples.clone();
        fft_forward(&mut buf);
        let dk = std::f64::consts::TAU / self.extent();
        for (k, v) in buf.iter_mut().enumerate() {
            let freq = signed_freq(k, n) as f64 * dk;
            *v *= Complex64::from_polar(1.0, -freq * delta);
        }
        fft_inverse(&mut buf);
        GridFn::new(buf, self.x0, self.h)
    }

    /// Evaluates the trigonometric interpolant at an arbitrary point.
    ///
    /// The interpolant treats the samples as one period of a smooth periodic
    /// function; accuracy is spectral for data decaying inside the box.
    pub fn eval_trig(&self, x: f64) -> Complex64 {
        let n = self.len();
        let mut coeffs = self.samples.clone();
        fft_forward(&mut coeffs);
        let t = (x - self.x0) / self.extent() * std::f64::consts::TAU;
        let mut acc = Complex64::default();
        for (k, c) in coeffs.iter().enumerate() {
            let freq = signed_freq(k, n);
            if 2 * k == n {
                // split the Nyquist bin into its cosine part
                acc += c * (freq as f64 * t).cos();
            } else {
                acc += c * Complex64::from_polar(1.0, freq as f64 * t);
            }
        }
        acc / n as f64
    }
}

/// Complex samples at the angles `φ_j = 2πj/N` of the unit circle.
#[derive(Debug, Clone)]
pub struct CircleFn {
    pub samples: Vec<Complex64>,
}

impl CircleFn {
    pub fn new(samples: Vec<Complex64>) -> Result<Self> {
        check_pow2(samples.len())?;
        Ok(CircleFn { samples })
    }

    pub fn from_fn(n: usize, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        check_pow2(n)?;
        Ok(CircleFn {
            samples: (0..n).map(|j| f(Self::angle_of(j, n))).collect(),
        })
    }

    pub fn angle_of(j: usize, n: usize) -> f64 {
        std::f64::consts::TAU * j as f64 / n as f64
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Fourier coefficients `c_k = (1/N)·Σ_j f_j e^{−2πijk/N}` (normalized
    /// measure `dφ/2π`, under which `f ≡ 1` has unit norm).
    pub fn fourier_coeffs(&self) -> Vec<Complex64> {
        let n = self.len();
        let mut buf = self.samples.clone();
        fft_forward(&mut buf);
        for v in buf.iter_mut() {
            *v /= n as f64;
        }
        buf
    }

    /// Rebuilds samples from raw DFT coefficients (inverse of
    /// [`Self::fourier_coeffs`]).
    pub fn from_fourier_coeffs(coeffs: &[Complex64]) -> Result<Self> {
        let n = coeffs.len();
        check_pow2(n)?;
        let mut buf = coeffs.to_vec();
        for v in buf.iter_mut() {
            *v *= n as f64;
        }
        fft_inverse(&mut buf);
        CircleFn::new(buf)
    }

    /// `L²(T)` inner product `(1/N)·Σ f ḡ` under the normalized measure.
    pub fn inner(&self, other: &CircleFn) -> Complex64 {
        let s: Complex64 = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a * b.conj())
            .sum();
        s / self.len() as f64
    }

    pub fn norm_l2(&self) -> f64 {
        self.inner(self).re.sqrt()
    }

    pub fn max_abs_diff(&self, other: &CircleFn) -> f64 {
        self.samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Evaluates the trigonometric interpolant at an arbitrary angle.
    pub fn eval_trig(&self, theta: f64) -> Complex64 {
        let n = self.len();
        let coeffs = self.fourier_coeffs();
        let mut acc = Complex64::default();
        for (k, c) in coeffs.iter().enumerate() {
            let freq = signed_freq(k, n);
            if 2 * k == n {
                acc += c * (freq as f64 * theta).cos();
            } else {
                acc += c * Complex64::from_polar(1.0, freq as f64 * theta);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_shift_matches_exact_gaussian() {
        let f = GridFn::from_fn(256, 32.0, |x| Complex64::new((-0.5 * x * x).exp(), 0.0)).unwrap();
        let shifted = f.shift(1.25).unwrap();
        let exact = GridFn::from_fn(256, 32.0, |x| {
            Complex64::new((-0.5 * (x - 1.25) * (x - 1.25)).exp(), 0.0)
        })
        .unwrap();
        assert!(shifted.max_abs_diff(&exact) < 1e-12);
        assert!((shifted.norm_l2() - f.norm_l2()).abs() < 1e-12);
    }

    #[test]
    fn grid_shift_rejects_large_delta() {
        let f = GridFn::from_fn(64, 8.0, |_| Complex64::new(1.0, 0.0)).unwrap();
        assert!(f.shift(5.0).is_err());
    }

    #[test]
    fn trig_eval_reproduces_band_limited() {
        let f = CircleFn::from_fn(32, |t| {
            Complex64::from_polar(1.0, 3.0 * t) + Complex64::from_polar(0.5, -2.0 * t)
        })
        .unwrap();
        for m in 0..17 {
            let theta = 0.37 + m as f64 * 0.31;
            let exact =
                Complex64::from_polar(1.0, 3.0 * theta) + Complex64::from_polar(0.5, -2.0 * theta);
            assert!((f.eval_trig(theta) - exact).norm() < 1e-12);
        }
    }

    #[test]
    fn circle_coeff_round_trip() {
        let f = CircleFn::from_fn(64, |t| Complex64::new(t.cos() + 0.3, 0.2 * (2.0 * t).sin()))
            .unwrap();
        let back = CircleFn::from_fourier_coeffs(&f.fourier_coeffs()).unwrap();
        assert!(f.max_abs_diff(&back) < 1e-13);
    }

    #[test]
    fn grid_eval_trig_matches_samples_and_midpoints() {
        let f = GridFn::from_fn(128, 24.0, |x| Complex64::new((-0.5 * x * x).exp(), 0.0)).unwrap();
        assert!((f.eval_trig(f.x(17)) - f.samples[17]).norm() < 1e-12);
        let mid = 0.5 * (f.x(60) + f.x(61));
        assert!((f.eval_trig(mid).re - (-0.5 * mid * mid).exp()).abs() < 1e-10);
    }
}

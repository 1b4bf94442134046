//! The Segal-Bargmann system: Heisenberg group over its centre.
//!
//! The Gaussian vacuum `e^{−x²/2}` generates the coherent states and the
//! transform `f ↦ f̆(z) = π^{-1/4}∫ f(x) e^{−(z²+x²)/2 + √2zx} dx` lands in
//! the Fock space of entire functions square-integrable against `e^{−|z|²}`.
//! Coefficients are stored in the orthonormal basis `z^n/√(n!)`, in which
//! the normalized Hermite functions map to single modes.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::GridFn;

/// Element of the Fock space in the orthonormal basis `e_n(z) = z^n/√(n!)`.
#[derive(Debug, Clone)]
pub struct FockFn {
    pub coeffs: Vec<Complex64>,
}

impl FockFn {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        FockFn { coeffs }
    }

    pub fn modes(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of the plain monomial `z^n`.
    pub fn monomial_coeff(&self, n: usize) -> Complex64 {
        self.coeffs
            .get(n)
            .map_or(Complex64::default(), |c| c / factorial(n).sqrt())
    }

    /// Fock-space norm, `√(Σ |c_n|²)` in the orthonormal basis.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Evaluates the entire function at `z`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::default();
        let mut zn = Complex64::new(1.0, 0.0);
        for (n, c) in self.coeffs.iter().enumerate() {
            acc += c * zn / factorial(n).sqrt();
            zn *= z;
        }
        acc
    }

    pub fn max_coeff_diff(&self, other: &FockFn) -> f64 {
        let m = self.modes().max(other.modes());
        (0..m)
            .map(|n| {
                let a = self.coeffs.get(n).copied().unwrap_or_default();
                let b = other.coeffs.get(n).copied().unwrap_or_default();
                (a - b).norm()
            })
            .fold(0.0, f64::max)
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Physicists' Hermite polynomials `H_0..H_{m−1}` evaluated at `x`.
fn hermite_values(m: usize, x: f64) -> Vec<f64> {
    let mut h = Vec::with_capacity(m);
    if m == 0 {
        return h;
    }
    h.push(1.0);
    if m > 1 {
        h.push(2.0 * x);
    }
    for n in 1..m.saturating_sub(1) {
        let next = 2.0 * x * h[n] - 2.0 * n as f64 * h[n - 1];
        h.push(next);
    }
    h
}

/// Truncation radius with `e^{−R²}·R^{2M} ≤ 1e−16` for the largest mode `M`.
fn truncation_radius(modes: usize) -> f64 {
    let m = modes.max(1) as f64;
    let mut r: f64 = 4.0;
    while (-r * r).exp() * r.powf(2.0 * m) > 1e-16 {
        r += 0.25;
        if r > 40.0 {
            break;
        }
    }
    r
}

/// Segal-Bargmann transform: Fock coefficients of `f̆` up to `modes`.
///
/// The monomial coefficient comes from the Hermite moment
/// `c_n = π^{-1/4} 2^{-n/2}/n! ∫ f(x) H_n(x) e^{−x²/2} dx`, a consequence of
/// the generating function of the kernel; trapezoid quadrature on the grid.
pub fn segal_bargmann(f: &GridFn, modes: usize) -> FockFn {
    let mut moments = vec![Complex64::default(); modes];
    for j in 0..f.len() {
        let x = f.x(j);
        let weight = f.samples[j] * (-0.5 * x * x).exp() * f.h;
        for (n, h) in hermite_values(modes, x).iter().enumerate() {
            moments[n] += weight * h;
        }
    }
    let norm = std::f64::consts::PI.powf(-0.25);
    let coeffs = moments
        .iter()
        .enumerate()
        .map(|(n, m)| {
            // orthonormal coefficient = monomial coefficient · √(n!)
            let mono = norm * 0.5f64.powf(n as f64 / 2.0) / factorial(n) * m;
            mono * factorial(n).sqrt()
        })
        .collect();
    FockFn::new(coeffs)
}

/// Inverse Segal-Bargmann transform by quadrature over a truncated disk.
///
/// Evaluates `f(x) = π^{-1}π^{-1/4} ∬ f̆(z) e^{−(z̄²+x²)/2+√2z̄x} e^{−|z|²} dA`;
/// the `1/π` normalizes the Gaussian measure so the vacuum round trip is the
/// identity. `grid` only describes the output sampling.
pub fn segal_bargmann_inv(fock: &FockFn, grid: &GridFn) -> GridFn {
    let radius = truncation_radius(fock.modes());
    let n_r = 96;
    // The kernel e^{√2 z̄ x} has angular bandwidth ~ √2·|x|·r, so the
    // angle count must grow with the output extent.
    let xmax = grid.x0.abs().max((grid.x0 + grid.extent()).abs());
    let bandwidth = (0.75 * std::f64::consts::SQRT_2 * xmax * radius).ceil() as usize;
    let n_theta = bandwidth.max(4 * fock.modes()).max(128).next_power_of_two();
    let (radii, radial_w) = crate::quadrature::gauss_legendre_on(n_r, radius);
    let dtheta = std::f64::consts::TAU / n_theta as f64;
    let norm = std::f64::consts::PI.powf(-1.25);

    // Per-node coefficient γ = w·f̆(z)·e^{−z̄²/2−|z|²}·r; then
    // f(x) = e^{−x²/2}·Σ γ e^{√2 z̄ x}.
    let mut nodes: Vec<(Complex64, Complex64)> = Vec::with_capacity(n_r * n_theta);
    for i in 0..n_r {
        let (r, wr) = (radii[i], radial_w[i]);
        for j in 0..n_theta {
            let theta = j as f64 * dtheta;
            let z = Complex64::from_polar(r, theta);
            let zbar = z.conj();
            let gamma = fock.eval(z)
                * (-0.5 * zbar * zbar - Complex64::new(r * r, 0.0)).exp()
                * (r * wr * dtheta * norm);
            nodes.push((zbar, gamma));
        }
    }

    let mut out = grid.zeros_like();
    for j in 0..grid.len() {
        let x = grid.x(j);
        let mut acc = Complex64::default();
        for (zbar, gamma) in &nodes {
            acc += gamma * (std::f64::consts::SQRT_2 * x * zbar).exp();
        }
        out.samples[j] = acc * (-0.5 * x * x).exp();
    }
    out
}

/// Function samples on a polar grid of the complex plane.
///
/// Radial nodes follow the Gauss-Legendre rule on `[0, R]`, angles are
/// uniform; the quadrature weight (including the area element `r dr dθ`) is
/// derived from the grid shape so projections are plain weighted sums.
#[derive(Debug, Clone)]
pub struct PolarGridFn {
    pub radius: f64,
    pub n_r: usize,
    pub n_theta: usize,
    radii: Vec<f64>,
    radial_w: Vec<f64>,
    /// Samples in r-major order: `samples[i*n_theta + j] = F(r_i e^{iθ_j})`.
    pub samples: Vec<Complex64>,
}

impl PolarGridFn {
    pub fn from_fn(
        n_r: usize,
        n_theta: usize,
        radius: f64,
        f: impl Fn(Complex64) -> Complex64,
    ) -> Self {
        let (radii, radial_w) = crate::quadrature::gauss_legendre_on(n_r, radius);
        let mut samples = Vec::with_capacity(n_r * n_theta);
        for r in &radii {
            for j in 0..n_theta {
                let theta = std::f64::consts::TAU * j as f64 / n_theta as f64;
                samples.push(f(Complex64::from_polar(*r, theta)));
            }
        }
        PolarGridFn {
            radius,
            n_r,
            n_theta,
            radii,
            radial_w,
            samples,
        }
    }

    pub fn node(&self, i: usize, j: usize) -> Complex64 {
        Complex64::from_polar(
            self.radii[i],
            std::f64::consts::TAU * j as f64 / self.n_theta as f64,
        )
    }

    fn area_weight(&self, i: usize) -> f64 {
        self.radii[i] * self.radial_w[i] * std::f64::consts::TAU / self.n_theta as f64
    }
}

/// Orthogonal projection onto the analytic subspace of
/// `L²(C, π^{-1}e^{−|z|²}dA)`, returned as Fock coefficients.
///
/// `c_n = (1/π)∬ F(z) conj(e_n(z)) e^{−|z|²} dA`; idempotent within
/// quadrature tolerance, identity on analytic inputs.
pub fn fock_project(f: &PolarGridFn, modes: usize) -> Result<FockFn> {
    if modes > 0 && f.n_theta < 4 * modes {
        return Err(Error::Domain(format!(
            "polar grid has {} angles, need ≥ {} for {} modes",
            f.n_theta,
            4 * modes,
            modes
        )));
    }
    let mut coeffs = vec![Complex64::default(); modes];
    for i in 0..f.n_r {
        let w = f.area_weight(i) / std::f64::consts::PI;
        for j in 0..f.n_theta {
            let z = f.node(i, j);
            let gauss = (-z.norm_sqr()).exp();
            let val = f.samples[i * f.n_theta + j] * w * gauss;
            let mut zbar_n = Complex64::new(1.0, 0.0);
            for (n, c) in coeffs.iter_mut().enumerate() {
                *c += val * zbar_n / factorial(n).sqrt();
                zbar_n *= z.conj();
            }
        }
    }
    Ok(FockFn::new(coeffs))
}

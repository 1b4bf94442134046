//! Weyl quantization of polynomial symbols on a line grid.
//!
//! The canonical pair is `Q = multiplication by x` and `P = −iħ·d/dx` with
//! the derivative realized spectrally (exact below the grid Nyquist; the
//! Nyquist bin itself is zeroed to keep `P` Hermitian). A monomial `p^m q^n`
//! quantizes to the total symmetrization of `m` copies of `P` and `n`
//! copies of `Q`, computed through the equivalent two-sided binomial form
//! `2^{−m} Σ_r C(m,r) P^{m−r} Q^n P^r`.

use nalgebra::DVector;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::signed_freq;
use crate::linalg::CMat;

use super::symbol::PhaseSymbol;

/// Uniform symmetric grid descriptor for line operators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineGrid {
    pub n: usize,
    pub extent: f64,
}

impl LineGrid {
    pub fn new(n: usize, extent: f64) -> Result<Self> {
        if n < 8 || !n.is_power_of_two() {
            return Err(Error::Domain(format!(
                "grid size {n} must be a power of two ≥ 8"
            )));
        }
        if extent <= 0.0 {
            return Err(Error::Domain(format!("extent {extent} must be positive")));
        }
        Ok(LineGrid { n, extent })
    }

    pub fn h(&self) -> f64 {
        self.extent / self.n as f64
    }

    pub fn x(&self, j: usize) -> f64 {
        -0.5 * self.extent + j as f64 * self.h()
    }

    /// Angular frequency of DFT bin `k`.
    pub fn freq(&self, k: usize) -> f64 {
        std::f64::consts::TAU * signed_freq(k, self.n) as f64 / self.extent
    }
}

/// A dense operator on grid samples, tagged with its grid and `ħ`.
#[derive(Debug, Clone)]
pub struct LineOperator {
    pub matrix: CMat,
    pub grid: LineGrid,
    pub hbar: f64,
}

impl LineOperator {
    pub fn apply(&self, state: &DVector<Complex64>) -> DVector<Complex64> {
        &self.matrix * state
    }
}

/// Circulant matrix with the given multiplier in frequency space
/// (`F⁻¹·diag(m(k̂))·F`), built from its first column.
pub fn circulant_from_freq(grid: &LineGrid, mult: impl Fn(f64) -> Complex64) -> CMat {
    let n = grid.n;
    let mut row = vec![Complex64::default(); n];
    for (k, r) in row.iter_mut().enumerate() {
        *r = mult(grid.freq(k));
    }
    // first column c[d] = (1/n)·Σ_k m_k e^{2πi k d / n}
    let mut col = vec![Complex64::default(); n];
    for (d, c) in col.iter_mut().enumerate() {
        let mut acc = Complex64::default();
        for (k, m) in row.iter().enumerate() {
            acc += m * Complex64::from_polar(
                1.0,
                std::f64::consts::TAU * (k * d % n) as f64 / n as f64,
            );
        }
        *c = acc / n as f64;
    }
    let mut out = CMat::zeros(n, n);
    for j in 0..n {
        for l in 0..n {
            out[(j, l)] = col[(j + n - l) % n];
        }
    }
    out
}

/// Momentum operator `P = −iħ·∂` as a spectral circulant (Nyquist zeroed).
pub fn p_matrix(grid: &LineGrid, hbar: f64) -> CMat {
    let nyquist = std::f64::consts::TAU * (grid.n / 2) as f64 / grid.extent;
    circulant_from_freq(grid, |k| {
        if (k - nyquist).abs() < 1e-12 * nyquist.max(1.0) {
            Complex64::default()
        } else {
            Complex64::new(hbar * k, 0.0)
        }
    })
}

/// Position operator `Q`, diagonal.
pub fn q_matrix(grid: &LineGrid) -> CMat {
    let mut out = CMat::zeros(grid.n, grid.n);
    for j in 0..grid.n {
        out[(j, j)] = Complex64::new(grid.x(j), 0.0);
    }
    out
}

fn binom(n: usize, k: usize) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Weyl quantization: total symmetrization of each monomial, extended
/// linearly. Real symbols map to Hermitian matrices.
pub fn weyl_quantize(sym: &PhaseSymbol, hbar: f64, grid: &LineGrid) -> Result<LineOperator> {
    if hbar <= 0.0 {
        return Err(Error::Domain(format!("hbar = {hbar} must be positive")));
    }
    let n = grid.n;
    let p = p_matrix(grid, hbar);
    let max_p = sym.terms().map(|(m, _, _)| m).max().unwrap_or(0);
    let mut p_pow = Vec::with_capacity(max_p + 1);
    p_pow.push(CMat::identity(n, n));
    for m in 1..=max_p {
        let next = &p_pow[m - 1] * &p;
        p_pow.push(next);
    }

    let mut total = CMat::zeros(n, n);
    for (m, nq, coeff) in sym.terms() {
        // diag of Q^{nq}
        let qn: Vec<Complex64> = (0..n)
            .map(|j| Complex64::new(grid.x(j).powi(nq as i32), 0.0))
            .collect();
        let mut term = CMat::zeros(n, n);
        for r in 0..=m {
            // P^{m−r} · Q^{nq} · P^{r}
            let mut mid = p_pow[r].clone();
            for j in 0..n {
                for l in 0..n {
                    mid[(j, l)] *= qn[j];
                }
            }
            let prod = &p_pow[m - r] * &mid;
            term += prod * Complex64::new(binom(m, r), 0.0);
        }
        total += term * (coeff * 0.5f64.powi(m as i32));
    }
    Ok(LineOperator {
        matrix: total,
        grid: *grid,
        hbar,
    })
}

/// Weyl displacement `σħ(0, x, y)` as a matrix:
/// `f(t) ↦ e^{iħxy} e^{−i√(2ħ)yt} f(t − √(2ħ)x)` with a band-limited shift.
pub fn weyl_displacement(grid: &LineGrid, hbar: f64, x: f64, y: f64) -> CMat {
    let root = (2.0 * hbar).sqrt();
    let shift = circulant_from_freq(grid, |k| Complex64::from_polar(1.0, -k * root * x));
    let mut out = shift;
    let phase0 = hbar * x * y;
    for j in 0..grid.n {
        let row_phase = Complex64::from_polar(1.0, phase0 - root * y * grid.x(j));
        for l in 0..grid.n {
            out[(j, l)] *= row_phase;
        }
    }
    out
}

/// Normalized Hermite function `ψ_k` of the `ħ`-oscillator `P² + Q²`.
pub fn hermite_state(grid: &LineGrid, hbar: f64, k: usize) -> DVector<Complex64> {
    let norm = (std::f64::consts::PI * hbar).powf(-0.25)
        / (2f64.powi(k as i32) * (1..=k).map(|i| i as f64).product::<f64>()).sqrt();
    DVector::from_iterator(
        grid.n,
        (0..grid.n).map(|j| {
            let u = grid.x(j) / hbar.sqrt();
            let mut h0 = 1.0;
            let mut h1 = 2.0 * u;
            let h = if k == 0 {
                h0
            } else {
                for i in 1..k {
                    let h2 = 2.0 * u * h1 - 2.0 * i as f64 * h0;
                    h0 = h1;
                    h1 = h2;
                }
                h1
            };
            Complex64::new(norm * h * (-0.5 * u * u).exp(), 0.0)
        }),
    )
}

/// Relative action defect of two operators on the low Hermite states:
/// `max_k ‖(A − B)ψ_k‖ / ‖Bψ_k‖`.
///
/// Full-matrix norms would be polluted by grid-edge modes outside the
/// domain where the spectral calculus is valid, so defects are measured on
/// the decaying band-limited family the calculus is built for.
pub fn action_defect(a: &CMat, b: &CMat, grid: &LineGrid, hbar: f64, states: usize) -> f64 {
    let mut worst = 0.0f64;
    for k in 0..states {
        let psi = hermite_state(grid, hbar, k);
        let num = ((a - b) * &psi).norm();
        let den = (b * &psi).norm().max(1e-30);
        worst = worst.max(num / den);
    }
    worst
}

/// Dirac-rule defects for the pair `(f1, f2)`:
/// product `‖W(f1f2) − ½(W1W2 + W2W1)‖` and bracket
/// `‖W({f1,f2}) − (1/iħ)[W1, W2]‖`, both relative on the Hermite family.
pub fn dirac_rule_defect(
    f1: &PhaseSymbol,
    f2: &PhaseSymbol,
    hbar: f64,
    grid: &LineGrid,
) -> Result<(f64, f64)> {
    let w1 = weyl_quantize(f1, hbar, grid)?.matrix;
    let w2 = weyl_quantize(f2, hbar, grid)?.matrix;

    let product = weyl_quantize(&f1.mul(f2), hbar, grid)?.matrix;
    let jordan = (&w1 * &w2 + &w2 * &w1) * Complex64::new(0.5, 0.0);
    let product_defect = action_defect(&product, &jordan, grid, hbar, 4);

    let bracket = weyl_quantize(&f1.poisson(f2), hbar, grid)?.matrix;
    let commutator = (&w1 * &w2 - &w2 * &w1) / Complex64::new(0.0, hbar);
    let bracket_defect = action_defect(&bracket, &commutator, grid, hbar, 4);

    Ok((product_defect, bracket_defect))
}

//! Representation images of Heisenberg-box observables.
//!
//! A sampled observable `k(s, x, y)` maps to an operator under the
//! Schrödinger representation, `∭ k·σħ(s,x,y) ds dx dy`, and to a number
//! under the one-dimensional characters, `∭ k·e^{i(xp+yq)}`. Both images
//! turn convolution into composition (operator product, pointwise product),
//! and both turn the p-mechanical bracket into the matching mechanical
//! bracket up to a documented constant fixed by the `e^{2isħ}` phase
//! convention of the representation.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::CMat;

use super::hfn::{pmech_bracket, HFn};
use super::weyl::{action_defect, LineGrid, LineOperator};

/// `σħ(⟦k₁,k₂⟧) = c·(1/iħ)[σħ(k₁), σħ(k₂)]` with this `c`.
///
/// With the central character `e^{2isħ}` the antiderivative contributes
/// `−1/(2iħ)` per commutator instead of the clean `1/iħ`, hence `−1/2`.
pub const SCHRODINGER_BRACKET_CONSTANT: f64 = -0.5;

/// `ρ_{(p,q)}(⟦k₁,k₂⟧) = c·(∂_q k̂₁ ∂_p k̂₂ − ∂_p k̂₁ ∂_q k̂₂)` with this `c`.
///
/// Equivalently the image is `∂_p k̂₁ ∂_q k̂₂ − ∂_q k̂₁ ∂_p k̂₂`; the sign is
/// fixed by the character orientation `e^{i(xp+yq)}` together with the
/// group law, and is measured by the tests rather than assumed.
pub const ONEDIM_BRACKET_CONSTANT: f64 = -1.0;

/// One-dimensional representation image `∭ k·e^{i(xp+yq)} ds dx dy`.
pub fn rep_image_onedim(k: &HFn, p: f64, q: f64) -> Complex64 {
    let sh = &k.shape;
    let phase_x: Vec<Complex64> = (0..sh.n_x)
        .map(|ix| Complex64::from_polar(1.0, sh.x(ix) * p))
        .collect();
    let phase_y: Vec<Complex64> = (0..sh.n_y)
        .map(|iy| Complex64::from_polar(1.0, sh.y(iy) * q))
        .collect();
    let mut acc = Complex64::default();
    for is in 0..sh.n_s {
        for ix in 0..sh.n_x {
            let mut row = Complex64::default();
            for iy in 0..sh.n_y {
                row += k.at(is, ix, iy) * phase_y[iy];
            }
            acc += row * phase_x[ix];
        }
    }
    acc * sh.volume_element()
}

/// Schrödinger representation image `∭ k·σħ(s,x,y) ds dx dy` as a dense
/// operator on the line grid.
///
/// The `s`-integration produces `K(x,y) = ∫ k e^{2isħ} ds`; each remaining
/// `(x, y)` node contributes the Weyl displacement
/// `e^{iħxy}·e^{−i√(2ħ)y t}·(shift by √(2ħ)x)`, accumulated as a
/// position-diagonal phase times a frequency-diagonal circulant.
pub fn rep_image_schrodinger(k: &HFn, hbar: f64, grid: &LineGrid) -> Result<LineOperator> {
    if hbar <= 0.0 {
        return Err(Error::Domain(format!("hbar = {hbar} must be positive")));
    }
    let sh = &k.shape;
    let root = (2.0 * hbar).sqrt();
    if root * sh.lx > 0.5 * grid.extent {
        return Err(Error::Domain(format!(
            "shift range √(2ħ)·L_x = {} exceeds half the operator grid extent",
            root * sh.lx
        )));
    }
    // s-integration against the central character
    let mut weights = vec![Complex64::default(); sh.n_x * sh.n_y];
    for is in 0..sh.n_s {
        let phase = Complex64::from_polar(sh.hs(), 2.0 * sh.s(is) * hbar);
        for ix in 0..sh.n_x {
            for iy in 0..sh.n_y {
                weights[ix * sh.n_y + iy] += k.at(is, ix, iy) * phase;
            }
        }
    }

    let n = grid.n;
    let area = sh.hx() * sh.hy();
    let mut op = CMat::zeros(n, n);
    let mut bins = vec![Complex64::default(); n];
    let mut col = vec![Complex64::default(); n];
    for iy_box in 0..sh.n_y {
        let v = sh.y(iy_box);
        // frequency multiplier of Σ_u c(u,v)·(shift by √(2ħ)u)
        for (kbin, b) in bins.iter_mut().enumerate() {
            let freq = grid.freq(kbin);
            let mut acc = Complex64::default();
            for ix_box in 0..sh.n_x {
                let u = sh.x(ix_box);
                let c =
                    weights[ix_box * sh.n_y + iy_box] * Complex64::from_polar(area, hbar * u * v);
                acc += c * Complex64::from_polar(1.0, -freq * root * u);
            }
            *b = acc;
        }
        // first circulant column, then scatter with the row phase
        for (d, cv) in col.iter_mut().enumerate() {
            let mut acc = Complex64::default();
            for (kbin, b) in bins.iter().enumerate() {
                acc += b * Complex64::from_polar(
                    1.0,
                    std::f64::consts::TAU * ((kbin * d) % n) as f64 / n as f64,
                );
            }
            *cv = acc / n as f64;
        }
        for j in 0..n {
            let row_phase = Complex64::from_polar(1.0, -root * v * grid.x(j));
            for l in 0..n {
                op[(j, l)] += row_phase * col[(j + n - l) % n];
            }
        }
    }
    Ok(LineOperator {
        matrix: op,
        grid: *grid,
        hbar,
    })
}

/// Relative defect of the bracket identity under the Schrödinger image,
/// `σħ(⟦k₁,k₂⟧)` against `c·(1/iħ)[σħ(k₁), σħ(k₂)]`, measured on the low
/// Hermite family.
pub fn bracket_repr_defect_schrodinger(
    k1: &HFn,
    k2: &HFn,
    hbar: f64,
    grid: &LineGrid,
) -> Result<f64> {
    let bracket = pmech_bracket(k1, k2)?;
    let lhs = rep_image_schrodinger(&bracket, hbar, grid)?.matrix;
    let op1 = rep_image_schrodinger(k1, hbar, grid)?.matrix;
    let op2 = rep_image_schrodinger(k2, hbar, grid)?.matrix;
    let rhs = (&op1 * &op2 - &op2 * &op1)
        * (Complex64::new(SCHRODINGER_BRACKET_CONSTANT, 0.0) / Complex64::new(0.0, hbar));
    Ok(action_defect(&lhs, &rhs, grid, hbar, 3))
}

/// Relative defect of the bracket identity under the one-dimensional
/// characters on a `probes × probes` grid of `(p, q) ∈ [−r, r]²`.
///
/// The right side is `c·{k̂₁, k̂₂}` with the Poisson bracket taken by
/// centered differences whose step is tied to the box resolution, so the
/// defect contracts at second order under grid refinement.
pub fn bracket_repr_defect_onedim(k1: &HFn, k2: &HFn, r: f64, probes: usize) -> Result<f64> {
    if probes < 2 {
        return Err(Error::Domain("need at least a 2×2 probe grid".into()));
    }
    let bracket = pmech_bracket(k1, k2)?;
    let h = 0.5 * k1.shape.hx();
    let mut worst_abs = 0.0f64;
    let mut scale = 0.0f64;
    for i in 0..probes {
        for j in 0..probes {
            let p = -r + 2.0 * r * i as f64 / (probes - 1) as f64;
            let q = -r + 2.0 * r * j as f64 / (probes - 1) as f64;
            let lhs = rep_image_onedim(&bracket, p, q);
            let d1p = (rep_image_onedim(k1, p + h, q) - rep_image_onedim(k1, p - h, q)) / (2.0 * h);
            let d1q = (rep_image_onedim(k1, p, q + h) - rep_image_onedim(k1, p, q - h)) / (2.0 * h);
            let d2p = (rep_image_onedim(k2, p + h, q) - rep_image_onedim(k2, p - h, q)) / (2.0 * h);
            let d2q = (rep_image_onedim(k2, p, q + h) - rep_image_onedim(k2, p, q - h)) / (2.0 * h);
            let poisson = d1q * d2p - d1p * d2q;
            let rhs = poisson * ONEDIM_BRACKET_CONSTANT;
            worst_abs = worst_abs.max((lhs - rhs).norm());
            scale = scale.max(rhs.norm());
        }
    }
    Ok(worst_abs / scale.max(1e-300))
}

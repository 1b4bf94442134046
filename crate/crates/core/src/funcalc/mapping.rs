//! Spectral mapping for jet spectra, literal formula and Jordan oracle.
//!
//! A holomorphic `φ` sends the pair `(λ, k)` to pairs at `φ(λ)`; with
//! `d = deg_λ φ` the literal formula reports the single pair
//! `(φ(λ), ⌊k/d⌋)` while the Jordan arithmetic of `φ(J_k(λ))` splits the
//! block into `k mod d` blocks of size `⌈k/d⌉` and `d − (k mod d)` of size
//! `⌊k/d⌋`. The two agree exactly when `d` divides `k` (and always on the
//! set level); both are provided and their disagreement is reported by the
//! callers, never hidden.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::funcalc::holo::HoloMap;
use crate::funcalc::spectrum::JetSpectrum;

const DEGREE_TOL: f64 = 1e-9;

fn checked_image(phi: &HoloMap, lambda: Complex64) -> Result<Complex64> {
    let image = phi.eval(lambda);
    if image.norm() > 1.0 + 1e-12 {
        return Err(Error::Domain(format!(
            "|φ(λ)| = {} leaves the closed unit disk",
            image.norm()
        )));
    }
    Ok(image)
}

/// Literal mapping formula `(λ, k) ↦ (φ(λ), ⌊k/deg_λ φ⌋)`.
pub fn spectral_map_literal(phi: &HoloMap, pair: (Complex64, usize)) -> Result<(Complex64, usize)> {
    let (lambda, k) = pair;
    let image = checked_image(phi, lambda)?;
    let degree = phi.zero_degree(lambda, DEGREE_TOL)?;
    Ok((image, k / degree))
}

/// Jordan-true mapping: every pair splits by the combinatorial rule of
/// nilpotent powers, `(λ, k) ↦ {k mod d blocks of ⌈k/d⌉, d − (k mod d)
/// blocks of ⌊k/d⌋}` at `φ(λ)` with zero-size blocks dropped.
pub fn spectral_map_oracle(phi: &HoloMap, spec: &JetSpectrum) -> Result<JetSpectrum> {
    let mut pairs = Vec::new();
    for &(lambda, k) in &spec.pairs {
        let image = checked_image(phi, lambda)?;
        let d = phi.zero_degree(lambda, DEGREE_TOL)?;
        let (q, r) = (k / d, k % d);
        for _ in 0..r {
            pairs.push((image, q + 1));
        }
        if q > 0 {
            for _ in 0..d - r {
                pairs.push((image, q));
            }
        }
    }
    Ok(JetSpectrum::new(pairs))
}

/// Pairs on which the literal formula and the oracle agree as multisets:
/// exactly those with `deg_λ φ | k` (or `deg = 1`).
pub fn literal_agrees_with_oracle(phi: &HoloMap, pair: (Complex64, usize)) -> Result<bool> {
    let d = phi.zero_degree(pair.0, DEGREE_TOL)?;
    Ok(pair.1.is_multiple_of(d))
}

//! Dense complex linear algebra helpers on top of nalgebra.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMat = DMatrix<Complex64>;

/// Eigenvalues of a general complex matrix through the complex Schur form.
pub fn eigenvalues(m: &CMat) -> Result<Vec<Complex64>> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::Domain("eigenvalues need a square matrix".into()));
    }
    let schur = nalgebra::linalg::Schur::try_new(m.clone(), 1e-14, 0)
        .ok_or_else(|| Error::Domain("Schur iteration failed to converge".into()))?;
    let t = schur.unpack().1;
    Ok((0..n).map(|i| t[(i, i)]).collect())
}

/// Largest eigenvalue modulus.
pub fn spectral_radius(m: &CMat) -> Result<f64> {
    Ok(eigenvalues(m)?.iter().map(|l| l.norm()).fold(0.0, f64::max))
}

/// Numerical rank: singular values above `tol·σ_max`.
pub fn rank(m: &CMat, tol: f64) -> usize {
    let svd = m.clone().svd(false, false);
    let smax = svd.singular_values.iter().copied().fold(0.0, f64::max);
    if smax == 0.0 {
        return 0;
    }
    svd.singular_values
        .iter()
        .filter(|s| **s > tol * smax)
        .count()
}

/// Numerical rank against an absolute cutoff.
pub fn rank_abs(m: &CMat, cutoff: f64) -> usize {
    let svd = m.clone().svd(false, false);
    svd.singular_values.iter().filter(|s| **s > cutoff).count()
}

/// Largest singular value.
pub fn sigma_max(m: &CMat) -> f64 {
    let svd = m.clone().svd(false, false);
    svd.singular_values.iter().copied().fold(0.0, f64::max)
}

pub fn inverse(m: &CMat) -> Result<CMat> {
    m.clone()
        .try_inverse()
        .ok_or_else(|| Error::SpectralDomain("matrix is singular".into()))
}

/// Ascending eigenvalues of a Hermitian matrix.
pub fn hermitian_eigenvalues(m: &CMat) -> Vec<f64> {
    let mut ev: Vec<f64> = m
        .clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ev
}

pub fn max_abs_entry(m: &CMat) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Frobenius norm.
pub fn frobenius(m: &CMat) -> f64 {
    m.norm()
}

/// `k×k` Jordan block `J_k(λ)`.
pub fn jordan_block(lambda: Complex64, k: usize) -> CMat {
    let mut m = CMat::zeros(k, k);
    for i in 0..k {
        m[(i, i)] = lambda;
        if i + 1 < k {
            m[(i, i + 1)] = Complex64::new(1.0, 0.0);
        }
    }
    m
}

/// Direct sum of square blocks.
pub fn block_diag(blocks: &[CMat]) -> CMat {
    let n: usize = blocks.iter().map(|b| b.nrows()).sum();
    let mut m = CMat::zeros(n, n);
    let mut off = 0;
    for b in blocks {
        let k = b.nrows();
        m.view_mut((off, off), (k, k)).copy_from(b);
        off += k;
    }
    m
}

/// Horner evaluation of `Σ c_k M^k`.
pub fn matrix_polynomial(coeffs: &[Complex64], m: &CMat) -> CMat {
    let n = m.nrows();
    let mut acc = CMat::zeros(n, n);
    for c in coeffs.iter().rev() {
        acc = &acc * m;
        for i in 0..n {
            acc[(i, i)] += c;
        }
    }
    acc
}

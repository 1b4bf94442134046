//! Möbius action and induced representation on matrices.
//!
//! The disk geometry of `SU(1,1)` lifts verbatim to matrices with spectrum
//! inside the unit disk: the point `z` becomes a matrix `a`, the
//! fraction-linear map becomes a ratio of matrix polynomials, and the disk
//! representation becomes an action on `Cⁿ`-valued functions whose
//! multiplier is a resolvent. Restricted to the invariant subspace attached
//! to a Jordan block `J_k(λ)` that action is the `k`-jet prolongation of
//! the scalar one, which [`verify_jet_equivalence`] checks numerically.

use nalgebra::DVector;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::funcalc::holo::HoloMap;
use crate::groups::{mobius_disk, DiskPoint, SL2Elt};
use crate::linalg::{frobenius, inverse, jordan_block, CMat};

/// Matrix Möbius action `(ᾱa − βe)(αe − β̄a)⁻¹`.
///
/// Reduces to [`mobius_disk`] on scalar matrices `a = λI` and shares its
/// contravariant composition rule. Well defined whenever the spectrum of
/// `a` stays inside the unit disk.
pub fn mobius_matrix(g: &SL2Elt, a: &CMat) -> Result<CMat> {
    let n = a.nrows();
    let num = a * g.alpha().conj() - CMat::identity(n, n) * g.beta();
    let den = CMat::identity(n, n) * g.alpha() - a * g.beta().conj();
    let den_inv = inverse(&den)
        .map_err(|_| Error::SpectralDomain("Möbius denominator αe − β̄a is singular".into()))?;
    Ok(num * den_inv)
}

/// Resolvent `(ᾱe − β̄a)⁻¹` of the pair `(g, a)`.
pub fn matrix_resolvent(g: &SL2Elt, a: &CMat) -> Result<CMat> {
    let n = a.nrows();
    let den = CMat::identity(n, n) * g.alpha().conj() - a * g.beta().conj();
    inverse(&den).map_err(|_| Error::SpectralDomain("resolvent ᾱe − β̄a is singular".into()))
}

/// A `Cⁿ`-valued Taylor series `F(z) = Σ_k z^k c_k`.
#[derive(Debug, Clone)]
pub struct VectorSeries {
    pub coeffs: Vec<DVector<Complex64>>,
}

impl VectorSeries {
    pub fn new(coeffs: Vec<DVector<Complex64>>) -> Self {
        VectorSeries { coeffs }
    }

    pub fn eval(&self, z: Complex64) -> DVector<Complex64> {
        let dim = self.coeffs.first().map_or(0, |c| c.len());
        let mut acc = DVector::from_element(dim, Complex64::default());
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Evaluates with the scalar variable replaced by the matrix `w`:
    /// `Σ_k w^k c_k`.
    pub fn eval_matrix(&self, w: &CMat) -> DVector<Complex64> {
        let dim = self.coeffs.first().map_or(0, |c| c.len());
        let mut acc = DVector::from_element(dim, Complex64::default());
        for c in self.coeffs.iter().rev() {
            acc = w * acc + c;
        }
        acc
    }
}

/// Pointwise form of the representation attached to `a`:
/// `R(g, a)·F(g·z)` with the constant resolvent multiplier.
///
/// This is the literal display form. The multiplier alone is not
/// multiplicative in `g` — see [`resolvent_cocycle_partner`] for the exact
/// composition law it satisfies — so intertwining checks use
/// [`rho_a_rep`], where the resolvent is evaluated along `z·a`.
pub fn rho_a_act(
    g: &SL2Elt,
    f: &VectorSeries,
    a: &CMat,
    z: DiskPoint,
) -> Result<DVector<Complex64>> {
    let r = matrix_resolvent(g, a)?;
    let w = mobius_disk(g, z)?;
    Ok(r * f.eval(w.value()))
}

/// The matrix `ǎ` for which `R(g₁g₂, a) = R(g₂, a)·R(g₁, ǎ)` holds exactly.
pub fn resolvent_cocycle_partner(g2: &SL2Elt, a: &CMat) -> Result<CMat> {
    let flip = SL2Elt::new(g2.alpha().conj(), g2.beta())?;
    mobius_matrix(&flip, a)
}

/// Induced representation on `Cⁿ`-valued series, resolvent evaluated along
/// the moving matrix `z·a`:
///
/// `[ρ_a(m)F](z) = (ᾱ_m e + β̄_m z a)⁻¹ · F((α_m(za) + β_m e)(β̄_m(za) + ᾱ_m e)⁻¹)`
///
/// where `F` is read as a function of the matrix variable `za`. This is the
/// form that genuinely represents the group (contravariantly, matching the
/// other matrix-data operators) and that the contour calculus intertwines.
pub fn rho_a_rep(
    m: &SL2Elt,
    f: &VectorSeries,
    a: &CMat,
    z: Complex64,
) -> Result<DVector<Complex64>> {
    let n = a.nrows();
    let za = a * z;
    let den = CMat::identity(n, n) * m.alpha().conj() + &za * m.beta().conj();
    let den_inv = inverse(&den)
        .map_err(|_| Error::SpectralDomain("induced-action denominator is singular".into()))?;
    let moved = (&za * m.alpha() + CMat::identity(n, n) * m.beta()) * &den_inv;
    Ok(den_inv * f.eval_matrix(&moved))
}

/// Scalar multiplier of [`rho_a_rep`], `w ↦ (ᾱ_m + β̄_m w)⁻¹`.
fn scalar_multiplier(m: &SL2Elt) -> HoloMap {
    HoloMap::rational(
        vec![Complex64::new(1.0, 0.0)],
        vec![m.alpha().conj(), m.beta().conj()],
    )
    .expect("|ᾱ| > |β̄| keeps the denominator off the closed disk")
}

/// Scalar point map of [`rho_a_rep`], `w ↦ (α_m w + β_m)/(β̄_m w + ᾱ_m)`.
fn scalar_point_map(m: &SL2Elt) -> HoloMap {
    HoloMap::rational(
        vec![m.beta(), m.alpha()],
        vec![m.alpha().conj(), m.beta().conj()],
    )
    .expect("|ᾱ| > |β̄| keeps the denominator off the closed disk")
}

/// Truncated product of Taylor-coefficient vectors.
fn series_mul(a: &[Complex64], b: &[Complex64], len: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::default(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        for (j, bj) in b.iter().enumerate().take(len - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Composition `Σ_i g_i·T^i` for a series `T` with vanishing constant term.
fn series_compose(g: &[Complex64], t: &[Complex64], len: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::default(); len];
    let mut power = vec![Complex64::default(); len];
    power[0] = Complex64::new(1.0, 0.0);
    for gi in g.iter().take(len) {
        for (o, p) in out.iter_mut().zip(&power) {
            *o += gi * p;
        }
        power = series_mul(&power, t, len);
    }
    out
}

/// Jet-equivalence defect for the block `a = J_k(λ)`.
///
/// The induced action [`rho_a_rep`] is applied to the polynomial sections
/// `(w − μ)^j`, `j < k`, giving one `k×k` matrix; the `k`-jet prolongation
/// of the scalar multiplier and Möbius map (their exact jets composed by
/// series arithmetic) gives another after the coefficient-to-chain change
/// of basis. The relative Frobenius distance of the two is returned,
/// maximized over a fixed probe set of disk points.
pub fn verify_jet_equivalence(m: &SL2Elt, lambda: Complex64, k: usize, _tol: f64) -> Result<f64> {
    if lambda.norm() >= 1.0 {
        return Err(Error::Domain(format!(
            "|λ| = {} must be < 1",
            lambda.norm()
        )));
    }
    if k == 0 {
        return Err(Error::Domain("jet length k must be positive".into()));
    }
    let a = jordan_block(lambda, k);
    let probes = [
        Complex64::new(0.3, 0.1),
        Complex64::new(-0.45, 0.25),
        Complex64::new(0.15, -0.55),
    ];
    let multiplier = scalar_multiplier(m);
    let point_map = scalar_point_map(m);

    let mut worst = 0.0f64;
    for &z in &probes {
        let w0 = lambda * z;
        let mu = point_map.eval(w0);

        // matrix route: columns R(za)·(w̃ − μe)^j·x on the top root vector
        let za = &a * z;
        let den = CMat::identity(k, k) * m.alpha().conj() + &za * m.beta().conj();
        let den_inv = inverse(&den)?;
        let moved = (&za * m.alpha() + CMat::identity(k, k) * m.beta()) * &den_inv;
        let shifted = &moved - CMat::identity(k, k) * mu;
        let mut x = DVector::from_element(k, Complex64::default());
        x[k - 1] = Complex64::new(1.0, 0.0);
        let mut matrix_side = CMat::zeros(k, k);
        let mut power_x = x.clone();
        for j in 0..k {
            let col = &den_inv * &power_x;
            matrix_side.set_column(j, &col);
            power_x = &shifted * power_x;
        }

        // jet route: Taylor coefficients of multiplier·(G_j ∘ φ) at w0,
        // then the chain twist v[k−1−i] = z^i·t_i
        let mult_jet = multiplier.jet(k - 1, w0)?;
        let phi_jet = point_map.jet(k - 1, w0)?;
        let mut fact = 1.0;
        let mut mult_coeffs = vec![Complex64::default(); k];
        let mut phi_coeffs = vec![Complex64::default(); k];
        for i in 0..k {
            if i > 0 {
                fact *= i as f64;
            }
            mult_coeffs[i] = mult_jet[i] / fact;
            phi_coeffs[i] = phi_jet[i] / fact;
        }
        phi_coeffs[0] = Complex64::default(); // compose against φ − μ

        let mut jet_side = CMat::zeros(k, k);
        for j in 0..k {
            let mut g = vec![Complex64::default(); k];
            g[j] = Complex64::new(1.0, 0.0);
            let composed = series_compose(&g, &phi_coeffs, k);
            let total = series_mul(&mult_coeffs, &composed, k);
            for (i, t) in total.iter().enumerate() {
                jet_side[(k - 1 - i, j)] = t * z.powu(i as u32);
            }
        }

        let defect = frobenius(&(&matrix_side - &jet_side)) / frobenius(&matrix_side);
        worst = worst.max(defect);
    }
    Ok(worst)
}

//! Sampled functions on a box in the Heisenberg group and their
//! convolution algebra.
//!
//! The group convolution `(k₁∗k₂)(g) = ∫ k₁(h)k₂(h⁻¹g) dh` is computed
//! slice by slice in the central frequency `τ`: the Fourier transform
//! along `s` turns the central shift `½(vx − uy)` into the phase
//! `e^{iτ(vx−uy)/2}`, leaving one twisted planar convolution per slice.
//! That handles the noncommutative part of the law exactly and costs
//! `O(n_s·(n_x n_y)²)` instead of the naive sixfold sum.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::{fft_forward, fft_inverse, signed_freq};

/// Box geometry `[−L_s, L_s] × [−L_x, L_x] × [−L_y, L_y]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HBox {
    pub ls: f64,
    pub lx: f64,
    pub ly: f64,
    pub n_s: usize,
    pub n_x: usize,
    pub n_y: usize,
}

impl HBox {
    pub fn new(ls: f64, lx: f64, ly: f64, n_s: usize, n_x: usize, n_y: usize) -> Result<Self> {
        if ls <= 0.0 || lx <= 0.0 || ly <= 0.0 {
            return Err(Error::Domain("box half-extents must be positive".into()));
        }
        if n_s < 8 || n_x < 8 || n_y < 8 {
            return Err(Error::Domain("box needs at least 8 nodes per axis".into()));
        }
        if !n_x.is_multiple_of(2) || !n_y.is_multiple_of(2) {
            // x − u must land on the grid again: lx/hx = n_x/2 integral
            return Err(Error::Domain("planar node counts must be even".into()));
        }
        Ok(HBox {
            ls,
            lx,
            ly,
            n_s,
            n_x,
            n_y,
        })
    }

    /// Cubical box with `n` nodes per axis.
    pub fn cube(half_extent: f64, n: usize) -> Result<Self> {
        HBox::new(half_extent, half_extent, half_extent, n, n, n)
    }

    pub fn hs(&self) -> f64 {
        2.0 * self.ls / self.n_s as f64
    }

    pub fn hx(&self) -> f64 {
        2.0 * self.lx / self.n_x as f64
    }

    pub fn hy(&self) -> f64 {
        2.0 * self.ly / self.n_y as f64
    }

    pub fn s(&self, i: usize) -> f64 {
        -self.ls + i as f64 * self.hs()
    }

    pub fn x(&self, i: usize) -> f64 {
        -self.lx + i as f64 * self.hx()
    }

    pub fn y(&self, i: usize) -> f64 {
        -self.ly + i as f64 * self.hy()
    }

    pub fn volume_element(&self) -> f64 {
        self.hs() * self.hx() * self.hy()
    }

    fn len(&self) -> usize {
        self.n_s * self.n_x * self.n_y
    }
}

/// Complex samples over an [`HBox`], index `(i_s·n_x + i_x)·n_y + i_y`.
#[derive(Debug, Clone)]
pub struct HFn {
    pub shape: HBox,
    pub samples: Vec<Complex64>,
}

impl HFn {
    /// Samples `f` and enforces decay below `1e−12` of the peak at the box
    /// boundary, which every integral identity here relies on.
    pub fn from_fn(shape: HBox, f: impl Fn(f64, f64, f64) -> Complex64) -> Result<Self> {
        let mut samples = Vec::with_capacity(shape.len());
        for is in 0..shape.n_s {
            for ix in 0..shape.n_x {
                for iy in 0..shape.n_y {
                    samples.push(f(shape.s(is), shape.x(ix), shape.y(iy)));
                }
            }
        }
        let out = HFn { shape, samples };
        let peak = out.max_abs();
        if peak > 0.0 && out.boundary_max() > 1e-12 * peak {
            return Err(Error::Domain(format!(
                "samples decay only to {:.3e} of the peak at the box boundary",
                out.boundary_max() / peak
            )));
        }
        Ok(out)
    }

    pub fn at(&self, is: usize, ix: usize, iy: usize) -> Complex64 {
        self.samples[(is * self.shape.n_x + ix) * self.shape.n_y + iy]
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &HFn) -> f64 {
        self.samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest magnitude on the six boundary faces.
    pub fn boundary_max(&self) -> f64 {
        let sh = &self.shape;
        let mut worst = 0.0f64;
        for is in 0..sh.n_s {
            for ix in 0..sh.n_x {
                for iy in 0..sh.n_y {
                    let edge = is == 0
                        || is == sh.n_s - 1
                        || ix == 0
                        || ix == sh.n_x - 1
                        || iy == 0
                        || iy == sh.n_y - 1;
                    if edge {
                        worst = worst.max(self.at(is, ix, iy).norm());
                    }
                }
            }
        }
        worst
    }

    /// Trapezoid total integral (rectangle rule; the data decays at edges).
    pub fn integral(&self) -> Complex64 {
        self.samples.iter().sum::<Complex64>() * self.shape.volume_element()
    }

    pub fn scale(&self, c: Complex64) -> HFn {
        HFn {
            shape: self.shape,
            samples: self.samples.iter().map(|v| v * c).collect(),
        }
    }

    pub fn sub(&self, other: &HFn) -> HFn {
        HFn {
            shape: self.shape,
            samples: self
                .samples
                .iter()
                .zip(&other.samples)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Forward transform along `s`: `K(τ_m, x, y) = ∫ k e^{−iτ_m s} ds`.
    fn s_fourier(&self) -> Vec<Complex64> {
        let sh = &self.shape;
        let plane = sh.n_x * sh.n_y;
        let mut out = vec![Complex64::default(); sh.len()];
        for ix in 0..sh.n_x {
            for iy in 0..sh.n_y {
                let mut buf: Vec<Complex64> = (0..sh.n_s).map(|is| self.at(is, ix, iy)).collect();
                fft_forward(&mut buf);
                for (m, v) in buf.iter().enumerate() {
                    let tau = self.tau(m);
                    out[m * plane + ix * sh.n_y + iy] =
                        v * sh.hs() * Complex64::from_polar(1.0, tau * sh.ls);
                }
            }
        }
        out
    }

    /// Central frequency of slice `m`.
    fn tau(&self, m: usize) -> f64 {
        std::f64::consts::TAU * signed_freq(m, self.shape.n_s) as f64
            / (self.shape.n_s as f64 * self.shape.hs())
    }

    fn from_s_fourier(shape: HBox, freq: Vec<Complex64>) -> HFn {
        let plane = shape.n_x * shape.n_y;
        let mut samples = vec![Complex64::default(); shape.len()];
        let probe = HFn {
            shape,
            samples: Vec::new(),
        };
        for ix in 0..shape.n_x {
            for iy in 0..shape.n_y {
                let mut buf: Vec<Complex64> = (0..shape.n_s)
                    .map(|m| {
                        freq[m * plane + ix * shape.n_y + iy]
                            * Complex64::from_polar(1.0, -probe.tau(m) * shape.ls)
                    })
                    .collect();
                fft_inverse(&mut buf);
                for (is, v) in buf.iter().enumerate() {
                    samples[(is * shape.n_x + ix) * shape.n_y + iy] = v / shape.hs();
                }
            }
        }
        HFn { shape, samples }
    }
}

/// Group convolution `(k₁∗k₂)(g) = ∫ k₁(h) k₂(h⁻¹g) dh` on a common box.
///
/// Fails when the boxes differ or when the result no longer decays at the
/// box boundary (support overflow).
pub fn heis_convolve(k1: &HFn, k2: &HFn) -> Result<HFn> {
    let sh = k1.shape;
    if k2.shape != sh {
        return Err(Error::BoxSize(
            "convolution factors must share one box".into(),
        ));
    }
    let f1 = k1.s_fourier();
    let f2 = k2.s_fourier();
    let plane = sh.n_x * sh.n_y;
    let (nx, ny) = (sh.n_x, sh.n_y);
    let probe = HFn {
        shape: sh,
        samples: Vec::new(),
    };

    let slices: Vec<Vec<Complex64>> = (0..sh.n_s)
        .into_par_iter()
        .map(|m| {
            let tau = probe.tau(m);
            let a = &f1[m * plane..(m + 1) * plane];
            let b = &f2[m * plane..(m + 1) * plane];
            let peak = a.iter().map(|c| c.norm()).fold(0.0, f64::max);
            let mut out = vec![Complex64::default(); plane];
            // phase tables for e^{iτ(v·x − u·y)/2}
            let px: Vec<Vec<Complex64>> = (0..ny)
                .map(|iv| {
                    let v = sh.y(iv);
                    (0..nx)
                        .map(|ix| Complex64::from_polar(1.0, 0.5 * tau * v * sh.x(ix)))
                        .collect()
                })
                .collect();
            let py: Vec<Vec<Complex64>> = (0..nx)
                .map(|iu| {
                    let u = sh.x(iu);
                    (0..ny)
                        .map(|iy| Complex64::from_polar(1.0, -0.5 * tau * u * sh.y(iy)))
                        .collect()
                })
                .collect();
            for iu in 0..nx {
                for iv in 0..ny {
                    let k1v = a[iu * ny + iv];
                    if k1v.norm() <= 1e-16 * peak {
                        continue;
                    }
                    let row_u = &py[iu];
                    let col_v = &px[iv];
                    // output x index runs over ix with jx = ix − iu + nx/2
                    let ix_lo = iu.saturating_sub(nx / 2);
                    let ix_hi = (iu + nx - nx / 2).min(nx);
                    for ix in ix_lo..ix_hi {
                        let jx = ix + nx / 2 - iu;
                        let pa = k1v * col_v[ix];
                        let iy_lo = iv.saturating_sub(ny / 2);
                        let iy_hi = (iv + ny - ny / 2).min(ny);
                        let out_row = &mut out[ix * ny..(ix + 1) * ny];
                        let b_row = &b[jx * ny..(jx + 1) * ny];
                        for iy in iy_lo..iy_hi {
                            let jy = iy + ny / 2 - iv;
                            out_row[iy] += pa * row_u[iy] * b_row[jy];
                        }
                    }
                }
            }
            let weight = sh.hx() * sh.hy();
            for v in out.iter_mut() {
                *v *= weight;
            }
            out
        })
        .collect();

    let mut freq = vec![Complex64::default(); sh.len()];
    for (m, slice) in slices.into_iter().enumerate() {
        freq[m * plane..(m + 1) * plane].copy_from_slice(&slice);
    }
    let out = HFn::from_s_fourier(sh, freq);
    let peak = out.max_abs();
    if peak > 0.0 && out.boundary_max() > 1e-6 * peak {
        return Err(Error::BoxSize(format!(
            "convolution support overflows the box (boundary magnitude {:.3e} of peak)",
            out.boundary_max() / peak
        )));
    }
    Ok(out)
}

/// Antiderivative along `s` from the left box edge.
///
/// The data must integrate to zero in `s` for every `(x, y)` — otherwise
/// the primitive cannot be supported in the box — which holds for
/// commutators by construction.
pub fn antiderivative_s(k: &HFn) -> Result<HFn> {
    let sh = k.shape;
    let scale = k.max_abs() * 2.0 * sh.ls;
    for ix in 0..sh.n_x {
        for iy in 0..sh.n_y {
            let total: Complex64 = (0..sh.n_s).map(|is| k.at(is, ix, iy)).sum();
            if (total * sh.hs()).norm() > 1e-8 * scale.max(1e-300) {
                return Err(Error::Precondition(format!(
                    "s-integral {:.3e} at grid point ({ix}, {iy}) is not zero",
                    (total * sh.hs()).norm()
                )));
            }
        }
    }
    let mut samples = vec![Complex64::default(); sh.len()];
    for ix in 0..sh.n_x {
        for iy in 0..sh.n_y {
            let mut acc = Complex64::default();
            for is in 1..sh.n_s {
                acc += (k.at(is - 1, ix, iy) + k.at(is, ix, iy)) * (0.5 * sh.hs());
                samples[(is * sh.n_x + ix) * sh.n_y + iy] = acc;
            }
        }
    }
    Ok(HFn { shape: sh, samples })
}

/// p-mechanical bracket `⟦k₁, k₂⟧ = A(k₁∗k₂ − k₂∗k₁)`.
pub fn pmech_bracket(k1: &HFn, k2: &HFn) -> Result<HFn> {
    let forward = heis_convolve(k1, k2)?;
    let backward = heis_convolve(k2, k1)?;
    antiderivative_s(&forward.sub(&backward))
}

/// Gaussian-windowed polynomial observable, the desk-scale stand-in for
/// the distributional observables of the continuum theory.
pub fn gaussian_observable(
    shape: HBox,
    width: f64,
    poly: impl Fn(f64, f64, f64) -> Complex64,
) -> Result<HFn> {
    HFn::from_fn(shape, |s, x, y| {
        poly(s, x, y) * (-(s * s + x * x + y * y) / (2.0 * width * width)).exp()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_box() -> HBox {
        HBox::cube(6.0, 32).unwrap()
    }

    fn gaussian(shape: HBox, w: f64) -> HFn {
        gaussian_observable(shape, w, |_, _, _| Complex64::new(1.0, 0.0)).unwrap()
    }

    #[test]
    fn construction_rejects_non_decaying_samples() {
        let shape = small_box();
        assert!(HFn::from_fn(shape, |_, _, _| Complex64::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn total_integral_is_multiplicative() {
        let shape = small_box();
        let k1 = gaussian_observable(shape, 0.6, |s, x, _| Complex64::new(1.0 + 0.3 * s * x, 0.0))
            .unwrap();
        let k2 = gaussian_observable(shape, 0.55, |_, x, y| Complex64::new(x, 0.2 * y)).unwrap();
        let conv = heis_convolve(&k1, &k2).unwrap();
        let lhs = conv.integral();
        let rhs = k1.integral() * k2.integral();
        assert!(
            (lhs - rhs).norm() <= 1e-6 * rhs.norm().max(1.0),
            "{lhs} vs {rhs}"
        );
    }

    #[test]
    fn narrow_gaussian_is_an_approximate_identity() {
        let shape = small_box();
        let k1 = gaussian(shape, 0.7);
        let narrow = 0.1;
        let mut k2 = gaussian(shape, narrow);
        // normalize numerically to unit mass
        let mass = k2.integral();
        k2 = k2.scale(Complex64::new(1.0, 0.0) / mass);
        let conv = heis_convolve(&k1, &k2).unwrap();
        let defect = conv.max_abs_diff(&k1) / k1.max_abs();
        assert!(defect <= 0.02, "defect {defect}");
    }

    #[test]
    fn convolution_is_associative() {
        // the central coordinate needs headroom: the twist shifts s by up
        // to half the product of the planar extents
        let shape = HBox::new(12.0, 5.0, 5.0, 96, 24, 24).unwrap();
        let k1 = gaussian_observable(shape, 0.5, |s, _, _| Complex64::new(1.0, 0.4 * s)).unwrap();
        let k2 = gaussian_observable(shape, 0.45, |_, x, _| Complex64::new(x, 0.0)).unwrap();
        let k3 = gaussian_observable(shape, 0.4, |_, _, y| Complex64::new(0.7, y)).unwrap();
        let lhs = heis_convolve(&heis_convolve(&k1, &k2).unwrap(), &k3).unwrap();
        let rhs = heis_convolve(&k1, &heis_convolve(&k2, &k3).unwrap()).unwrap();
        let scale = lhs.max_abs();
        assert!(
            lhs.max_abs_diff(&rhs) <= 1e-5 * scale.max(1.0),
            "{}",
            lhs.max_abs_diff(&rhs)
        );
    }

    #[test]
    fn antiderivative_contracts() {
        // fine s-axis: the fundamental-theorem check differentiates in s
        let shape = HBox::new(6.0, 6.0, 6.0, 128, 16, 16).unwrap();
        // odd in s ⟹ zero s-integral and compactly supported primitive
        let k = gaussian_observable(shape, 0.7, |s, _, _| Complex64::new(s, 0.0)).unwrap();
        let prim = antiderivative_s(&k).unwrap();
        // edges vanish
        let sh = &shape;
        for ix in 0..sh.n_x {
            for iy in 0..sh.n_y {
                assert!(prim.at(0, ix, iy).norm() <= 1e-10);
                assert!(prim.at(sh.n_s - 1, ix, iy).norm() <= 1e-10 * k.max_abs());
            }
        }
        // ∂_s ∘ A = identity in the interior (centered differences)
        let mut worst = 0.0f64;
        for is in 1..sh.n_s - 1 {
            for ix in 0..sh.n_x {
                for iy in 0..sh.n_y {
                    let d = (prim.at(is + 1, ix, iy) - prim.at(is - 1, ix, iy))
                        / Complex64::new(2.0 * sh.hs(), 0.0);
                    worst = worst.max((d - k.at(is, ix, iy)).norm());
                }
            }
        }
        // centered differences are 2nd order; the check certifies the
        // fundamental-theorem contract, not spectral accuracy
        assert!(worst <= 5e-2 * k.max_abs(), "{worst}");

        // constant-in-s data violates the zero-integral precondition
        let bad = gaussian(shape, 0.7);
        assert!(matches!(
            antiderivative_s(&bad),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn bracket_is_antisymmetric_and_nonzero() {
        let shape = HBox::cube(6.0, 24).unwrap();
        let kx = gaussian_observable(shape, 0.6, |_, x, _| Complex64::new(x, 0.0)).unwrap();
        let ky = gaussian_observable(shape, 0.6, |_, _, y| Complex64::new(y, 0.0)).unwrap();
        let b12 = pmech_bracket(&kx, &ky).unwrap();
        let b21 = pmech_bracket(&ky, &kx).unwrap();
        assert_eq!(b12.max_abs_diff(&b21.scale(Complex64::new(-1.0, 0.0))), 0.0);
        assert!(
            b12.max_abs() > 1e-4,
            "bracket should not vanish: {}",
            b12.max_abs()
        );

        let self_bracket = pmech_bracket(&kx, &kx).unwrap();
        assert_eq!(self_bracket.max_abs(), 0.0);
    }
}

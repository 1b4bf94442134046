//! Holomorphic maps with exact jets.
//!
//! A [`HoloMap`] is a polynomial or a ratio of polynomials, the only
//! representations the calculus needs; both support evaluation and exact
//! derivatives to arbitrary order, which is all a jet is.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Polynomial evaluation and first `n+1` Taylor-at-`z` values via Horner.
fn poly_jet(coeffs: &[Complex64], n: usize, z: Complex64) -> Vec<Complex64> {
    // Repeated synthetic division: after k rounds the running remainders
    // are the Taylor coefficients f^{(k)}(z)/k!.
    let mut work = coeffs.to_vec();
    let mut taylor = vec![Complex64::default(); n + 1];
    for t in taylor.iter_mut().take((n + 1).min(coeffs.len().max(1))) {
        let mut rem = Complex64::default();
        for c in work.iter_mut().rev() {
            rem = rem * z + *c;
            *c = rem;
        }
        *t = rem;
        work.remove(0);
        if work.is_empty() {
            break;
        }
    }
    // convert Taylor coefficients to derivatives
    let mut fact = 1.0;
    for (k, t) in taylor.iter_mut().enumerate() {
        if k > 0 {
            fact *= k as f64;
        }
        *t *= fact;
    }
    taylor
}

/// A polynomial, or a ratio of two polynomials with nonvanishing
/// denominator on the closed unit disk.
#[derive(Debug, Clone)]
pub struct HoloMap {
    num: Vec<Complex64>,
    den: Option<Vec<Complex64>>,
}

impl HoloMap {
    pub fn polynomial(coeffs: Vec<Complex64>) -> Self {
        HoloMap {
            num: if coeffs.is_empty() {
                vec![Complex64::default()]
            } else {
                coeffs
            },
            den: None,
        }
    }

    pub fn constant(c: Complex64) -> Self {
        HoloMap::polynomial(vec![c])
    }

    /// `z ↦ z`.
    pub fn identity() -> Self {
        HoloMap::polynomial(vec![Complex64::default(), Complex64::new(1.0, 0.0)])
    }

    /// `z ↦ z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Complex64::default(); k + 1];
        coeffs[k] = Complex64::new(1.0, 0.0);
        HoloMap::polynomial(coeffs)
    }

    /// Ratio `p/q`; rejects denominators with zeros on the closed unit disk
    /// (argument-principle winding check on the boundary).
    pub fn rational(num: Vec<Complex64>, den: Vec<Complex64>) -> Result<Self> {
        let samples = 1024;
        let mut winding = 0.0;
        let mut prev_arg = 0.0;
        for j in 0..=samples {
            let t = Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / samples as f64);
            let q = poly_jet(&den, 0, t)[0];
            if q.norm() < 1e-12 {
                return Err(Error::Domain(
                    "denominator vanishes on the unit circle".into(),
                ));
            }
            let arg = q.arg();
            if j > 0 {
                let mut d = arg - prev_arg;
                while d > std::f64::consts::PI {
                    d -= std::f64::consts::TAU;
                }
                while d < -std::f64::consts::PI {
                    d += std::f64::consts::TAU;
                }
                winding += d;
            }
            prev_arg = arg;
        }
        if winding.abs() > std::f64::consts::PI {
            return Err(Error::Domain(
                "denominator has zeros inside the unit disk".into(),
            ));
        }
        Ok(HoloMap {
            num,
            den: Some(den),
        })
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.jet(0, z).map_or(Complex64::default(), |j| j[0])
    }

    /// The `n`-jet `(f(z), f'(z), …, f⁽ⁿ⁾(z))`, exact from the polynomial
    /// or rational representation. Fails on evaluation at a pole.
    pub fn jet(&self, n: usize, z: Complex64) -> Result<Vec<Complex64>> {
        let p = poly_jet(&self.num, n, z);
        match &self.den {
            None => Ok(p),
            Some(den) => {
                let q = poly_jet(den, n, z);
                if q[0].norm() < 1e-13 {
                    return Err(Error::Domain(format!("evaluation at a pole, |q({z})| ≈ 0")));
                }
                // Leibniz: p^{(j)} = Σ C(j,i) f^{(i)} q^{(j−i)} solved
                // triangularly for the derivatives of f = p/q.
                let mut f = vec![Complex64::default(); n + 1];
                for j in 0..=n {
                    let mut acc = p[j];
                    for i in 0..j {
                        acc -= binom(j, i) * f[i] * q[j - i];
                    }
                    f[j] = acc / q[0];
                }
                Ok(f)
            }
        }
    }

    /// Order of the zero of `f(z) − f(λ)` at `λ`: the first `j ≥ 1` with a
    /// nonvanishing `j`-th derivative.
    pub fn zero_degree(&self, lambda: Complex64, tol: f64) -> Result<usize> {
        let cap = self.num.len().max(self.den.as_ref().map_or(0, |d| d.len())) + 1;
        let jet = self.jet(cap, lambda)?;
        let scale = self.num.iter().map(|c| c.norm()).fold(1.0, f64::max);
        let mut fact = 1.0;
        for (j, v) in jet.iter().enumerate().skip(1) {
            fact *= j as f64;
            if v.norm() / fact > tol * scale {
                return Ok(j);
            }
        }
        Err(Error::Domain(format!(
            "map is constant near {lambda} at tolerance {tol}"
        )))
    }
}

pub(crate) fn binom(n: usize, k: usize) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// The jet of `f` at `z` as a plain vector; see [`HoloMap::jet`].
pub fn jet_prolong(f: &HoloMap, n: usize, z: Complex64) -> Result<Vec<Complex64>> {
    f.jet(n, z)
}

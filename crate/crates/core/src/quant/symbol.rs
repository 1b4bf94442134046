//! Polynomial phase-space symbols.
//!
//! Observables are finite linear combinations of the monomials `p^m q^n`;
//! products, Poisson brackets and symplectic substitutions stay inside the
//! class and are computed exactly, which is what makes the quantization
//! defects checkable against symbolic oracles.

use std::collections::BTreeMap;

use num_complex::Complex64;

/// Finitely supported coefficients of the monomials `p^m q^n`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PhaseSymbol {
    terms: BTreeMap<(usize, usize), Complex64>,
}

impl PhaseSymbol {
    pub fn zero() -> Self {
        PhaseSymbol::default()
    }

    /// The monomial `p^m q^n`.
    pub fn monomial(m: usize, n: usize) -> Self {
        let mut s = PhaseSymbol::default();
        s.add_term(m, n, Complex64::new(1.0, 0.0));
        s
    }

    pub fn p() -> Self {
        PhaseSymbol::monomial(1, 0)
    }

    pub fn q() -> Self {
        PhaseSymbol::monomial(0, 1)
    }

    pub fn add_term(&mut self, m: usize, n: usize, c: Complex64) {
        let entry = self.terms.entry((m, n)).or_default();
        *entry += c;
        if entry.norm() == 0.0 {
            self.terms.remove(&(m, n));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        self.terms.iter().map(|(&(m, n), &c)| (m, n, c))
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|(m, n)| m + n).max().unwrap_or(0)
    }

    pub fn is_real(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.im.abs() < 1e-14 * c.norm().max(1.0))
    }

    pub fn scale(&self, c: Complex64) -> PhaseSymbol {
        let mut out = PhaseSymbol::default();
        for (&k, &v) in &self.terms {
            out.terms.insert(k, v * c);
        }
        out
    }

    pub fn add(&self, other: &PhaseSymbol) -> PhaseSymbol {
        let mut out = self.clone();
        for (m, n, c) in other.terms() {
            out.add_term(m, n, c);
        }
        out
    }

    pub fn mul(&self, other: &PhaseSymbol) -> PhaseSymbol {
        let mut out = PhaseSymbol::default();
        for (m1, n1, c1) in self.terms() {
            for (m2, n2, c2) in other.terms() {
                out.add_term(m1 + m2, n1 + n2, c1 * c2);
            }
        }
        out
    }

    /// Partial derivatives `(∂f/∂p, ∂f/∂q)`.
    fn gradient(&self) -> (PhaseSymbol, PhaseSymbol) {
        let mut dp = PhaseSymbol::default();
        let mut dq = PhaseSymbol::default();
        for (m, n, c) in self.terms() {
            if m > 0 {
                dp.add_term(m - 1, n, c * m as f64);
            }
            if n > 0 {
                dq.add_term(m, n - 1, c * n as f64);
            }
        }
        (dp, dq)
    }

    /// Poisson bracket `{f, g} = ∂_q f ∂_p g − ∂_p f ∂_q g`
    /// (the orientation with `{p, q} = −1`).
    pub fn poisson(&self, other: &PhaseSymbol) -> PhaseSymbol {
        let (fp, fq) = self.gradient();
        let (gp, gq) = other.gradient();
        fq.mul(&gp)
            .add(&fp.mul(&gq).scale(Complex64::new(-1.0, 0.0)))
    }

    /// Substitution `(p, q) ↦ (ap + bq, cp + dq)`, exact binomial expansion.
    pub fn substitute_linear(&self, a: f64, b: f64, c: f64, d: f64) -> PhaseSymbol {
        let new_p = {
            let mut s = PhaseSymbol::default();
            s.add_term(1, 0, Complex64::new(a, 0.0));
            s.add_term(0, 1, Complex64::new(b, 0.0));
            s
        };
        let new_q = {
            let mut s = PhaseSymbol::default();
            s.add_term(1, 0, Complex64::new(c, 0.0));
            s.add_term(0, 1, Complex64::new(d, 0.0));
            s
        };
        let mut out = PhaseSymbol::default();
        for (m, n, coeff) in self.terms() {
            let mut term = PhaseSymbol::monomial(0, 0).scale(coeff);
            for _ in 0..m {
                term = term.mul(&new_p);
            }
            for _ in 0..n {
                term = term.mul(&new_q);
            }
            out = out.add(&term);
        }
        out
    }

    pub fn eval(&self, p: f64, q: f64) -> Complex64 {
        self.terms()
            .map(|(m, n, c)| c * p.powi(m as i32) * q.powi(n as i32))
            .sum()
    }

    pub fn max_coeff_diff(&self, other: &PhaseSymbol) -> f64 {
        let keys: std::collections::BTreeSet<_> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter()
            .map(|k| {
                let a = self.terms.get(k).copied().unwrap_or_default();
                let b = other.terms.get(k).copied().unwrap_or_default();
                (a - b).norm()
            })
            .fold(0.0, f64::max)
    }
}

//! Metaplectic operators for the symplectic generator families.
//!
//! For `g` in one of the families {rotation θ, scaling t, shear c} the
//! unitary `U(g)` is built so that conjugation realizes the symplectic
//! substitution on Weyl symbols:
//!
//! `U(g)·W(sym)·U(g)⁻¹ = W(sym ∘ τ(g)⁻¹)`,
//!
//! equivalently `U(g)P U(g)⁻¹ = dP − bQ` and `U(g)Q U(g)⁻¹ = −cP + aQ`.
//! On the Weyl displacements the same conjugation acts by the ħ-scaled
//! automorphism `(x, y) ↦ (dx − cħy, ay − bx/ħ)`, which at `ħ = 1`
//! coincides with the point automorphism of the inverse transpose (and for
//! rotations with the automorphism of `g` itself). Phases are fixed by
//! continuity from the identity inside each family; a general element must
//! be decomposed by the caller.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::CMat;

use super::symbol::PhaseSymbol;
use super::sympl::SympElt;
use super::weyl::{action_defect, p_matrix, q_matrix, weyl_quantize, LineGrid, LineOperator};

const FAMILY_EPS: f64 = 1e-12;

/// Harmonic generator `(P² + Q²)/(2ħ)` exponentiated: `exp(iθ·K)`.
fn rotation_unitary(theta: f64, hbar: f64, grid: &LineGrid) -> CMat {
    let p = p_matrix(grid, hbar);
    let q = q_matrix(grid);
    let k = (&p * &p + &q * &q) / Complex64::new(2.0 * hbar, 0.0);
    let eig = k.symmetric_eigen();
    let n = grid.n;
    let mut exp_diag = CMat::zeros(n, n);
    for j in 0..n {
        exp_diag[(j, j)] = Complex64::from_polar(1.0, theta * eig.eigenvalues[j]);
    }
    &eig.eigenvectors * exp_diag * eig.eigenvectors.adjoint()
}

/// Dilation `[U f](y) = √t·f(t·y)` through trigonometric interpolation.
///
/// Targets `t·y` outside the grid box are mapped to zero: the periodic
/// extension of the interpolant would wrap genuine mass back into the box
/// and destroy unitarity, while admissible (decaying) states vanish there
/// anyway.
fn scaling_unitary(t: f64, grid: &LineGrid) -> CMat {
    let n = grid.n;
    // coefficient analysis matrix F/n followed by evaluation at t·y_j
    let mut out = CMat::zeros(n, n);
    let root = t.sqrt();
    for j in 0..n {
        let y = t * grid.x(j);
        if y < grid.x(0) || y >= grid.x(0) + grid.extent {
            continue;
        }
        let target = (y - grid.x(0)) / grid.extent * std::f64::consts::TAU;
        for l in 0..n {
            let mut acc = Complex64::default();
            for k in 0..n {
                let freq = crate::grid::signed_freq(k, n) as f64;
                let basis = if 2 * k == n {
                    Complex64::new((freq * target).cos(), 0.0)
                } else {
                    Complex64::from_polar(1.0, freq * target)
                };
                let analysis = Complex64::from_polar(
                    1.0,
                    -std::f64::consts::TAU * (k * l % n) as f64 / n as f64,
                );
                acc += basis * analysis;
            }
            out[(j, l)] = acc * root / n as f64;
        }
    }
    out
}

/// Metaplectic operator for a generator-family element.
///
/// Returns a unitary defined up to a unit-modulus phase. Elements outside
/// the three families are rejected; decompose them first.
pub fn metaplectic_op(g: &SympElt, hbar: f64, grid: &LineGrid) -> Result<LineOperator> {
    if hbar <= 0.0 {
        return Err(Error::Domain(format!("hbar = {hbar} must be positive")));
    }
    let matrix = if (g.a - g.d).abs() <= FAMILY_EPS
        && (g.b + g.c).abs() <= FAMILY_EPS
        && (g.a * g.a + g.b * g.b - 1.0).abs() <= FAMILY_EPS
    {
        rotation_unitary(g.b.atan2(g.a), hbar, grid)
    } else if g.b.abs() <= FAMILY_EPS && g.c.abs() <= FAMILY_EPS && g.a > 0.0 {
        scaling_unitary(g.a, grid)
    } else if (g.a - 1.0).abs() <= FAMILY_EPS
        && (g.d - 1.0).abs() <= FAMILY_EPS
        && g.c.abs() <= FAMILY_EPS
    {
        // shear (1, c; 0, 1): position-diagonal chirp e^{i c x²/(2ħ)}
        let mut m = CMat::zeros(grid.n, grid.n);
        for j in 0..grid.n {
            let x = grid.x(j);
            m[(j, j)] = Complex64::from_polar(1.0, g.b * x * x / (2.0 * hbar));
        }
        m
    } else {
        return Err(Error::DecompositionRequired(format!(
            "{g:?} is not in the rotation/scaling/shear generator families"
        )));
    };
    Ok(LineOperator {
        matrix,
        grid: *grid,
        hbar,
    })
}

/// Relative covariance defect
/// `‖W(sym∘τ(g)⁻¹) − U(g)·W(sym)·U(g)⁻¹‖ / ‖W(sym)‖`
/// measured on the low Hermite family.
pub fn covariance_defect(
    g: &SympElt,
    sym: &PhaseSymbol,
    hbar: f64,
    grid: &LineGrid,
) -> Result<f64> {
    let u = metaplectic_op(g, hbar, grid)?.matrix;
    // The group inverse, not the adjoint: for an expanding dilation the
    // discretized operator's conjugate transpose undersamples the
    // stretched cardinal functions and stops being its inverse.
    let u_inv = metaplectic_op(&g.inverse(), hbar, grid)?.matrix;
    let w = weyl_quantize(sym, hbar, grid)?.matrix;
    let inv = g.inverse();
    let moved = sym.substitute_linear(inv.a, inv.b, inv.c, inv.d);
    let w_moved = weyl_quantize(&moved, hbar, grid)?.matrix;
    let conjugated = &u * &w * &u_inv;
    Ok(action_defect(&w_moved, &conjugated, grid, hbar, 4))
}

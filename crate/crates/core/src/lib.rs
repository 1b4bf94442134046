//! Numerics built on group symmetry.
//!
//! The crate realizes one construction in three guises: pick a group `G`, a
//! subgroup `H` and a vacuum vector, and the orbit of the vacuum produces an
//! integral transform together with the function theory it carries.
//!
//! * [`groups`] — exact arithmetic for the Heisenberg group, `SU(1,1)`, the
//!   Clifford algebra `Cl(1,1)`, and the Möbius actions on the elliptic and
//!   hyperbolic unit disks.
//! * [`wavelets`] — the reduced wavelet transform and its inverse for three
//!   concrete systems: Fourier, Segal-Bargmann and Hardy/Cauchy.
//! * [`invariant_ops`] — finite-difference residuals for the invariant Dirac
//!   and Laplace operators attached to those systems.
//! * [`funcalc`] — analytic functional calculus for non-normal matrices, the
//!   jet spectrum `(λ, k)`, and the spectral mapping theorem with an
//!   independent Jordan oracle.
//! * [`quant`] — Weyl quantization of polynomial symbols, metaplectic
//!   covariance, and Heisenberg-group convolution brackets with their
//!   Schrödinger and one-dimensional representation images.
//!
//! All transforms are checked against brute-force oracles at desk scale; the
//! `symcalc` CLI exposes the headline computations.

pub mod error;
pub mod funcalc;
pub mod grid;
pub mod groups;
pub mod invariant_ops;
pub mod linalg;
pub mod quadrature;
pub mod quant;
pub mod wavelets;

pub use error::{Error, Result};

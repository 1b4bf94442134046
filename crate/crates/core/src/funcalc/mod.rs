//! Analytic functional calculus for non-normal matrices.
//!
//! The calculus is organized around the unit disk: matrices with spectrum
//! inside it carry a Möbius action of `SU(1,1)` and an induced
//! representation on vector-valued series whose multiplier is a resolvent
//! ([`mobius_matrix`], [`rho_a_rep`]). The Dunford-Riesz contour integral
//! realizes `f ↦ f(a)` ([`dunford_riesz`]); the spectrum it supports is
//! three dimensional — pairs of eigenvalue and Jordan block length
//! ([`jet_spectrum`]) — and obeys a spectral mapping theorem for which both
//! the literal degree formula and an independent Jordan-splitting oracle
//! are provided ([`spectral_map_literal`], [`spectral_map_oracle`]).

mod contour;
mod holo;
mod mapping;
mod moebius;
mod spectrum;

pub use contour::{contour_integral, dunford_riesz, Contour};
pub use holo::{jet_prolong, HoloMap};
pub use mapping::{literal_agrees_with_oracle, spectral_map_literal, spectral_map_oracle};
pub use moebius::{
    matrix_resolvent, mobius_matrix, resolvent_cocycle_partner, rho_a_act, rho_a_rep,
    verify_jet_equivalence, VectorSeries,
};
pub use spectrum::{jet_spectrum, JetSpectrum};

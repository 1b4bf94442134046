//! Quantization from symplectic symmetry, and p-mechanics.
//!
//! Two complementary routes from classical to quantum data live here. The
//! first quantizes polynomial phase-space symbols by total symmetrization
//! of the canonical pair ([`weyl_quantize`]) and certifies the two facts
//! that make the map canonical: it intertwines the symplectic action
//! through the metaplectic operators ([`metaplectic_op`],
//! [`covariance_defect`]) and it satisfies the product/bracket rules
//! exactly up to total degree two while failing beyond, with the failure
//! computed exactly ([`dirac_rule_defect`]).
//!
//! The second route never leaves the group: observables are functions on
//! the Heisenberg group, composed by group convolution, and the
//! p-mechanical bracket `A(k₁∗k₂ − k₂∗k₁)` ([`pmech_bracket`]) maps under
//! the Schrödinger representation to the quantum commutator and under the
//! one-dimensional characters to the Poisson bracket
//! ([`bracket_repr_defect_schrodinger`], [`bracket_repr_defect_onedim`]).

mod hfn;
mod metaplectic;
mod rep;
mod symbol;
mod sympl;
mod weyl;

pub use hfn::{antiderivative_s, gaussian_observable, heis_convolve, pmech_bracket, HBox, HFn};
pub use metaplectic::{covariance_defect, metaplectic_op};
pub use rep::{
    bracket_repr_defect_onedim, bracket_repr_defect_schrodinger, rep_image_onedim,
    rep_image_schrodinger, ONEDIM_BRACKET_CONSTANT, SCHRODINGER_BRACKET_CONSTANT,
};
pub use symbol::PhaseSymbol;
pub use sympl::{heis_auto, symplecto_act, SympElt};
pub use weyl::{
    action_defect, dirac_rule_defect, hermite_state, p_matrix, q_matrix, weyl_displacement,
    weyl_quantize, LineGrid, LineOperator,
};

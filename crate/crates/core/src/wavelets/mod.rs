//! Reduced wavelet transforms for three concrete coherent-state systems.
//!
//! Each system is the same construction instantiated on a different pair
//! (group, subgroup): pick a vacuum vector fixed by the subgroup up to a
//! character, move it around with the representation, and pair against an
//! analysing functional.
//!
//! * Heisenberg group over its maximal abelian subgroup — the transform is
//!   the Fourier transform with kernel `e^{i√2xy}` ([`fourier_wavelet`]).
//! * Heisenberg group over its centre, Gaussian vacuum — the transform is
//!   the Segal-Bargmann transform into the Fock space ([`segal_bargmann`]).
//! * `SL(2,R)` over its compact subgroup, constant vacuum on the circle —
//!   the transform is the Cauchy integral onto the Hardy space
//!   ([`hardy_transform`]).

mod bargmann;
mod fourier;
mod hardy;
mod system;

pub use bargmann::{fock_project, segal_bargmann, segal_bargmann_inv, FockFn, PolarGridFn};
pub use fourier::{fourier_inner, fourier_wavelet, schrodinger_act, Direction};
pub use hardy::{
    hardy_transform, hardy_transform_contour, lambda_disk_act, rho1_act, szego_project,
    taylor_decompose, SeriesEval, TaylorSeries,
};
pub use system::{admissibility_defect, SystemKind, WaveletSystem};

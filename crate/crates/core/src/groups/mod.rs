//! Exact arithmetic for the symmetry groups of the crate.
//!
//! Three players appear throughout: the Heisenberg group `H¹` (kinematics of
//! quantum mechanics), `SL(2,R)` stored in its `SU(1,1)` form (conformal
//! geometry of the unit disk), and a realization of `SL(2,R)` by 2×2 matrices
//! over the Clifford algebra `Cl(1,1)` (conformal geometry of the hyperbolic
//! "unit disk" in two-dimensional space-time).

mod clifford;
mod heisenberg;
mod sl2;

pub use clifford::{cliff11_mul, mobius_hyp, Cliff11, HypElt, HypPoint};
pub use heisenberg::{heis_inv, heis_mul, HeisPoint};
pub use sl2::{mobius_disk, sl2_decompose, sl2_section, DiskPoint, SL2Elt};

/// Absolute threshold below which a Möbius denominator counts as singular.
pub(crate) const SINGULARITY_EPS: f64 = 1e-14;

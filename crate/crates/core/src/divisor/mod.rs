//! Symmetric divisor classes on M̄₀,ₙ: boundary-basis arithmetic, the
//! canonical and ψ classes, intersections with F-curves and `C_j`, and for
//! n = 6 the chamber decomposition of the effective cone.

mod chamber;
mod class;
mod curves;

pub use chamber::{mori_model, stable_base_locus, ChamberReport, MoriModel, StableBaseLocus, Wall};
pub use class::{
    canonical_divisor, canonical_polarization, from_K_psi, psi_divisor, to_K_psi,
    SymmetricDivisor,
};
pub use curves::{
    intersect_cj, intersect_f_curve, is_F_nonnegative, FCurveClass, FNonnegativity,
    SpecialCurveCj,
};

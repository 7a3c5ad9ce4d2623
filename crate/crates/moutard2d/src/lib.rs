//! Two-dimensional Schrödinger potentials with a multiplicity-2 positive
//! eigenvalue embedded in the continuous spectrum.
//!
//! The construction starts from the constant background potential `U = −k²`,
//! takes two Helmholtz solutions `ω₁, ω₂` (so `(−Δ + U)ωᵢ = 0`), and applies
//! the Moutard transformation twice. The result is an explicit potential
//! `Û = P/Q²` that decays like `1/r` and carries two linearly independent
//! `L²` eigenfunctions `ψ₁ = ω₁/Q`, `ψ₂ = ω₂/Q` of `−Δ + Û` at the positive
//! energy `E = k²`.
//!
//! The crate carries this through at two levels:
//! - **exactly** — the [`ring`] module provides the differential ring of
//!   trigonometric polynomials with rational coefficients in which `Q`, `P`
//!   and all eigen-identities are verified as identities, not tolerances;
//! - **numerically** — the [`spectral`] module corroborates the spectral and
//!   decay claims on desk-scale finite-difference grids, and [`positivity`]
//!   issues machine-checkable certificates that `Q` never vanishes for
//!   sufficiently negative integration constants `C`.

pub mod helmholtz;
pub mod moutard;
pub mod positivity;
pub mod quad;
pub mod ring;
pub mod spectral;

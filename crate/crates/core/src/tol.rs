//! Central tolerance table.
//!
//! Every numerical threshold used by this crate is defined here; no other
//! module hard-codes one. The eigensolver thresholds can additionally be
//! overridden per call through [`crate::linalg::JacobiSettings`].

/// Max accepted `|A - A†|` entry for inputs to the Hermitian eigensolver
/// and the trace norm.
pub const HERMITICITY_INPUT: f64 = 1e-9;

/// Off-diagonal Frobenius norm at which Jacobi sweeps stop.
pub const JACOBI_OFF_DIAG: f64 = 1e-14;

/// Sweep cap before the eigensolver reports non-convergence.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Columnwise unitarity and reconstruction residual guaranteed for a
/// returned [`crate::linalg::Spectrum`].
pub const SPECTRUM_RESIDUAL: f64 = 1e-10;

/// Pure-state normalization residual: `|Σ|a|² - 1|`.
pub const STATE_NORM: f64 = 1e-10;

/// Density-matrix hermiticity and unit-trace residual.
pub const DENSITY_RESIDUAL: f64 = 1e-10;

/// Eigenvalues in `[-EIG_CLIP, 0)` are treated as exact zeros (numerical
/// fuzz); anything more negative is rejected as an invalid state.
pub const EIG_CLIP: f64 = 1e-10;

/// Off-diagonal modulus below which a density matrix counts as incoherent.
pub const INCOHERENCE: f64 = 1e-10;

/// Allowed deviation of `|amplitude|` from `1/√d` for maximal coherence.
pub const MAX_COHERENT: f64 = 1e-10;

/// Amplitude-set normalization and product-factorization residual.
pub const AMPLITUDE_RESIDUAL: f64 = 1e-12;

/// Unitarity residual of the diagonal gravitational unitary.
pub const UNITARY_DIAG: f64 = 1e-12;

/// Max accepted `|U†U - I|` entry for inputs to the incoherent-unitary
/// classifier.
pub const UNITARY_INPUT: f64 = 1e-9;

/// Window around modulus 1 for the nonzero entries of an incoherent unitary.
pub const MODULUS_ONE: f64 = 1e-10;

/// Purity residual `|ρ² - ρ|` required of entanglement-entropy inputs.
pub const PURITY: f64 = 1e-8;

/// Negativity values with `|N|` below this snap to exactly zero, so PPT
/// separable states report 0 rather than eigensolver fuzz.
pub const NEGATIVITY_FLOOR: f64 = 1e-10;

/// Spin-flip spectrum values below this are zeroed before the square root.
/// The square root turns O(1e-15) eigenvalue fuzz into O(1e-8) error, so
/// the clip must sit well above solver noise.
pub const CONCURRENCE_EIG_CLIP: f64 = 1e-12;

/// Arithmetic residual for the exact complementarity identities.
pub const IDENTITY_RESIDUAL: f64 = 1e-9;

/// Classification window for a saturated complementarity bound. Kept
/// separate from [`IDENTITY_RESIDUAL`]: saturation is a physical
/// classification, the identity residual is numerics.
pub const SATURATION: f64 = 1e-6;

//! Two-mass gravitational entanglement model and its resource-theoretic
//! analysis.
//!
//! Two masses, each in a superposition of two locations, accumulate
//! branch-dependent phases under their mutual gravitational interaction.
//! This crate builds the superposed states, evolves them under the diagonal
//! gravitational unitary, computes the coherence and entanglement measures,
//! and verifies the exact complementarity relations between local coherence
//! and generated entanglement.
//!
//! Module map:
//!
//! * [`linalg`] — dense complex matrices, Jacobi eigendecomposition, trace norm
//! * [`state`] — pure states, density matrices, partial trace / transpose
//! * [`grav`] — phase accumulation and the gravitational unitary
//! * [`measures`] — coherence and entanglement quantifiers
//! * [`complementarity`] — relation checks and parameter sweeps
//! * [`oracle`] — brute-force reference implementations for the test suites
//! * [`tol`] — the central tolerance table

pub mod complementarity;
pub mod error;
pub mod grav;
pub mod linalg;
pub mod measures;
pub mod oracle;
pub mod state;
pub mod tol;

pub use complementarity::{
    check_relations, evaluate_point, linspace, sweep_initial_coherence, sweep_phases,
    ComplementarityReport, Relation, SweepRecord,
};
pub use error::{Error, Result};
pub use grav::{
    build_unitary, compute_phases, evolve, is_incoherent_unitary, GravUnitary, PhaseSet,
    PhysicalConfig, GRAVITATIONAL_CONSTANT, PLANCK_CONSTANT,
};
pub use linalg::{hermitian_eig, trace_norm, ComplexMatrix, JacobiSettings, Spectrum, C64};
pub use measures::{
    binary_entropy, concurrence, entanglement_entropy, l1_coherence, negativity,
    relative_entropy_coherence, von_neumann_entropy, MeasureKind, MeasureSet, MeasureValue,
};
pub use state::{
    build_product_state, is_incoherent_state, is_maximally_coherent, partial_trace,
    partial_transpose, partial_transpose_matrix, pure_to_density, AmplitudeSet, Basis,
    DensityMatrix, ProductStateParams, PureState, Subsystem,
};

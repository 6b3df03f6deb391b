//! Numeric tolerances used across the toolkit.
//!
//! Spectral-decomposition propagators are unitary to roundoff, so the
//! verification thresholds here sit a few orders above f64 epsilon rather
//! than at iterative-solver scale.

/// Per-entry Hermiticity check on operator inputs.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// `‖U†U − 𝕀‖_F` bound for a matrix accepted as a unitary gate.
pub const UNITARY_TOL: f64 = 1e-12;

/// Unitarity drift allowed for multi-step propagators (up to 32 factors).
pub const PROPAGATOR_TOL: f64 = 1e-11;

/// Residual norm above which a commutator direction is admitted into the
/// Lie-closure basis. Inputs are normalized to unit trace-norm first.
pub const CLOSURE_RANK_TOL: f64 = 1e-10;

/// Normalized overlap below which a Hamiltonian pair counts as orthogonal.
pub const ORTHOGONALITY_TOL: f64 = 1e-12;

/// Axis-orthogonality requirement for the three-step Euler solver.
pub const EULER_ORTHO_TOL: f64 = 1e-10;

/// Built-in reconstruction check for the three-step Euler solver.
pub const EULER_VERIFY_TOL: f64 = 1e-10;

/// Built-in reconstruction check for the four-step Josephson solver.
pub const JJ_VERIFY_TOL: f64 = 1e-9;

/// Upper cap for the Lowenthal bracket search; past this the pair is
/// effectively parallel.
pub const LOWENTHAL_K_MAX: u32 = 1_000_000;

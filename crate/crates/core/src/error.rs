use alloc::string::String;
use thiserror::Error;

/// Errors shared by every module of the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix data has {len} entries, expected {expected} for dimension {dim}")]
    BadMatrixData {
        dim: usize,
        len: usize,
        expected: usize,
    },

    #[error("matrix is not Hermitian: max entry defect {defect:.3e} exceeds {tol:.0e}")]
    NotHermitian { defect: f64, tol: f64 },

    #[error("matrix is not unitary: ‖U†U − I‖_F = {defect:.3e} exceeds {tol:.0e}")]
    NotUnitary { defect: f64, tol: f64 },

    #[error("invalid Pauli letter '{letter}' at position {position}")]
    InvalidPauliLetter { letter: char, position: usize },

    #[error("empty Pauli string")]
    EmptyPauliString,

    #[error("dimension {dim} is not a power of two")]
    NotPowerOfTwo { dim: usize },

    #[error("unknown device '{0}'")]
    UnknownDevice(String),

    #[error("device '{device}': missing parameter '{name}'")]
    MissingParameter { device: String, name: String },

    #[error("device '{device}': parameter '{name}' must be positive, got {value}")]
    NonPositiveParameter {
        device: String,
        name: String,
        value: f64,
    },

    #[error("invalid device model: {0}")]
    InvalidDevice(String),

    #[error("device '{0}' declares no switch table")]
    NoSwitchTable(String),

    #[error("switch setting has {got} bits, device declares {expected} switches")]
    SwitchLengthMismatch { got: usize, expected: usize },

    #[error("no Hamiltonian mapped to the given switch setting")]
    UnmappedSwitchSetting,

    #[error("Hamiltonian set does not generate su(2): closure dimension {dimension} < 3")]
    NotGenerating { dimension: usize },

    #[error("Hamiltonian pair is effectively parallel (psi = {psi})")]
    ParallelPair { psi: f64 },

    #[error("Hamiltonians are not orthogonal (normalized overlap {overlap:.3e}); use the four-step or numeric solver")]
    NonOrthogonalPair { overlap: f64 },

    #[error("Josephson pair out of regime: psi = {psi:.6} >= cos(pi/3) = 0.5")]
    OutOfRegime { psi: f64 },

    #[error("target outside the analytic domain ({0}); use numeric synthesis")]
    AnalyticDomain(String),

    #[error("unknown gate '{0}'")]
    UnknownGate(String),

    #[error("gate '{name}' takes {expected} parameter(s), got {got}")]
    WrongParamCount {
        name: String,
        expected: usize,
        got: usize,
    },

    #[error("unknown target class '{0}'")]
    UnknownTargetClass(String),

    #[error("invalid step count {0}; need at least 1")]
    InvalidStepCount(usize),

    #[error("invalid Hamiltonian index {index}; device has {count}")]
    InvalidHamiltonianIndex { index: usize, count: usize },

    #[error("invalid duration at step {step}: {value}")]
    InvalidDuration { step: usize, value: f64 },
}

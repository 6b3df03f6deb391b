//! Canonical target gates and the standard-circuit-model step-count
//! baselines used for comparison reports.
//!
//! Basis ordering is |q1 q2⟩ with qubit 1 leftmost and acting as control
//! where applicable; all builtin two-qubit devices share the convention.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::Error;
use crate::math;
use crate::matrix::{pauli, ComplexMatrix, UnitaryGate};
use crate::Result;

/// A named gate with its numeric parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct GateSpec {
    pub name: String,
    pub params: Vec<f64>,
    pub num_qubits: usize,
}

impl GateSpec {
    pub fn new(name: &str, params: Vec<f64>) -> Result<Self> {
        let (expected, num_qubits) = catalog_entry(name)?;
        if params.len() != expected {
            return Err(Error::WrongParamCount {
                name: name.to_string(),
                expected,
                got: params.len(),
            });
        }
        Ok(Self {
            name: name.to_string(),
            params,
            num_qubits,
        })
    }
}

/// (parameter count, qubit count) for each registered gate name.
fn catalog_entry(name: &str) -> Result<(usize, usize)> {
    Ok(match name {
        "i" | "x" | "y" | "z" | "h" => (0, 1),
        "phase" => (1, 1),
        "cnot" | "swap" | "qft2" => (0, 2),
        "cphase" => (1, 2),
        "cu" => (2, 2),
        other => return Err(Error::UnknownGate(other.to_string())),
    })
}

/// Registered gate names with parameter signatures, for catalog listings.
pub const GATE_CATALOG: [(&str, &str, usize); 10] = [
    ("i", "", 1),
    ("x", "", 1),
    ("y", "", 1),
    ("z", "", 1),
    ("h", "", 1),
    ("phase", "alpha", 1),
    ("cnot", "", 2),
    ("swap", "", 2),
    ("qft2", "", 2),
    ("cphase", "alpha", 2),
];

fn matrix_2x2(entries: [Complex64; 4]) -> ComplexMatrix {
    ComplexMatrix::new(2, entries.to_vec()).expect("fixed shape")
}

fn hadamard() -> ComplexMatrix {
    let s = 1.0 / math::sqrt(2.0);
    matrix_2x2([
        Complex64::new(s, 0.0),
        Complex64::new(s, 0.0),
        Complex64::new(s, 0.0),
        Complex64::new(-s, 0.0),
    ])
}

/// P(α) = diag(1, e^{iα}).
fn phase_gate(alpha: f64) -> ComplexMatrix {
    matrix_2x2([
        Complex64::ONE,
        Complex64::ZERO,
        Complex64::ZERO,
        Complex64::new(0.0, alpha).exp(),
    ])
}

fn cnot() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4);
    m.set(0, 0, Complex64::ONE);
    m.set(1, 1, Complex64::ONE);
    m.set(2, 3, Complex64::ONE);
    m.set(3, 2, Complex64::ONE);
    m
}

fn swap() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4);
    m.set(0, 0, Complex64::ONE);
    m.set(1, 2, Complex64::ONE);
    m.set(2, 1, Complex64::ONE);
    m.set(3, 3, Complex64::ONE);
    m
}

/// QFT2[j][k] = ½·i^{jk}.
fn qft2() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4);
    for j in 0..4 {
        for k in 0..4 {
            let power = (j * k) % 4;
            let omega = match power {
                0 => Complex64::ONE,
                1 => Complex64::new(0.0, 1.0),
                2 => Complex64::new(-1.0, 0.0),
                _ => Complex64::new(0.0, -1.0),
            };
            m.set(j, k, omega * 0.5);
        }
    }
    m
}

fn cphase(alpha: f64) -> ComplexMatrix {
    let mut m = ComplexMatrix::identity(4);
    m.set(3, 3, Complex64::new(0.0, alpha).exp());
    m
}

/// Controlled version of a 2×2 unitary, qubit 1 as control.
pub fn controlled(u: &UnitaryGate) -> Result<UnitaryGate> {
    if u.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: 2,
        });
    }
    let mut m = ComplexMatrix::identity(4);
    for i in 0..2 {
        for j in 0..2 {
            m.set(2 + i, 2 + j, u.matrix().get(i, j));
        }
    }
    UnitaryGate::new(m)
}

/// Matrix for a registered gate spec.
pub fn build_gate(spec: &GateSpec) -> Result<UnitaryGate> {
    let m = match (spec.name.as_str(), spec.params.as_slice()) {
        ("i", []) => ComplexMatrix::identity(2),
        ("x", []) => pauli('X')?,
        ("y", []) => pauli('Y')?,
        ("z", []) => pauli('Z')?,
        ("h", []) => hadamard(),
        ("phase", [alpha]) => phase_gate(*alpha),
        ("cnot", []) => cnot(),
        ("swap", []) => swap(),
        ("qft2", []) => qft2(),
        ("cphase", [alpha]) => cphase(*alpha),
        ("cu", [theta, phi]) => {
            return controlled(&standard_one_qubit(*theta, *phi));
        }
        (name, params) => {
            let (expected, _) = catalog_entry(name)?;
            return Err(Error::WrongParamCount {
                name: name.to_string(),
                expected,
                got: params.len(),
            });
        }
    };
    UnitaryGate::new(m)
}

/// The standard-model one-qubit composition P(π/2+φ)·H·P(2θ)·H, with the
/// rightmost factor acting first.
pub fn standard_one_qubit(theta: f64, phi: f64) -> UnitaryGate {
    let m = phase_gate(core::f64::consts::FRAC_PI_2 + phi)
        .matmul(&hadamard())
        .and_then(|m| m.matmul(&phase_gate(2.0 * theta)))
        .and_then(|m| m.matmul(&hadamard()))
        .expect("fixed 2x2 chain");
    UnitaryGate::new(m).expect("product of unitaries")
}

/// Reported step counts for the standard circuit model next to this
/// scheme's counts, per target class.
pub fn baseline_step_counts(target_class: &str) -> Result<Vec<(&'static str, u32)>> {
    Ok(match target_class {
        "one_qubit" => vec![
            ("standard", 4),
            ("standard_typical", 8),
            ("intrinsic_orthogonal", 3),
            ("intrinsic_josephson", 4),
        ],
        "two_qubit" => vec![("standard_cartan", 27), ("intrinsic", 15)],
        "two_qubit_controlled" => vec![("standard_cartan", 19), ("intrinsic", 15)],
        other => return Err(Error::UnknownTargetClass(other.to_string())),
    })
}

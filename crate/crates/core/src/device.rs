//! Device models: named Hamiltonian sets, the binary-switch table that
//! selects among them, and the cyclic order in which a pulse sequence
//! applies them.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::matrix::{pauli_string, HermitianOperator};
use crate::Result;

/// A device: what it can evolve under, and in what repeating order.
#[derive(Debug, Clone)]
pub struct DeviceModel {
    name: String,
    num_qubits: usize,
    hamiltonians: Vec<(String, HermitianOperator)>,
    cycle_order: Vec<usize>,
    parameters: Vec<(String, f64)>,
    /// Explicit switch-pattern → Hamiltonian map; empty when the device
    /// exposes its Hamiltonians directly.
    switch_table: Vec<(Vec<bool>, usize)>,
    num_switches: usize,
}

/// One setting of the device's classical switches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchSetting {
    pub bits: Vec<bool>,
}

impl SwitchSetting {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }
}

impl DeviceModel {
    pub fn new(
        name: String,
        num_qubits: usize,
        hamiltonians: Vec<(String, HermitianOperator)>,
        cycle_order: Vec<usize>,
        parameters: Vec<(String, f64)>,
        switch_table: Vec<(Vec<bool>, usize)>,
        num_switches: usize,
    ) -> Result<Self> {
        if num_qubits == 0 {
            return Err(Error::InvalidDevice("num_qubits must be at least 1".into()));
        }
        if hamiltonians.is_empty() {
            return Err(Error::InvalidDevice(
                "device declares no Hamiltonians".into(),
            ));
        }
        let dim = 1usize << num_qubits;
        for (label, h) in &hamiltonians {
            if label.is_empty() {
                return Err(Error::InvalidDevice("empty Hamiltonian label".into()));
            }
            if h.dim() != dim {
                return Err(Error::InvalidDevice(format!(
                    "Hamiltonian '{label}' has dimension {}, expected {dim}",
                    h.dim()
                )));
            }
        }
        for (i, (label, _)) in hamiltonians.iter().enumerate() {
            if hamiltonians[..i].iter().any(|(l, _)| l == label) {
                return Err(Error::InvalidDevice(format!("duplicate label '{label}'")));
            }
        }
        if cycle_order.is_empty() {
            return Err(Error::InvalidDevice("cycle order is empty".into()));
        }
        if let Some(&bad) = cycle_order.iter().find(|&&i| i >= hamiltonians.len()) {
            return Err(Error::InvalidDevice(format!(
                "cycle index {bad} out of range (device has {})",
                hamiltonians.len()
            )));
        }
        for (bits, idx) in &switch_table {
            if bits.len() != num_switches {
                return Err(Error::InvalidDevice(format!(
                    "switch pattern length {} does not match declared switch count {num_switches}",
                    bits.len()
                )));
            }
            if *idx >= hamiltonians.len() {
                return Err(Error::InvalidDevice(format!(
                    "switch pattern maps to missing Hamiltonian index {idx}"
                )));
            }
        }
        Ok(Self {
            name,
            num_qubits,
            hamiltonians,
            cycle_order,
            parameters,
            switch_table,
            num_switches,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    /// State dimension 2^N.
    pub fn dim(&self) -> usize {
        1 << self.num_qubits
    }

    pub fn hamiltonians(&self) -> &[(String, HermitianOperator)] {
        &self.hamiltonians
    }

    pub fn operators(&self) -> Vec<HermitianOperator> {
        self.hamiltonians.iter().map(|(_, h)| h.clone()).collect()
    }

    pub fn operator(&self, index: usize) -> Result<&HermitianOperator> {
        self.hamiltonians
            .get(index)
            .map(|(_, h)| h)
            .ok_or(Error::InvalidHamiltonianIndex {
                index,
                count: self.hamiltonians.len(),
            })
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.hamiltonians.iter().position(|(l, _)| l == label)
    }

    pub fn cycle_order(&self) -> &[usize] {
        &self.cycle_order
    }

    /// Hamiltonian index used by step `step` (0-based) of a cyclic sequence.
    pub fn cycle_index(&self, step: usize) -> usize {
        self.cycle_order[step % self.cycle_order.len()]
    }

    pub fn parameters(&self) -> &[(String, f64)] {
        &self.parameters
    }

    pub fn num_switches(&self) -> usize {
        self.num_switches
    }

    pub fn switch_table(&self) -> &[(Vec<bool>, usize)] {
        &self.switch_table
    }
}

/// The Hamiltonian selected by a switch setting.
pub fn hamiltonian_for<'d>(
    device: &'d DeviceModel,
    setting: &SwitchSetting,
) -> Result<&'d HermitianOperator> {
    if device.switch_table.is_empty() {
        return Err(Error::NoSwitchTable(device.name.clone()));
    }
    if setting.bits.len() != device.num_switches {
        return Err(Error::SwitchLengthMismatch {
            got: setting.bits.len(),
            expected: device.num_switches,
        });
    }
    device
        .switch_table
        .iter()
        .find(|(bits, _)| bits == &setting.bits)
        .map(|(_, idx)| &device.hamiltonians[*idx].1)
        .ok_or(Error::UnmappedSwitchSetting)
}

pub const BUILTIN_DEVICES: [&str; 5] = ["nmr1", "jj1", "heis2", "heis2perm", "jj2"];

/// Human-readable parameter signature for a builtin, for catalog listings.
pub fn builtin_signature(name: &str) -> Option<&'static str> {
    match name {
        "nmr1" => Some("(no parameters)"),
        "jj1" => Some("E_c, E_J"),
        "heis2" | "heis2perm" => Some("B1, B2, J12"),
        "jj2" => Some("E_c, E_J, E_L"),
        _ => None,
    }
}

fn require(name: &str, params: &[(&str, f64)], key: &str) -> Result<f64> {
    let value = params
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| *v)
        .ok_or_else(|| Error::MissingParameter {
            device: name.to_string(),
            name: key.to_string(),
        })?;
    if value.is_nan() || value <= 0.0 {
        return Err(Error::NonPositiveParameter {
            device: name.to_string(),
            name: key.to_string(),
            value,
        });
    }
    Ok(value)
}

fn sum(terms: &[(f64, &str)]) -> HermitianOperator {
    let mut acc: Option<HermitianOperator> = None;
    for (coeff, letters) in terms {
        let term = pauli_string(*coeff, letters).expect("builtin Pauli strings are valid");
        acc = Some(match acc {
            None => term,
            Some(h) => h.add(&term).expect("builtin terms share a dimension"),
        });
    }
    acc.expect("builtin Hamiltonians are nonempty")
}

/// Isotropic Heisenberg coupling `J12(XX + YY + ZZ)`.
fn heisenberg(j12: f64) -> HermitianOperator {
    sum(&[(j12, "XX"), (j12, "YY"), (j12, "ZZ")])
}

/// Construct one of the built-in devices.
///
/// `nmr1` — orthogonal single-qubit pair {σz, σx}.
/// `jj1` — charge Josephson junction: H1 = −½E_J σx, H2 = ½E_c σz − ½E_J σx,
///         with one gate-voltage switch selecting between them.
/// `heis2` — switched fields plus a switchable isotropic exchange coupling.
/// `heis2perm` — same, but the exchange coupling is always on.
/// `jj2` — two coupled junctions with three switches (both bias energies
///         and the σy σy coupling).
pub fn builtin_device(name: &str, params: &[(&str, f64)]) -> Result<DeviceModel> {
    match name {
        "nmr1" => {
            let z = pauli_string(1.0, "Z")?;
            let x = pauli_string(1.0, "X")?;
            DeviceModel::new(
                "nmr1".into(),
                1,
                vec![("H1".into(), z), ("H2".into(), x)],
                vec![0, 1],
                vec![],
                vec![],
                0,
            )
        }
        "jj1" => {
            let e_c = require(name, params, "E_c")?;
            let e_j = require(name, params, "E_J")?;
            let h1 = pauli_string(-0.5 * e_j, "X")?;
            let h2 = sum(&[(0.5 * e_c, "Z"), (-0.5 * e_j, "X")]);
            DeviceModel::new(
                "jj1".into(),
                1,
                vec![("H1".into(), h1), ("H2".into(), h2)],
                vec![0, 1],
                vec![("E_c".into(), e_c), ("E_J".into(), e_j)],
                vec![(vec![false], 0), (vec![true], 1)],
                1,
            )
        }
        "heis2" => {
            let b1 = require(name, params, "B1")?;
            let b2 = require(name, params, "B2")?;
            let j12 = require(name, params, "J12")?;
            DeviceModel::new(
                "heis2".into(),
                2,
                vec![
                    ("H1".into(), pauli_string(b1, "ZI")?),
                    ("H2".into(), pauli_string(b2, "IX")?),
                    ("H3".into(), heisenberg(j12)),
                ],
                vec![0, 1, 2],
                vec![("B1".into(), b1), ("B2".into(), b2), ("J12".into(), j12)],
                vec![],
                0,
            )
        }
        "heis2perm" => {
            let b1 = require(name, params, "B1")?;
            let b2 = require(name, params, "B2")?;
            let j12 = require(name, params, "J12")?;
            let coupling = heisenberg(j12);
            DeviceModel::new(
                "heis2perm".into(),
                2,
                vec![
                    ("H1".into(), pauli_string(b1, "ZI")?.add(&coupling)?),
                    ("H2".into(), pauli_string(b2, "IX")?.add(&coupling)?),
                    ("H3".into(), coupling),
                ],
                vec![0, 1, 2],
                vec![("B1".into(), b1), ("B2".into(), b2), ("J12".into(), j12)],
                vec![],
                0,
            )
        }
        "jj2" => {
            let e_c = require(name, params, "E_c")?;
            let e_j = require(name, params, "E_J")?;
            let e_l = require(name, params, "E_L")?;
            let t = -0.5 * e_j;
            let h1 = sum(&[(0.5 * e_c, "ZI"), (0.5 * e_c, "IZ"), (t, "XI"), (t, "IX")]);
            let h2 = sum(&[(t, "XI"), (t, "IX"), (-0.5 * e_l, "YY")]);
            let h3 = sum(&[(0.5 * e_c, "IZ"), (t, "XI"), (t, "IX")]);
            let h4 = sum(&[(0.5 * e_c, "ZI"), (t, "XI"), (t, "IX")]);
            DeviceModel::new(
                "jj2".into(),
                2,
                vec![
                    ("H1".into(), h1),
                    ("H2".into(), h2),
                    ("H3".into(), h3),
                    ("H4".into(), h4),
                ],
                vec![0, 1, 2, 3],
                vec![
                    ("E_c".into(), e_c),
                    ("E_J".into(), e_j),
                    ("E_L".into(), e_l),
                ],
                // Switches: bias on qubit 1, bias on qubit 2, coupling.
                vec![
                    (vec![true, true, false], 0),
                    (vec![false, false, true], 1),
                    (vec![false, true, false], 2),
                    (vec![true, false, false], 3),
                ],
                3,
            )
        }
        other => Err(Error::UnknownDevice(other.to_string())),
    }
}

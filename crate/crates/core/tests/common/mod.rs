//! Shared helpers for the integration suites.
#![allow(dead_code)]

use gatesmith_core::device::{builtin_device, DeviceModel};
use gatesmith_core::matrix::{pauli_label, pauli_string, HermitianOperator};
use gatesmith_core::rng::SplitMix64;

/// Random Hermitian operator with normal coefficients on every
/// non-identity Pauli string plus a random trace part.
pub fn random_hermitian(num_qubits: usize, rng: &mut SplitMix64) -> HermitianOperator {
    let strings = 4usize.pow(num_qubits as u32);
    let mut acc: Option<HermitianOperator> = None;
    for index in 0..strings {
        let label = pauli_label(index, num_qubits);
        let term = pauli_string(rng.normal(), &label).unwrap();
        acc = Some(match acc {
            None => term,
            Some(h) => h.add(&term).unwrap(),
        });
    }
    acc.unwrap()
}

pub fn heis2() -> DeviceModel {
    builtin_device("heis2", &[("B1", 1.0), ("B2", 1.0), ("J12", 0.1)]).unwrap()
}

pub fn heis2perm() -> DeviceModel {
    builtin_device("heis2perm", &[("B1", 1.0), ("B2", 1.0), ("J12", 0.1)]).unwrap()
}

pub fn jj2() -> DeviceModel {
    builtin_device("jj2", &[("E_c", 10.0), ("E_J", 1.0), ("E_L", 0.5)]).unwrap()
}

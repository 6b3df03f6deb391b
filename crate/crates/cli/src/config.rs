//! Line-oriented device-config format.
//!
//! ```text
//! # comment
//! name my-device
//! qubits 2
//! cycle H1 H2 H3
//! hamiltonian H1
//! term 1.0 ZI
//! term 0.1 XX
//! switch 10 -> H1
//! ```
//!
//! Header lines first (`name`, `qubits`, optional `cycle`), then one
//! `hamiltonian <label>` block per operator with `term <coeff> <paulis>`
//! lines, and optional `switch <bits> -> <label>` lines. Tokens are
//! whitespace-separated; `#` starts a comment.

use std::fmt::Write as _;

use gatesmith_core::device::DeviceModel;
use gatesmith_core::matrix::{pauli_decompose, pauli_string, HermitianOperator};

/// Parse failure with its 1-based line number.
#[derive(Debug)]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.line == 0 {
            write!(f, "config: {}", self.message)
        } else {
            write!(f, "config line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ConfigError {}

fn err(line: usize, message: impl Into<String>) -> ConfigError {
    ConfigError {
        line,
        message: message.into(),
    }
}

struct PendingHamiltonian {
    label: String,
    declared_at: usize,
    terms: Vec<(f64, String)>,
}

/// Parse a device-config document into a validated `DeviceModel`.
pub fn load_device(config_text: &str) -> Result<DeviceModel, ConfigError> {
    let mut name: Option<String> = None;
    let mut qubits: Option<usize> = None;
    let mut cycle_labels: Option<Vec<String>> = None;
    let mut blocks: Vec<PendingHamiltonian> = Vec::new();
    let mut switches: Vec<(Vec<bool>, String, usize)> = Vec::new();

    for (idx, raw) in config_text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut tokens = line.split_whitespace();
        let Some(keyword) = tokens.next() else {
            continue;
        };
        let rest: Vec<&str> = tokens.collect();
        match keyword {
            "name" => {
                if rest.is_empty() {
                    return Err(err(line_no, "'name' needs a value"));
                }
                name = Some(rest.join(" "));
            }
            "qubits" => {
                let [value] = rest.as_slice() else {
                    return Err(err(line_no, "'qubits' takes exactly one integer"));
                };
                let n: usize = value
                    .parse()
                    .map_err(|_| err(line_no, format!("invalid qubit count '{value}'")))?;
                if n == 0 {
                    return Err(err(line_no, "qubit count must be at least 1"));
                }
                qubits = Some(n);
            }
            "cycle" => {
                if rest.is_empty() {
                    return Err(err(line_no, "'cycle' needs at least one label"));
                }
                cycle_labels = Some(rest.iter().map(|s| s.to_string()).collect());
            }
            "hamiltonian" => {
                let [label] = rest.as_slice() else {
                    return Err(err(line_no, "'hamiltonian' takes exactly one label"));
                };
                if blocks.iter().any(|b| b.label == *label) {
                    return Err(err(line_no, format!("duplicate label '{label}'")));
                }
                blocks.push(PendingHamiltonian {
                    label: label.to_string(),
                    declared_at: line_no,
                    terms: Vec::new(),
                });
            }
            "term" => {
                let [coeff, paulis] = rest.as_slice() else {
                    return Err(err(
                        line_no,
                        "'term' takes a coefficient and a Pauli string",
                    ));
                };
                let block = blocks
                    .last_mut()
                    .ok_or_else(|| err(line_no, "'term' before any 'hamiltonian' block"))?;
                let c: f64 = coeff
                    .parse()
                    .map_err(|_| err(line_no, format!("invalid coefficient '{coeff}'")))?;
                if !c.is_finite() {
                    return Err(err(line_no, format!("non-finite coefficient '{coeff}'")));
                }
                let n = qubits.ok_or_else(|| err(line_no, "'term' before 'qubits'"))?;
                if paulis.len() != n {
                    return Err(err(
                        line_no,
                        format!(
                            "Pauli string '{paulis}' has length {}, expected {n}",
                            paulis.len()
                        ),
                    ));
                }
                // Validate letters now so the error carries the line number.
                pauli_string(1.0, paulis).map_err(|e| err(line_no, e.to_string()))?;
                block.terms.push((c, paulis.to_string()));
            }
            "switch" => {
                // switch <bits> -> <label>
                let [bits, arrow, label] = rest.as_slice() else {
                    return Err(err(line_no, "'switch' syntax: switch <bits> -> <label>"));
                };
                if *arrow != "->" {
                    return Err(err(line_no, "'switch' syntax: switch <bits> -> <label>"));
                }
                let pattern: Result<Vec<bool>, ConfigError> = bits
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        other => Err(err(line_no, format!("invalid switch bit '{other}'"))),
                    })
                    .collect();
                switches.push((pattern?, label.to_string(), line_no));
            }
            other => {
                return Err(err(line_no, format!("unknown keyword '{other}'")));
            }
        }
    }

    let name = name.ok_or_else(|| err(0, "missing 'name' header"))?;
    let qubits = qubits.ok_or_else(|| err(0, "missing 'qubits' header"))?;
    if blocks.is_empty() {
        return Err(err(0, "no 'hamiltonian' blocks"));
    }

    let mut hamiltonians: Vec<(String, HermitianOperator)> = Vec::new();
    for block in &blocks {
        if block.terms.is_empty() {
            return Err(err(
                block.declared_at,
                format!("Hamiltonian '{}' has no terms", block.label),
            ));
        }
        let mut acc: Option<HermitianOperator> = None;
        for (coeff, paulis) in &block.terms {
            let term =
                pauli_string(*coeff, paulis).map_err(|e| err(block.declared_at, e.to_string()))?;
            acc = Some(match acc {
                None => term,
                Some(h) => h
                    .add(&term)
                    .map_err(|e| err(block.declared_at, e.to_string()))?,
            });
        }
        hamiltonians.push((block.label.clone(), acc.expect("nonempty terms")));
    }

    let label_index = |label: &str, line: usize| -> Result<usize, ConfigError> {
        hamiltonians
            .iter()
            .position(|(l, _)| l == label)
            .ok_or_else(|| err(line, format!("unknown Hamiltonian label '{label}'")))
    };

    let cycle_order = match &cycle_labels {
        Some(labels) => {
            let mut order = Vec::with_capacity(labels.len());
            for label in labels {
                order.push(label_index(label, 0)?);
            }
            order
        }
        None => (0..hamiltonians.len()).collect(),
    };

    let num_switches = switches.first().map(|(bits, _, _)| bits.len()).unwrap_or(0);
    let mut switch_table = Vec::with_capacity(switches.len());
    for (bits, label, line) in &switches {
        if bits.len() != num_switches {
            return Err(err(
                *line,
                format!(
                    "switch pattern length {} differs from earlier patterns ({num_switches})",
                    bits.len()
                ),
            ));
        }
        switch_table.push((bits.clone(), label_index(label, *line)?));
    }

    DeviceModel::new(
        name,
        qubits,
        hamiltonians,
        cycle_order,
        Vec::new(),
        switch_table,
        num_switches,
    )
    .map_err(|e| err(0, e.to_string()))
}

/// Render a device back into config text. Operators are expanded in the
/// Pauli-string basis with 17-significant-digit coefficients, so
/// `load_device(serialize_device(d))` reproduces every matrix exactly up
/// to f64 round-trip.
pub fn serialize_device(device: &DeviceModel) -> String {
    let mut out = String::new();
    writeln!(out, "name {}", device.name()).unwrap();
    writeln!(out, "qubits {}", device.num_qubits()).unwrap();
    let cycle: Vec<&str> = device
        .cycle_order()
        .iter()
        .map(|&i| device.hamiltonians()[i].0.as_str())
        .collect();
    writeln!(out, "cycle {}", cycle.join(" ")).unwrap();
    for (label, h) in device.hamiltonians() {
        writeln!(out, "hamiltonian {label}").unwrap();
        let terms = pauli_decompose(h, 0.0).expect("device dims are powers of two");
        for (paulis, coeff) in terms {
            if coeff != 0.0 {
                writeln!(out, "term {coeff:.16e} {paulis}").unwrap();
            }
        }
    }
    for (bits, idx) in device.switch_table() {
        let pattern: String = bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
        writeln!(out, "switch {pattern} -> {}", device.hamiltonians()[*idx].0).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use gatesmith_core::device::builtin_device;

    #[test]
    fn single_term_device() {
        let d = load_device("name t\nqubits 1\nhamiltonian H1\nterm 1.0 Z\n").unwrap();
        let builtin = builtin_device("nmr1", &[]).unwrap();
        assert_eq!(d.num_qubits(), 1);
        assert!(
            d.operator(0)
                .unwrap()
                .matrix()
                .max_entry_distance(builtin.operator(0).unwrap().matrix())
                <= 1e-15
        );
    }

    #[test]
    fn heis2_config_matches_builtin() {
        let text = "\
# two-qubit exchange device
name heis2
qubits 2
cycle H1 H2 H3
hamiltonian H1
term 1.0 ZI
hamiltonian H2
term 1.0 IX
hamiltonian H3
term 0.1 XX
term 0.1 YY
term 0.1 ZZ
";
        let d = load_device(text).unwrap();
        let builtin = builtin_device("heis2", &[("B1", 1.0), ("B2", 1.0), ("J12", 0.1)]).unwrap();
        for i in 0..3 {
            assert!(
                d.operator(i)
                    .unwrap()
                    .matrix()
                    .max_entry_distance(builtin.operator(i).unwrap().matrix())
                    <= 1e-15,
                "operator {i}"
            );
        }
        assert_eq!(d.cycle_order(), &[0, 1, 2]);
    }

    #[test]
    fn wrong_pauli_length_names_line() {
        let text = "name t\nqubits 2\nhamiltonian H1\nterm 1.0 Z\n";
        let e = load_device(text).unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.message.contains("length 1"), "{}", e.message);
    }

    #[test]
    fn duplicate_label_rejected() {
        let text = "name t\nqubits 1\nhamiltonian A\nterm 1 Z\nhamiltonian A\nterm 1 X\n";
        let e = load_device(text).unwrap_err();
        assert_eq!(e.line, 5);
    }

    #[test]
    fn empty_hamiltonian_rejected() {
        let text = "name t\nqubits 1\nhamiltonian A\nhamiltonian B\nterm 1 X\n";
        let e = load_device(text).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("no terms"));
    }

    #[test]
    fn switch_lines_round_trip() {
        let text = "\
name jj
qubits 1
hamiltonian H1
term -0.5 X
hamiltonian H2
term 5.0 Z
term -0.5 X
switch 0 -> H1
switch 1 -> H2
";
        let d = load_device(text).unwrap();
        assert_eq!(d.num_switches(), 1);
        assert_eq!(d.switch_table().len(), 2);
    }

    #[test]
    fn serialize_then_load_is_identity() {
        for (name, params) in [
            ("jj1", vec![("E_c", 10.0), ("E_J", 1.0)]),
            ("heis2perm", vec![("B1", 1.0), ("B2", 1.0), ("J12", 0.1)]),
            ("jj2", vec![("E_c", 10.0), ("E_J", 1.0), ("E_L", 0.5)]),
        ] {
            let original = builtin_device(name, &params).unwrap();
            let text = serialize_device(&original);
            let reloaded = load_device(&text).unwrap();
            assert_eq!(reloaded.name(), original.name());
            assert_eq!(reloaded.num_qubits(), original.num_qubits());
            assert_eq!(reloaded.cycle_order(), original.cycle_order());
            assert_eq!(reloaded.switch_table(), original.switch_table());
            for (i, (label, h)) in original.hamiltonians().iter().enumerate() {
                let (rl, rh) = &reloaded.hamiltonians()[i];
                assert_eq!(rl, label);
                assert!(
                    rh.matrix().max_entry_distance(h.matrix()) <= 1e-15,
                    "{name}/{label}"
                );
            }
        }
    }
}

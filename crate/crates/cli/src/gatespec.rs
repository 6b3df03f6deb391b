//! `--target` syntax: a lowercase gate name with optional parenthesized
//! parameters, e.g. `cnot`, `phase(1.5708)`, `cphase(3.14159)`,
//! `cu(0.4,1.1)`.

use gatesmith_core::gates::GateSpec;

pub fn parse_gate_spec(text: &str) -> Result<GateSpec, String> {
    let text = text.trim();
    let (name, params) = match text.find('(') {
        None => (text, Vec::new()),
        Some(open) => {
            if !text.ends_with(')') {
                return Err(format!("unbalanced parentheses in '{text}'"));
            }
            let name = &text[..open];
            let inner = &text[open + 1..text.len() - 1];
            let params: Result<Vec<f64>, _> =
                inner.split(',').map(|p| p.trim().parse::<f64>()).collect();
            (
                name,
                params.map_err(|e| format!("invalid parameter in '{text}': {e}"))?,
            )
        }
    };
    GateSpec::new(name, params).map_err(|e| e.to_string())
}

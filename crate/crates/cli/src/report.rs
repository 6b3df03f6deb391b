//! Machine-readable synthesis report: one `key value` field per line.
//!
//! Durations carry 17 significant digits so a report can be re-verified
//! bit-exactly; identical invocations produce byte-identical documents.

use gatesmith_core::synth::{ObjectiveKind, SynthesisReport};

pub fn render_report(report: &SynthesisReport, steps: usize) -> String {
    let durations: Vec<String> = report
        .durations
        .iter()
        .map(|t| format!("{t:.16e}"))
        .collect();
    format!(
        "target {}\nsteps {}\nobjective {}\nobjective_value {:.16e}\ndurations {}\nrestarts_used {}\niterations {}\nseed {}\nconverged {}\n",
        report.target_name,
        steps,
        report.objective.name(),
        report.objective_value,
        durations.join(","),
        report.restarts_used,
        report.iterations,
        report.seed,
        report.converged,
    )
}

/// Parse a rendered report document (used by tests and tooling).
pub fn parse_report(text: &str) -> Result<SynthesisReport, String> {
    let mut target = None;
    let mut objective = None;
    let mut objective_value = None;
    let mut durations = None;
    let mut restarts_used = None;
    let mut iterations = None;
    let mut seed = None;
    let mut converged = None;

    for line in text.lines() {
        let Some((key, value)) = line.split_once(' ') else {
            continue;
        };
        match key {
            "target" => target = Some(value.to_string()),
            "steps" => {}
            "objective" => {
                objective = Some(match value {
                    "plain" => ObjectiveKind::Plain,
                    "phase_invariant" => ObjectiveKind::PhaseInvariant,
                    other => return Err(format!("unknown objective '{other}'")),
                })
            }
            "objective_value" => {
                objective_value = Some(value.parse::<f64>().map_err(|e| e.to_string())?)
            }
            "durations" => {
                let parsed: Result<Vec<f64>, _> =
                    value.split(',').map(|t| t.parse::<f64>()).collect();
                durations = Some(parsed.map_err(|e| e.to_string())?);
            }
            "restarts_used" => {
                restarts_used = Some(value.parse::<u32>().map_err(|e| e.to_string())?)
            }
            "iterations" => iterations = Some(value.parse::<u64>().map_err(|e| e.to_string())?),
            "seed" => seed = Some(value.parse::<u64>().map_err(|e| e.to_string())?),
            "converged" => converged = Some(value.parse::<bool>().map_err(|e| e.to_string())?),
            other => return Err(format!("unknown report field '{other}'")),
        }
    }

    Ok(SynthesisReport {
        target_name: target.ok_or("missing 'target'")?,
        durations: durations.ok_or("missing 'durations'")?,
        objective_value: objective_value.ok_or("missing 'objective_value'")?,
        objective: objective.ok_or("missing 'objective'")?,
        restarts_used: restarts_used.ok_or("missing 'restarts_used'")?,
        iterations: iterations.ok_or("missing 'iterations'")?,
        seed: seed.ok_or("missing 'seed'")?,
        converged: converged.ok_or("missing 'converged'")?,
    })
}

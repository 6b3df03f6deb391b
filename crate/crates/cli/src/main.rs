//! `gatesmith` — gate synthesis from a device's intrinsic Hamiltonians.
//!
//! Subcommands: `check` (controllability + step-count prediction), `synth`
//! (analytic or numeric pulse synthesis), `verify` (re-evaluate a duration
//! vector against a target), `gates` and `devices` (catalogs).
//!
//! Exit codes: 0 success/converged, 1 input or convergence failure,
//! 2 `check` found an incomplete algebra, 3 analytic solver out of its
//! regime without `--numeric-fallback`.

mod config;
mod gatespec;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gatesmith_core::control::{gram_matrix, lie_closure, lowenthal_steps};
use gatesmith_core::device::{builtin_device, builtin_signature, DeviceModel, BUILTIN_DEVICES};
use gatesmith_core::gates::{build_gate, GateSpec, GATE_CATALOG};
use gatesmith_core::matrix::{hs_inner, UnitaryGate};
use gatesmith_core::su2::{euler_three_step, jj_four_step};
use gatesmith_core::synth::{
    f_phase_invariant, f_test, propagate_durations, synthesize, ObjectiveKind, SynthesisOptions,
    SynthesisReport,
};
use gatesmith_core::Error;

#[derive(Parser)]
#[command(
    name = "gatesmith",
    about = "Gate synthesis from switched device Hamiltonians",
    arg_required_else_help = true,
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closure dimension, Gram matrix and step-count prediction for a device
    Check(DeviceArgs),
    /// Synthesize a pulse sequence for a target gate
    Synth(SynthArgs),
    /// Evaluate a duration vector against a target gate
    Verify(VerifyArgs),
    /// List the target-gate catalog
    Gates,
    /// List the built-in device catalog
    Devices(DevicesArgs),
}

#[derive(Args)]
struct DeviceArgs {
    /// Built-in device name or path to a device-config file
    #[arg(long)]
    device: String,
    /// Device parameters as k=v,k=v (built-in devices only)
    #[arg(long, default_value = "")]
    params: String,
}

#[derive(Args)]
struct SynthArgs {
    #[command(flatten)]
    device: DeviceArgs,
    /// Target gate, e.g. cnot, h, cphase(3.14159), cu(0.4,1.1)
    #[arg(long)]
    target: String,
    /// Step count (forces numeric synthesis; default picks per device)
    #[arg(long)]
    steps: Option<usize>,
    /// Objective: plain or phase
    #[arg(long, default_value = "phase")]
    objective: String,
    #[arg(long, default_value_t = 64)]
    restarts: u32,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, default_value_t = 2000)]
    max_iters: u32,
    /// Also write the report document to this path
    #[arg(long)]
    out: Option<String>,
    /// Fall back to numeric synthesis when the analytic solver declines
    #[arg(long)]
    numeric_fallback: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    device: DeviceArgs,
    /// Target gate (required unless --report is given)
    #[arg(long)]
    target: Option<String>,
    /// Comma-separated durations, applied over the device cycle
    #[arg(long)]
    times: Option<String>,
    /// Re-verify a synth report document instead of --target/--times
    #[arg(long, conflicts_with_all = ["target", "times"])]
    report: Option<String>,
    /// Expected step count (rejects a mismatched duration list)
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Args)]
struct DevicesArgs {
    /// Print a built-in device as an editable config document
    #[arg(long)]
    export: Option<String>,
    /// Device parameters for --export
    #[arg(long, default_value = "")]
    params: String,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }

    fn input(message: impl std::fmt::Display) -> Self {
        Self::new(1, message.to_string())
    }
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`gatesmith gates | head`) instead of
    // panicking out of println.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{e}");
                    ExitCode::from(1)
                }
            };
        }
    };
    let result = match cli.command {
        Command::Check(args) => cmd_check(&args),
        Command::Synth(args) => cmd_synth(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Gates => cmd_gates(),
        Command::Devices(args) => cmd_devices(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_params(text: &str) -> Result<Vec<(String, f64)>, Failure> {
    let mut params = Vec::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let (key, value) = piece.split_once('=').ok_or_else(|| {
            Failure::input(format!("malformed parameter '{piece}', expected k=v"))
        })?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| Failure::input(format!("invalid value in parameter '{piece}'")))?;
        params.push((key.trim().to_string(), value));
    }
    Ok(params)
}

fn resolve_device(args: &DeviceArgs) -> Result<DeviceModel, Failure> {
    let params = parse_params(&args.params)?;
    if BUILTIN_DEVICES.contains(&args.device.as_str()) {
        let borrowed: Vec<(&str, f64)> = params.iter().map(|(k, v)| (k.as_str(), *v)).collect();
        return builtin_device(&args.device, &borrowed).map_err(Failure::input);
    }
    let text = std::fs::read_to_string(&args.device)
        .map_err(|e| Failure::input(format!("cannot read device '{}': {e}", args.device)))?;
    config::load_device(&text).map_err(Failure::input)
}

fn resolve_target(text: &str, device: &DeviceModel) -> Result<(GateSpec, UnitaryGate), Failure> {
    let spec = gatespec::parse_gate_spec(text).map_err(Failure::input)?;
    if spec.num_qubits != device.num_qubits() {
        return Err(Failure::input(format!(
            "target '{}' acts on {} qubit(s) but device '{}' has {}",
            spec.name,
            spec.num_qubits,
            device.name(),
            device.num_qubits()
        )));
    }
    let gate = build_gate(&spec).map_err(Failure::input)?;
    Ok((spec, gate))
}

fn cmd_check(args: &DeviceArgs) -> Result<u8, Failure> {
    let device = resolve_device(args)?;
    let ops = device.operators();
    let closure = lie_closure(&ops).map_err(Failure::input)?;
    let full_dim = device.dim() * device.dim() - 1;

    println!(
        "device: {} ({} qubit(s), {} Hamiltonian(s))",
        device.name(),
        device.num_qubits(),
        ops.len()
    );
    println!("closure dimension: {} of {}", closure.dimension, full_dim);
    println!(
        "full su({}): {}",
        device.dim(),
        if closure.is_full_su { "yes" } else { "no" }
    );
    println!("commutator depth: {}", closure.depth_reached);

    let gram = gram_matrix(&ops).map_err(Failure::input)?;
    println!("gram matrix:");
    for row in &gram {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:.12e}")).collect();
        println!("  {}", cells.join("  "));
    }

    if device.num_qubits() == 1 && ops.len() == 2 {
        match lowenthal_steps(&ops[0], &ops[1]) {
            Ok(r) => {
                println!("psi: {:.12e}", r.psi);
                match r.k {
                    Some(k) => println!("k: {k}"),
                    None => println!("k: none (orthogonal pair)"),
                }
                println!("steps: {}", r.steps);
            }
            Err(e) => println!("steps: unavailable ({e})"),
        }
    }

    Ok(if closure.is_full_su { 0 } else { 2 })
}

fn analytic_report(
    target_name: &str,
    durations: Vec<f64>,
    residual: f64,
    seed: u64,
    tol: f64,
) -> SynthesisReport {
    SynthesisReport {
        target_name: target_name.to_string(),
        durations,
        objective_value: residual,
        objective: ObjectiveKind::PhaseInvariant,
        restarts_used: 0,
        iterations: 0,
        seed,
        converged: residual <= tol,
    }
}

/// Step count when `--steps` is omitted: the analytic prediction for a
/// two-Hamiltonian single qubit, 4^N − 1 otherwise.
fn default_steps(device: &DeviceModel) -> usize {
    let ops = device.operators();
    if device.num_qubits() == 1 && ops.len() == 2 {
        if let Ok(r) = lowenthal_steps(&ops[0], &ops[1]) {
            return r.steps as usize;
        }
    }
    let d = device.dim();
    d * d - 1
}

fn cmd_synth(args: &SynthArgs) -> Result<u8, Failure> {
    let device = resolve_device(&args.device)?;
    let (spec, target) = resolve_target(&args.target, &device)?;
    let objective = match args.objective.as_str() {
        "plain" => ObjectiveKind::Plain,
        "phase" | "phase_invariant" => ObjectiveKind::PhaseInvariant,
        other => return Err(Failure::input(format!("unknown objective '{other}'"))),
    };
    let options = SynthesisOptions {
        objective,
        restarts: args.restarts,
        seed: args.seed,
        max_iters: args.max_iters,
        tol: args.tol,
    };

    let ops = device.operators();
    let analytic_eligible = args.steps.is_none()
        && objective == ObjectiveKind::PhaseInvariant
        && device.num_qubits() == 1
        && ops.len() == 2;

    let report = if analytic_eligible {
        let orthogonal = hs_inner(&ops[0], &ops[1])
            .map(|v| v.abs() <= 1e-10)
            .unwrap_or(false);
        if orthogonal {
            let solved = euler_three_step(&ops[0], &ops[1], &target).map_err(Failure::input)?;
            println!("route: three-step analytic (orthogonal pair)");
            analytic_report(
                &spec.name,
                solved.durations.to_vec(),
                solved.residual,
                args.seed,
                args.tol,
            )
        } else if device.name() == "jj1" {
            let find = |key: &str| {
                device
                    .parameters()
                    .iter()
                    .find(|(k, _)| k == key)
                    .map(|(_, v)| *v)
            };
            let (e_c, e_j) = (find("E_c"), find("E_J"));
            let (e_c, e_j) = match (e_c, e_j) {
                (Some(c), Some(j)) => (c, j),
                _ => return Err(Failure::input("jj1 device is missing E_c/E_J parameters")),
            };
            match jj_four_step(e_c, e_j, &target) {
                Ok(solved) => {
                    println!("route: four-step analytic (Josephson pair)");
                    println!(
                        "branch k: {}",
                        solved
                            .branch_k
                            .iter()
                            .map(|k| k.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    );
                    analytic_report(
                        &spec.name,
                        solved.durations.to_vec(),
                        solved.residual,
                        args.seed,
                        args.tol,
                    )
                }
                Err(e @ (Error::OutOfRegime { .. } | Error::AnalyticDomain(_))) => {
                    if !args.numeric_fallback {
                        return Err(Failure::new(
                            3,
                            format!("{e}; pass --numeric-fallback to synthesize numerically"),
                        ));
                    }
                    println!("route: numeric (analytic solver declined: {e})");
                    let steps = default_steps(&device);
                    synthesize(&device, &target, &spec.name, steps, &options)
                        .map_err(Failure::input)?
                }
                Err(e) => return Err(Failure::input(e)),
            }
        } else {
            let steps = default_steps(&device);
            println!("route: numeric ({steps} steps)");
            synthesize(&device, &target, &spec.name, steps, &options).map_err(Failure::input)?
        }
    } else {
        let steps = args.steps.unwrap_or_else(|| default_steps(&device));
        println!("route: numeric ({steps} steps)");
        synthesize(&device, &target, &spec.name, steps, &options).map_err(Failure::input)?
    };

    let document = report::render_report(&report, report.durations.len());
    print!("{document}");
    if let Some(path) = &args.out {
        std::fs::write(path, &document)
            .map_err(|e| Failure::input(format!("cannot write '{path}': {e}")))?;
    }
    Ok(if report.converged { 0 } else { 1 })
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, Failure> {
    let device = resolve_device(&args.device)?;
    let (target_text, durations, reported) = match &args.report {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("cannot read report '{path}': {e}")))?;
            let parsed = report::parse_report(&text).map_err(Failure::input)?;
            (
                parsed.target_name.clone(),
                parsed.durations.clone(),
                Some(parsed),
            )
        }
        None => {
            let target = args
                .target
                .clone()
                .ok_or_else(|| Failure::input("--target is required without --report"))?;
            let times = args
                .times
                .clone()
                .ok_or_else(|| Failure::input("--times is required without --report"))?;
            let parsed: Result<Vec<f64>, _> =
                times.split(',').map(|t| t.trim().parse::<f64>()).collect();
            (
                target,
                parsed.map_err(|e| Failure::input(format!("invalid --times: {e}")))?,
                None,
            )
        }
    };
    let (_, target) = resolve_target(&target_text, &device)?;
    if durations.is_empty() {
        return Err(Failure::input("empty duration list"));
    }
    if let Some(steps) = args.steps {
        if durations.len() != steps {
            return Err(Failure::input(format!(
                "duration count {} does not match --steps {steps}",
                durations.len()
            )));
        }
    }
    let realized = propagate_durations(&device, &durations).map_err(Failure::input)?;
    let plain = f_test(&target, &realized).map_err(Failure::input)?;
    let phase = f_phase_invariant(&target, &realized).map_err(Failure::input)?;
    println!("f_test {plain:.16e}");
    println!("f_phase_invariant {phase:.16e}");
    if let Some(parsed) = reported {
        let reproduced = match parsed.objective {
            ObjectiveKind::Plain => plain,
            ObjectiveKind::PhaseInvariant => phase,
        };
        let drift = (reproduced - parsed.objective_value).abs();
        println!("report_drift {drift:.16e}");
        if drift > 1e-12 {
            return Err(Failure::input(format!(
                "re-evaluated objective drifted {drift:.3e} from the report"
            )));
        }
    }
    Ok(if phase <= args.tol { 0 } else { 1 })
}

fn cmd_gates() -> Result<u8, Failure> {
    println!("target gates (name(params) — qubits):");
    for (name, sig, qubits) in GATE_CATALOG {
        if sig.is_empty() {
            println!("  {name} — {qubits}");
        } else {
            println!("  {name}({sig}) — {qubits}");
        }
    }
    println!("  cu(theta,phi) — 2  [controlled standard one-qubit composition]");
    Ok(0)
}

fn cmd_devices(args: &DevicesArgs) -> Result<u8, Failure> {
    if let Some(name) = &args.export {
        let device = resolve_device(&DeviceArgs {
            device: name.clone(),
            params: args.params.clone(),
        })?;
        print!("{}", config::serialize_device(&device));
        return Ok(0);
    }
    println!("builtin devices (name — parameters):");
    for name in BUILTIN_DEVICES {
        println!(
            "  {name} — {}",
            builtin_signature(name).unwrap_or("(unknown)")
        );
    }
    println!("or pass a device-config file path to --device");
    Ok(0)
}

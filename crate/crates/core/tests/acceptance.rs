//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with the measured numbers (`--nocapture` shows them).

mod common;

use std::time::Instant;

use common::{heis2, heis2perm, jj2};
use gatesmith_core::control::{lie_closure, lowenthal_steps};
use gatesmith_core::device::builtin_device;
use gatesmith_core::gates::{baseline_step_counts, build_gate, GateSpec};
use gatesmith_core::matrix::{pauli_string, unitarity_defect};
use gatesmith_core::rng::{random_su2, SplitMix64};
use gatesmith_core::su2::{euler_three_step, jj_four_step, su2_from_unitary};
use gatesmith_core::synth::{
    f_phase_invariant, objective_gradient, propagate_durations, synthesize, ObjectiveKind,
    SynthesisOptions,
};
use gatesmith_core::Error;

fn gate(name: &str) -> gatesmith_core::matrix::UnitaryGate {
    build_gate(&GateSpec::new(name, vec![]).unwrap()).unwrap()
}

/// Criterion 1: closure dimensions for the builtin catalog, under a second
/// per device.
#[test]
fn criterion_1_controllability_dimensions() {
    let cases: Vec<(&str, Vec<gatesmith_core::matrix::HermitianOperator>, usize)> = vec![
        (
            "{σz, σx}",
            vec![
                pauli_string(1.0, "Z").unwrap(),
                pauli_string(1.0, "X").unwrap(),
            ],
            3,
        ),
        (
            "jj1(x=0.1)",
            builtin_device("jj1", &[("E_c", 10.0), ("E_J", 1.0)])
                .unwrap()
                .operators(),
            3,
        ),
        ("heis2", heis2().operators(), 15),
        ("heis2perm", heis2perm().operators(), 15),
        ("jj2", jj2().operators(), 15),
    ];
    for (name, ops, expected) in cases {
        let start = Instant::now();
        let closure = lie_closure(&ops).unwrap();
        let elapsed = start.elapsed();
        assert_eq!(
            closure.dimension, expected,
            "criterion 1 FAIL: {name} closure dimension {} ≠ {expected}",
            closure.dimension
        );
        assert_eq!(closure.is_full_su, expected == 3 || expected == 15);
        assert!(
            elapsed.as_secs_f64() < 1.0,
            "criterion 1 FAIL: {name} took {elapsed:.1?}"
        );
    }
    println!("criterion 1 PASS: closure dimensions 3/3/15/15/15, each under 1 s");
}

/// Criterion 2: Lowenthal parameter closed form over the x grid, plus the
/// orthogonal and x = 0.3 step counts.
#[test]
fn criterion_2_lowenthal_parameter() {
    let mut worst = 0.0f64;
    for i in 1..=10 {
        let x = 0.05 * i as f64;
        let device = builtin_device("jj1", &[("E_c", 1.0), ("E_J", x)]).unwrap();
        let ops = device.operators();
        let r = lowenthal_steps(&ops[0], &ops[1]).unwrap();
        let expected = x / (1.0 + x * x).sqrt();
        let err = (r.psi - expected).abs();
        worst = worst.max(err);
        assert!(
            err <= 1e-12,
            "criterion 2 FAIL: x={x}: psi {} vs closed form {expected}",
            r.psi
        );
        if (x - 0.3).abs() < 1e-9 {
            assert_eq!(r.steps, 4, "criterion 2 FAIL: x=0.3 steps {}", r.steps);
        }
    }
    let nmr = builtin_device("nmr1", &[]).unwrap().operators();
    let ortho = lowenthal_steps(&nmr[0], &nmr[1]).unwrap();
    assert_eq!(ortho.steps, 3, "criterion 2 FAIL: orthogonal pair steps");
    println!(
        "criterion 2 PASS: psi matches x/sqrt(1+x²) to {worst:.1e}; steps 3 and 4 as predicted"
    );
}

/// Criterion 3: 1000 random SU(2) targets through the three-step solver.
#[test]
fn criterion_3_euler_three_step() {
    let device = builtin_device("nmr1", &[]).unwrap();
    let ops = device.operators();
    let mut rng = SplitMix64::new(0xC3);
    let start = Instant::now();
    let mut worst = 0.0f64;
    for i in 0..1000 {
        let target = random_su2(&mut rng);
        let solved = euler_three_step(&ops[0], &ops[1], &target)
            .unwrap_or_else(|e| panic!("criterion 3 FAIL: target {i}: {e}"));
        worst = worst.max(solved.residual);
        assert!(
            solved.residual <= 1e-10,
            "criterion 3 FAIL: target {i} residual {:.3e}",
            solved.residual
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 2.0,
        "criterion 3 FAIL: {elapsed:.1?} exceeds 2 s"
    );
    println!(
        "criterion 3 PASS: 1000/1000 targets within 1e-10 (worst {worst:.1e}) in {elapsed:.1?}"
    );
}

/// Criterion 4: 500 discriminant-passing targets through the four-step
/// solver, plus the designated refusals.
#[test]
fn criterion_4_josephson_four_step() {
    let (e_c, e_j) = (10.0, 1.0);
    let mut rng = SplitMix64::new(0xC4);
    let mut solved = 0;
    let mut tried = 0;
    let mut worst = 0.0f64;
    while solved < 500 {
        tried += 1;
        assert!(tried < 10_000, "criterion 4 FAIL: sampling stalled");
        let target = random_su2(&mut rng);
        let p = su2_from_unitary(&target).unwrap();
        let disc =
            e_c * e_c * (p.w0 * p.w0 + p.w1 * p.w1) - e_j * e_j * (p.w2 * p.w2 + p.w3 * p.w3);
        if disc < 0.0 {
            continue;
        }
        let r = jj_four_step(e_c, e_j, &target)
            .unwrap_or_else(|e| panic!("criterion 4 FAIL: in-domain target refused: {e}"));
        worst = worst.max(r.residual);
        assert!(
            r.residual <= 1e-9,
            "criterion 4 FAIL: residual {:.3e}",
            r.residual
        );
        solved += 1;
    }

    let hadamard = gate("h");
    assert!(
        matches!(
            jj_four_step(1.0, 1.0, &hadamard),
            Err(Error::OutOfRegime { .. })
        ),
        "criterion 4 FAIL: psi = 1/√2 must refuse as out-of-regime"
    );
    let sigma_y =
        gatesmith_core::matrix::UnitaryGate::new(pauli_string(1.0, "Y").unwrap().matrix().clone())
            .unwrap();
    assert!(
        matches!(
            jj_four_step(e_c, e_j, &sigma_y),
            Err(Error::AnalyticDomain(_))
        ),
        "criterion 4 FAIL: negative discriminant must refuse"
    );
    println!("criterion 4 PASS: 500/500 in-domain targets within 1e-9 (worst {worst:.1e}); out-of-regime and negative-discriminant refused");
}

/// Criterion 5: 15-step synthesis of CNOT, SWAP and QFT2 on each two-qubit
/// device.
#[test]
fn criterion_5_two_qubit_synthesis() {
    let devices = [
        ("heis2", heis2(), 1e-6),
        ("heis2perm", heis2perm(), 1e-6),
        ("jj2", jj2(), 1e-5),
    ];
    for (name, device, threshold) in devices {
        let mut best = f64::INFINITY;
        for gate_name in ["cnot", "swap", "qft2"] {
            let target = gate(gate_name);
            let options = SynthesisOptions {
                restarts: 200,
                ..Default::default()
            };
            let start = Instant::now();
            let report = synthesize(&device, &target, gate_name, 15, &options).unwrap();
            let elapsed = start.elapsed();
            assert!(
                report.objective_value <= threshold,
                "criterion 5 FAIL: {name}/{gate_name} objective {:.3e} above {threshold:.0e}",
                report.objective_value
            );
            assert!(
                elapsed.as_secs_f64() < 600.0,
                "criterion 5 FAIL: {name}/{gate_name} took {elapsed:.1?}"
            );
            best = best.min(report.objective_value);
            println!(
                "criterion 5      {name}/{gate_name}: objective {:.3e} ({} restarts, {elapsed:.1?})",
                report.objective_value, report.restarts_used
            );
        }
        if threshold <= 1e-6 {
            assert!(
                best <= 1e-8,
                "criterion 5 FAIL: best {name} objective {best:.3e} above 1e-8"
            );
        }
    }
    println!("criterion 5 PASS: CNOT/SWAP/QFT2 within thresholds on heis2, heis2perm, jj2");
}

/// Criterion 6: planted 15-step sequences re-synthesized to 1e-8 in at
/// least 95 of 100 trials.
#[test]
fn criterion_6_planted_solutions() {
    let device = heis2();
    let mut rng = SplitMix64::new(2024);
    let mut successes = 0;
    for trial in 0..100u32 {
        let planted: Vec<f64> = (0..15).map(|_| rng.uniform() * 6.0).collect();
        let target = propagate_durations(&device, &planted).unwrap();
        let options = SynthesisOptions {
            seed: 1000 + u64::from(trial),
            ..Default::default()
        };
        let report = synthesize(&device, &target, "planted", 15, &options).unwrap();
        if report.objective_value <= 1e-8 {
            successes += 1;
        }
    }
    assert!(
        successes >= 95,
        "criterion 6 FAIL: {successes}/100 below the 95% bar"
    );
    println!("criterion 6 PASS: {successes}/100 planted targets re-synthesized to 1e-8");
}

/// Criterion 7: analytic gradient versus central finite differences on 100
/// random points.
#[test]
fn criterion_7_gradient_check() {
    let device = heis2();
    let mut rng = SplitMix64::new(0xC7);
    let target = {
        let ts: Vec<f64> = (0..15).map(|_| rng.uniform() * 5.0).collect();
        propagate_durations(&device, &ts).unwrap()
    };
    let h = 1e-6;
    let mut worst = 0.0f64;
    for point_idx in 0..100 {
        let kind = if point_idx % 2 == 0 {
            ObjectiveKind::PhaseInvariant
        } else {
            ObjectiveKind::Plain
        };
        let point: Vec<f64> = (0..15).map(|_| rng.uniform() * 5.0).collect();
        let grad = objective_gradient(&device, &target, kind, &point).unwrap();
        for j in 0..point.len() {
            let mut plus = point.clone();
            plus[j] += h;
            let mut minus = point.clone();
            minus[j] -= h;
            let up = eval(&device, kind, &target, &plus);
            let down = eval(&device, kind, &target, &minus);
            let fd = (up - down) / (2.0 * h);
            let scale = grad[j].abs().max(fd.abs());
            if scale < 1e-7 {
                continue; // both vanish; relative error is meaningless
            }
            let rel = (grad[j] - fd).abs() / scale;
            worst = worst.max(rel);
            assert!(
                rel <= 1e-5,
                "criterion 7 FAIL: point {point_idx} component {j}: rel {rel:.3e}"
            );
        }
    }
    println!(
        "criterion 7 PASS: 100 gradient points match finite differences (worst rel {worst:.1e})"
    );
}

fn eval(
    device: &gatesmith_core::device::DeviceModel,
    kind: ObjectiveKind,
    target: &gatesmith_core::matrix::UnitaryGate,
    durations: &[f64],
) -> f64 {
    let u = propagate_durations(device, durations).unwrap();
    match kind {
        ObjectiveKind::Plain => gatesmith_core::synth::f_test(target, &u).unwrap(),
        ObjectiveKind::PhaseInvariant => f_phase_invariant(target, &u).unwrap(),
    }
}

/// Criterion 8: the determinant obstruction pins plain-objective CNOT at
/// 8 − 4√2 while the phase-invariant objective converges.
#[test]
fn criterion_8_determinant_obstruction() {
    let device = heis2();
    let target = gate("cnot");
    let floor = 8.0 - 4.0 * 2.0f64.sqrt();

    let plain = synthesize(
        &device,
        &target,
        "cnot",
        15,
        &SynthesisOptions {
            objective: ObjectiveKind::Plain,
            restarts: 8,
            max_iters: 500,
            ..Default::default()
        },
    )
    .unwrap();
    assert!(
        plain.objective_value >= floor - 1e-9,
        "criterion 8 FAIL: plain objective {:.9} below the floor {floor:.9}",
        plain.objective_value
    );
    assert!(!plain.converged);

    let phase = synthesize(
        &device,
        &target,
        "cnot",
        15,
        &SynthesisOptions {
            restarts: 200,
            tol: 1e-6,
            ..Default::default()
        },
    )
    .unwrap();
    assert!(
        phase.converged,
        "criterion 8 FAIL: phase-invariant objective {:.3e} did not converge",
        phase.objective_value
    );
    println!(
        "criterion 8 PASS: plain CNOT pinned at {:.6} ≥ {floor:.6}; phase-invariant reaches {:.1e}",
        plain.objective_value, phase.objective_value
    );
}

/// Criterion 9: propagator unitarity defect stays within 1e-11 across the
/// device catalog (the propagation code itself also enforces this bound on
/// every construction).
#[test]
fn criterion_9_propagator_unitarity() {
    let mut worst = 0.0f64;
    for device in [heis2(), heis2perm(), jj2()] {
        for seed in 0..5u64 {
            let mut rng = SplitMix64::new(0xC9 + seed);
            let durations: Vec<f64> = (0..32).map(|_| rng.uniform() * 8.0 - 4.0).collect();
            let u = propagate_durations(&device, &durations).unwrap();
            let defect = unitarity_defect(u.matrix());
            worst = worst.max(defect);
            assert!(
                defect <= 1e-11,
                "criterion 9 FAIL: defect {defect:.3e} on {}",
                device.name()
            );
        }
    }
    let one_qubit = builtin_device("jj1", &[("E_c", 10.0), ("E_J", 1.0)]).unwrap();
    let mut rng = SplitMix64::new(0x91);
    let durations: Vec<f64> = (0..32).map(|_| rng.uniform() * 20.0).collect();
    let u = propagate_durations(&one_qubit, &durations).unwrap();
    worst = worst.max(unitarity_defect(u.matrix()));
    assert!(unitarity_defect(u.matrix()) <= 1e-11);
    println!("criterion 9 PASS: 32-step propagators stay unitary (worst defect {worst:.1e})");
}

/// Criterion 10: the baseline step-count table reproduces the reported
/// numbers exactly.
#[test]
fn criterion_10_baseline_table() {
    let one = baseline_step_counts("one_qubit").unwrap();
    assert_eq!(
        one,
        vec![
            ("standard", 4),
            ("standard_typical", 8),
            ("intrinsic_orthogonal", 3),
            ("intrinsic_josephson", 4),
        ],
        "criterion 10 FAIL: one-qubit table"
    );
    assert_eq!(
        baseline_step_counts("two_qubit").unwrap(),
        vec![("standard_cartan", 27), ("intrinsic", 15)],
        "criterion 10 FAIL: two-qubit table"
    );
    assert_eq!(
        baseline_step_counts("two_qubit_controlled").unwrap(),
        vec![("standard_cartan", 19), ("intrinsic", 15)],
        "criterion 10 FAIL: controlled table"
    );
    println!("criterion 10 PASS: baseline counts 4/8, 27/19, 3/4/15 reproduced");
}

//! Pulse-sequence propagation, the gate-distance objectives, analytic
//! gradients, and multi-start local optimization.
//!
//! A sequence applies `e^{−i t_j H}` factors right-to-left (step 1 acts
//! first); step j of a synthesized sequence draws its Hamiltonian from the
//! device's cycle order. The optimizer runs independent seeded restarts of
//! a BFGS descent with backtracking line search on the analytic gradient
//! and keeps the best result, so identical inputs always produce identical
//! reports.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::device::DeviceModel;
use crate::eig::HermitianEig;
use crate::error::Error;
use crate::matrix::{ComplexMatrix, UnitaryGate};
use crate::rng::SplitMix64;
use crate::tol::PROPAGATOR_TOL;
use crate::Result;

/// Which gate-distance objective to optimize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjectiveKind {
    /// Squared entrywise distance ‖U_gate − U‖².
    Plain,
    /// min over φ of ‖U_gate − e^{iφ}U‖² = 2d − 2|Tr(U_gate†U)|.
    PhaseInvariant,
}

impl ObjectiveKind {
    pub fn name(self) -> &'static str {
        match self {
            ObjectiveKind::Plain => "plain",
            ObjectiveKind::PhaseInvariant => "phase_invariant",
        }
    }
}

/// An explicit ordered pulse program for a device.
#[derive(Debug, Clone)]
pub struct PulseSequence<'d> {
    device: &'d DeviceModel,
    steps: Vec<(usize, f64)>,
}

impl<'d> PulseSequence<'d> {
    /// `steps` are (hamiltonian index, duration) pairs; durations must be
    /// finite and nonnegative.
    pub fn new(device: &'d DeviceModel, steps: Vec<(usize, f64)>) -> Result<Self> {
        for (pos, &(idx, t)) in steps.iter().enumerate() {
            if idx >= device.hamiltonians().len() {
                return Err(Error::InvalidHamiltonianIndex {
                    index: idx,
                    count: device.hamiltonians().len(),
                });
            }
            if !t.is_finite() || t < 0.0 {
                return Err(Error::InvalidDuration {
                    step: pos + 1,
                    value: t,
                });
            }
        }
        Ok(Self { device, steps })
    }

    /// Durations laid onto the device's cyclic Hamiltonian order.
    pub fn cyclic(device: &'d DeviceModel, durations: &[f64]) -> Result<Self> {
        let steps = durations
            .iter()
            .enumerate()
            .map(|(j, &t)| (device.cycle_index(j), t))
            .collect();
        Self::new(device, steps)
    }

    pub fn device(&self) -> &DeviceModel {
        self.device
    }

    pub fn steps(&self) -> &[(usize, f64)] {
        &self.steps
    }

    /// Realized propagator; the empty sequence gives the identity.
    pub fn propagate(&self) -> UnitaryGate {
        let mut u = ComplexMatrix::identity(self.device.dim());
        for &(idx, t) in &self.steps {
            let factor = self
                .device
                .operator(idx)
                .expect("validated index")
                .eig()
                .evolve(t);
            u = factor.matmul(&u).expect("dims fixed by device");
        }
        UnitaryGate::with_tolerance(u, PROPAGATOR_TOL).expect("product of spectral exponentials")
    }
}

/// Propagate raw durations over the device cycle. Unlike `PulseSequence`,
/// negative durations are accepted: `e^{−itH}` is unitary for any real t,
/// and the optimizer works on unconstrained variables.
pub fn propagate_durations(device: &DeviceModel, durations: &[f64]) -> Result<UnitaryGate> {
    for (j, &t) in durations.iter().enumerate() {
        if !t.is_finite() {
            return Err(Error::InvalidDuration {
                step: j + 1,
                value: t,
            });
        }
    }
    let plan = Plan::new(device);
    let u = plan.propagate(durations);
    Ok(UnitaryGate::with_tolerance(u, PROPAGATOR_TOL).expect("product of spectral exponentials"))
}

/// Squared entrywise distance `Σ_ij |A_ij − B_ij|²` between two gates.
pub fn f_test(u_gate: &UnitaryGate, u: &UnitaryGate) -> Result<f64> {
    if u_gate.dim() != u.dim() {
        return Err(Error::DimensionMismatch {
            left: u_gate.dim(),
            right: u.dim(),
        });
    }
    let value: f64 = u_gate
        .matrix()
        .entries()
        .iter()
        .zip(u.matrix().entries().iter())
        .map(|(a, b)| (a - b).norm_sqr())
        .sum();
    // Trace form 2d − 2 Re Tr(U_gate† U) agrees for unitary inputs.
    debug_assert!({
        let tau = u_gate.matrix().overlap(u.matrix());
        (value - (2.0 * u.dim() as f64 - 2.0 * tau.re)).abs() <= 1e-9
    });
    Ok(value)
}

/// Phase-minimized squared distance `2d − 2|Tr(U_gate†U)|`.
pub fn f_phase_invariant(u_gate: &UnitaryGate, u: &UnitaryGate) -> Result<f64> {
    if u_gate.dim() != u.dim() {
        return Err(Error::DimensionMismatch {
            left: u_gate.dim(),
            right: u.dim(),
        });
    }
    let tau = u_gate.matrix().overlap(u.matrix());
    Ok((2.0 * u.dim() as f64 - 2.0 * tau.norm()).max(0.0))
}

/// Result of a synthesis run.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthesisReport {
    pub target_name: String,
    pub durations: Vec<f64>,
    pub objective_value: f64,
    pub objective: ObjectiveKind,
    pub restarts_used: u32,
    pub iterations: u64,
    pub seed: u64,
    pub converged: bool,
}

/// Optimizer knobs; the defaults match the CLI defaults.
#[derive(Debug, Clone, Copy)]
pub struct SynthesisOptions {
    pub objective: ObjectiveKind,
    pub restarts: u32,
    pub seed: u64,
    pub max_iters: u32,
    pub tol: f64,
}

impl Default for SynthesisOptions {
    fn default() -> Self {
        Self {
            objective: ObjectiveKind::PhaseInvariant,
            restarts: 64,
            seed: 42,
            max_iters: 2000,
            tol: 1e-8,
        }
    }
}

/// Cached spectral decompositions for every Hamiltonian of a device, so a
/// step factor is two small matrix products instead of a fresh Jacobi run.
struct Plan<'d> {
    device: &'d DeviceModel,
    eigs: Vec<HermitianEig>,
}

impl<'d> Plan<'d> {
    fn new(device: &'d DeviceModel) -> Self {
        let eigs = device.hamiltonians().iter().map(|(_, h)| h.eig()).collect();
        Self { device, eigs }
    }

    fn dim(&self) -> usize {
        self.device.dim()
    }

    fn ham_index(&self, step: usize) -> usize {
        self.device.cycle_index(step)
    }

    fn factor(&self, step: usize, t: f64) -> ComplexMatrix {
        self.eigs[self.ham_index(step)].evolve(t)
    }

    fn propagate(&self, durations: &[f64]) -> ComplexMatrix {
        let mut u = ComplexMatrix::identity(self.dim());
        for (j, &t) in durations.iter().enumerate() {
            u = self.factor(j, t).matmul(&u).expect("square");
        }
        u
    }

    /// Initial sampling window per step: one period of the fastest
    /// eigenphase, 2π/‖H‖_spec.
    fn sampling_windows(&self, num_steps: usize) -> Vec<f64> {
        (0..num_steps)
            .map(|j| {
                let norm = self.eigs[self.ham_index(j)].spectral_norm();
                if norm > 1e-12 {
                    2.0 * core::f64::consts::PI / norm
                } else {
                    2.0 * core::f64::consts::PI
                }
            })
            .collect()
    }

    fn objective(&self, kind: ObjectiveKind, target: &ComplexMatrix, durations: &[f64]) -> f64 {
        let u = self.propagate(durations);
        let tau = target.overlap(&u);
        let d = self.dim() as f64;
        match kind {
            ObjectiveKind::Plain => 2.0 * d - 2.0 * tau.re,
            ObjectiveKind::PhaseInvariant => 2.0 * d - 2.0 * tau.norm(),
        }
    }

    /// Exact gradient of the objective in the step durations.
    ///
    /// With U = E_n…E_1 and ∂E_j/∂t_j = −i H_j E_j,
    /// ∂Tr(T†U)/∂t_j = −i Tr(T† L_j H_j R_j) where R_j = E_j…E_1 and
    /// L_j = E_n…E_{j+1}.
    fn gradient(&self, kind: ObjectiveKind, target: &ComplexMatrix, durations: &[f64]) -> Vec<f64> {
        let n = durations.len();
        let mut factors = Vec::with_capacity(n);
        let mut prefixes = Vec::with_capacity(n);
        let mut acc = ComplexMatrix::identity(self.dim());
        for (j, &t) in durations.iter().enumerate() {
            let e = self.factor(j, t);
            acc = e.matmul(&acc).expect("square");
            factors.push(e);
            prefixes.push(acc.clone());
        }
        let u = prefixes
            .last()
            .cloned()
            .unwrap_or_else(|| ComplexMatrix::identity(self.dim()));
        let tau = target.overlap(&u);
        let target_adj = target.adjoint();

        let mut grad = vec![0.0; n];
        let mut left = ComplexMatrix::identity(self.dim());
        for j in (0..n).rev() {
            let tl = target_adj.matmul(&left).expect("square");
            let h = self
                .device
                .operator(self.ham_index(j))
                .expect("cycle index");
            let th = tl.matmul(h.matrix()).expect("square");
            let term = trace_product(&th, &prefixes[j]);
            grad[j] = match kind {
                ObjectiveKind::Plain => -2.0 * term.im,
                ObjectiveKind::PhaseInvariant => {
                    -2.0 * (tau.conj() * term).im / tau.norm().max(1e-30)
                }
            };
            left = left.matmul(&factors[j]).expect("square");
        }
        grad
    }
}

/// `Tr(A·B)` without forming the product.
fn trace_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Complex64 {
    let n = a.dim();
    let mut sum = Complex64::ZERO;
    for i in 0..n {
        for k in 0..n {
            sum += a.get(i, k) * b.get(k, i);
        }
    }
    sum
}

/// Analytic gradient of the chosen objective at `durations`.
pub fn objective_gradient(
    device: &DeviceModel,
    target: &UnitaryGate,
    objective: ObjectiveKind,
    durations: &[f64],
) -> Result<Vec<f64>> {
    if target.dim() != device.dim() {
        return Err(Error::DimensionMismatch {
            left: device.dim(),
            right: target.dim(),
        });
    }
    for (j, &t) in durations.iter().enumerate() {
        if !t.is_finite() {
            return Err(Error::InvalidDuration {
                step: j + 1,
                value: t,
            });
        }
    }
    Ok(Plan::new(device).gradient(objective, target.matrix(), durations))
}

struct Descent {
    x: Vec<f64>,
    f: f64,
    iterations: u32,
}

/// BFGS with Armijo backtracking. Returns the best point reached; a
/// nonfinite objective or gradient abandons the start with `f = ∞`.
fn descend(
    plan: &Plan,
    kind: ObjectiveKind,
    target: &ComplexMatrix,
    mut x: Vec<f64>,
    max_iters: u32,
    tol: f64,
) -> Descent {
    let n = x.len();
    let mut f = plan.objective(kind, target, &x);
    if !f.is_finite() {
        return Descent {
            x,
            f: f64::INFINITY,
            iterations: 0,
        };
    }
    let mut g = plan.gradient(kind, target, &x);
    // Inverse Hessian estimate, dense row-major.
    let mut h_inv: Vec<f64> = identity_mat(n);
    let mut first_update = true;
    let mut iterations = 0;

    for _ in 0..max_iters {
        if f <= tol {
            break;
        }
        let g_norm = g.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
        if g_norm <= 1e-14 {
            break;
        }
        if g.iter().any(|v| !v.is_finite()) {
            return Descent {
                x,
                f: f64::INFINITY,
                iterations,
            };
        }

        let mut p = mat_vec(&h_inv, &g, n);
        for v in &mut p {
            *v = -*v;
        }
        let mut slope: f64 = p.iter().zip(&g).map(|(pi, gi)| pi * gi).sum();
        if slope.is_nan() || slope >= 0.0 {
            // Curvature estimate went bad; restart from steepest descent.
            h_inv = identity_mat(n);
            first_update = true;
            for (pi, gi) in p.iter_mut().zip(&g) {
                *pi = -gi;
            }
            slope = -g.iter().map(|v| v * v).sum::<f64>();
        }

        // Backtracking Armijo line search.
        let mut alpha = 1.0f64;
        let mut x_new;
        let mut f_new;
        let mut accepted = false;
        for _ in 0..60 {
            x_new = x
                .iter()
                .zip(&p)
                .map(|(xi, pi)| xi + alpha * pi)
                .collect::<Vec<f64>>();
            f_new = plan.objective(kind, target, &x_new);
            if f_new.is_finite() && f_new <= f + 1e-4 * alpha * slope {
                let g_new = plan.gradient(kind, target, &x_new);
                let s: Vec<f64> = x_new.iter().zip(&x).map(|(a, b)| a - b).collect();
                let y: Vec<f64> = g_new.iter().zip(&g).map(|(a, b)| a - b).collect();
                let sy: f64 = s.iter().zip(&y).map(|(a, b)| a * b).sum();
                let yy: f64 = y.iter().map(|v| v * v).sum();
                if sy > 1e-12 * yy.max(1e-300) {
                    if first_update {
                        // Scale the initial estimate to the local curvature.
                        let scale = sy / yy.max(1e-300);
                        h_inv = identity_mat(n);
                        for v in &mut h_inv {
                            *v *= scale;
                        }
                        first_update = false;
                    }
                    bfgs_update(&mut h_inv, &s, &y, sy, n);
                }
                x = x_new;
                f = f_new;
                g = g_new;
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        iterations += 1;
        if !accepted {
            break; // no progress at machine scale
        }
    }

    Descent { x, f, iterations }
}

fn identity_mat(n: usize) -> Vec<f64> {
    let mut m = vec![0.0; n * n];
    for i in 0..n {
        m[i * n + i] = 1.0;
    }
    m
}

fn mat_vec(m: &[f64], v: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n];
    for i in 0..n {
        let row = &m[i * n..(i + 1) * n];
        out[i] = row.iter().zip(v).map(|(a, b)| a * b).sum();
    }
    out
}

/// H ← (I − ρ s yᵀ) H (I − ρ y sᵀ) + ρ s sᵀ with ρ = 1/(sᵀy).
fn bfgs_update(h: &mut [f64], s: &[f64], y: &[f64], sy: f64, n: usize) {
    let rho = 1.0 / sy;
    let hy = mat_vec(h, y, n);
    let yhy: f64 = y.iter().zip(&hy).map(|(a, b)| a * b).sum();
    // H += ρ²(yᵀHy)ssᵀ + ρ ssᵀ − ρ(s(Hy)ᵀ + (Hy)sᵀ)
    let c = rho * rho * yhy + rho;
    for i in 0..n {
        for j in 0..n {
            h[i * n + j] += c * s[i] * s[j] - rho * (s[i] * hy[j] + hy[i] * s[j]);
        }
    }
}

/// Multi-start synthesis of `target` in `num_steps` cyclic steps.
///
/// Each restart draws starting durations uniformly from per-step windows
/// [0, 2π/‖H‖) using a stream derived from (seed, start index), descends,
/// and the lowest objective wins (ties within 1e-15 go to the earliest
/// start). Restarts stop early once the tolerance is met. The report is
/// returned whether or not the run converged.
pub fn synthesize(
    device: &DeviceModel,
    target: &UnitaryGate,
    target_name: &str,
    num_steps: usize,
    options: &SynthesisOptions,
) -> Result<SynthesisReport> {
    if num_steps == 0 {
        return Err(Error::InvalidStepCount(num_steps));
    }
    if target.dim() != device.dim() {
        return Err(Error::DimensionMismatch {
            left: device.dim(),
            right: target.dim(),
        });
    }
    let plan = Plan::new(device);
    let windows = plan.sampling_windows(num_steps);

    let mut best: Option<(f64, Vec<f64>)> = None;
    let mut total_iterations: u64 = 0;
    let mut restarts_used = 0;

    for start in 0..options.restarts.max(1) {
        restarts_used = start + 1;
        let mut rng = SplitMix64::for_start(options.seed, start);
        let x0: Vec<f64> = windows.iter().map(|w| rng.uniform() * w).collect();
        let result = descend(
            &plan,
            options.objective,
            target.matrix(),
            x0,
            options.max_iters,
            options.tol,
        );
        total_iterations += u64::from(result.iterations);
        if !result.f.is_finite() {
            continue; // abandoned start
        }
        let better = match &best {
            None => true,
            Some((bf, _)) => result.f < bf - 1e-15,
        };
        if better {
            best = Some((result.f, result.x));
        }
        if let Some((bf, _)) = &best {
            if *bf <= options.tol {
                break;
            }
        }
    }

    let durations = best.map(|(_, x)| x).unwrap_or_else(|| vec![0.0; num_steps]);
    let realized = UnitaryGate::with_tolerance(plan.propagate(&durations), PROPAGATOR_TOL)
        .expect("product of spectral exponentials");
    let objective_value = match options.objective {
        ObjectiveKind::Plain => f_test(target, &realized)?,
        ObjectiveKind::PhaseInvariant => f_phase_invariant(target, &realized)?,
    };

    Ok(SynthesisReport {
        target_name: String::from(target_name),
        durations,
        objective_value,
        objective: options.objective,
        restarts_used,
        iterations: total_iterations,
        seed: options.seed,
        converged: objective_value <= options.tol,
    })
}

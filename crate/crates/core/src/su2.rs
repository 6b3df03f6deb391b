//! Closed-form SU(2) pulse solvers.
//!
//! `euler_three_step` handles orthogonal Hamiltonian pairs with the
//! classic three-rotation decomposition; `jj_four_step` solves the charge
//! Josephson junction pair H1 = −½E_J σx, H2 = ½E_c σz − ½E_J σx in four
//! alternating steps. Both verify their own output by re-propagating and
//! refuse to return durations that miss the target.

use alloc::format;

use num_complex::Complex64;

use crate::error::Error;
use crate::math;
use crate::matrix::{expm_hermitian, pauli_string, ComplexMatrix, HermitianOperator, UnitaryGate};
use crate::synth::f_phase_invariant;
use crate::tol::{EULER_ORTHO_TOL, EULER_VERIFY_TOL, JJ_VERIFY_TOL};
use crate::Result;

/// SU(2) coordinates of a 2×2 unitary: `U = e^{iφ}(w0 𝕀 − i(w·σ))`.
#[derive(Debug, Clone, PartialEq)]
pub struct Su2Params {
    pub w0: f64,
    pub w1: f64,
    pub w2: f64,
    pub w3: f64,
    /// Stripped global phase, in (−π/2, π/2] for the principal det branch.
    pub phase: f64,
}

impl Su2Params {
    pub fn w(&self) -> [f64; 4] {
        [self.w0, self.w1, self.w2, self.w3]
    }

    /// Rebuild the unitary `e^{iφ}(w0 𝕀 − i(w·σ))`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let phase = Complex64::new(0.0, self.phase).exp();
        let (w0, w1, w2, w3) = (self.w0, self.w1, self.w2, self.w3);
        ComplexMatrix::new(
            2,
            alloc::vec![
                phase * Complex64::new(w0, -w3),
                phase * Complex64::new(-w2, -w1),
                phase * Complex64::new(w2, -w1),
                phase * Complex64::new(w0, w3),
            ],
        )
        .expect("fixed 2x2 shape")
    }
}

/// Strip the global phase of a 2×2 unitary and read off its SU(2)
/// coordinates. The phase is ½·arg det U on the principal branch, so the
/// det-1 representative is unique up to the overall ± that a global phase
/// absorbs anyway.
pub fn su2_from_unitary(u: &UnitaryGate) -> Result<Su2Params> {
    if u.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: 2,
        });
    }
    let m = u.matrix();
    let det = m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0);
    let phase = 0.5 * det.arg();
    let unphase = Complex64::new(0.0, -phase).exp();
    let a = m.get(0, 0) * unphase;
    let b = m.get(0, 1) * unphase;
    Ok(Su2Params {
        w0: a.re,
        w1: -b.im,
        w2: -b.re,
        w3: -a.im,
        phase,
    })
}

/// Bloch decomposition of a 2×2 Hermitian operator: `H = c0 𝕀 + a·σ`.
fn bloch_vector(h: &HermitianOperator) -> [f64; 3] {
    let m = h.matrix();
    let off = m.get(0, 1);
    [off.re, -off.im, 0.5 * (m.get(0, 0).re - m.get(1, 1).re)]
}

fn norm3(v: [f64; 3]) -> f64 {
    math::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2])
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// SU(2) element rotating the standard frame onto the orthonormal frame
/// (e1, e2, e3): maps σx → e1·σ, σy → e2·σ, σz → e3·σ.
fn frame_rotation(e1: [f64; 3], e2: [f64; 3], e3: [f64; 3]) -> ComplexMatrix {
    // Quaternion from the rotation matrix with columns e1, e2, e3
    // (Shepperd's method, branch on the largest diagonal combination).
    let r = [
        [e1[0], e2[0], e3[0]],
        [e1[1], e2[1], e3[1]],
        [e1[2], e2[2], e3[2]],
    ];
    let trace = r[0][0] + r[1][1] + r[2][2];
    let (q0, q1, q2, q3);
    if trace >= r[0][0].max(r[1][1]).max(r[2][2]) {
        let s = math::sqrt(1.0 + trace) * 2.0;
        q0 = 0.25 * s;
        q1 = (r[2][1] - r[1][2]) / s;
        q2 = (r[0][2] - r[2][0]) / s;
        q3 = (r[1][0] - r[0][1]) / s;
    } else if r[0][0] >= r[1][1].max(r[2][2]) {
        let s = math::sqrt(1.0 + r[0][0] - r[1][1] - r[2][2]) * 2.0;
        q0 = (r[2][1] - r[1][2]) / s;
        q1 = 0.25 * s;
        q2 = (r[0][1] + r[1][0]) / s;
        q3 = (r[0][2] + r[2][0]) / s;
    } else if r[1][1] >= r[2][2] {
        let s = math::sqrt(1.0 + r[1][1] - r[0][0] - r[2][2]) * 2.0;
        q0 = (r[0][2] - r[2][0]) / s;
        q1 = (r[0][1] + r[1][0]) / s;
        q2 = 0.25 * s;
        q3 = (r[1][2] + r[2][1]) / s;
    } else {
        let s = math::sqrt(1.0 + r[2][2] - r[0][0] - r[1][1]) * 2.0;
        q0 = (r[1][0] - r[0][1]) / s;
        q1 = (r[0][2] + r[2][0]) / s;
        q2 = (r[1][2] + r[2][1]) / s;
        q3 = 0.25 * s;
    }
    // (q0, q) ↦ q0 𝕀 − i q·σ
    ComplexMatrix::new(
        2,
        alloc::vec![
            Complex64::new(q0, -q3),
            Complex64::new(-q2, -q1),
            Complex64::new(q2, -q1),
            Complex64::new(q0, q3),
        ],
    )
    .expect("fixed 2x2 shape")
}

/// Three-step analytic result; `residual` is the phase-invariant distance
/// of the re-propagated sequence from the target.
#[derive(Debug, Clone)]
pub struct EulerThreeStep {
    /// Durations (t1, t2, t3) for the pattern H1, H2, H1 (t1 acts first).
    pub durations: [f64; 3],
    pub residual: f64,
}

/// Solve `W = e^{−i t3 H1} e^{−i t2 H2} e^{−i t1 H1}` for an orthogonal
/// pair. Durations come back reduced to [0, 4π/ω) where ω = 2‖a‖ is the
/// rotation rate of the Hamiltonian's traceless part.
///
/// Orthogonality is checked on the traceless parts: trace components only
/// contribute a global phase, and it is the rotation axes that must be
/// perpendicular for the Euler construction to cover SU(2).
pub fn euler_three_step(
    h1: &HermitianOperator,
    h2: &HermitianOperator,
    target: &UnitaryGate,
) -> Result<EulerThreeStep> {
    if h1.dim() != 2 || h2.dim() != 2 || target.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: h1.dim().max(h2.dim()),
            right: target.dim(),
        });
    }
    let a = bloch_vector(h1);
    let b = bloch_vector(h2);
    let (na, nb) = (norm3(a), norm3(b));
    if na <= 1e-14 || nb <= 1e-14 {
        return Err(Error::NotGenerating {
            dimension: if na <= 1e-14 && nb <= 1e-14 { 0 } else { 1 },
        });
    }
    let e3 = [a[0] / na, a[1] / na, a[2] / na];
    let e1 = [b[0] / nb, b[1] / nb, b[2] / nb];
    let overlap = dot3(e3, e1);
    if overlap.abs() > EULER_ORTHO_TOL {
        return Err(Error::NonOrthogonalPair { overlap });
    }
    let e2 = cross3(e3, e1);

    // Work in the frame where H1's axis is z and H2's axis is x.
    let s = frame_rotation(e1, e2, e3);
    let w = su2_from_unitary(target)?;
    let v = w.reconstruct().scale(Complex64::new(0.0, -w.phase).exp());
    let v_tilde = s.adjoint().matmul(&v)?.matmul(&s)?;

    // Ṽ = Rz(γ) Rx(β) Rz(α):
    //   Ṽ00 = cos(β/2) e^{−i(γ+α)/2},  Ṽ01 = −i sin(β/2) e^{−i(γ−α)/2}
    let v00 = v_tilde.get(0, 0);
    let v01 = v_tilde.get(0, 1);
    let (alpha, beta, gamma);
    if v01.norm() <= 1e-12 {
        beta = 0.0;
        gamma = 0.0;
        alpha = -2.0 * v00.arg();
    } else if v00.norm() <= 1e-12 {
        beta = core::f64::consts::PI;
        gamma = 0.0;
        alpha = 2.0 * (Complex64::new(0.0, 1.0) * v01).arg();
    } else {
        beta = 2.0 * math::atan2(v01.norm(), v00.norm());
        let sum = -2.0 * v00.arg();
        let diff = -2.0 * (Complex64::new(0.0, 1.0) * v01).arg();
        alpha = 0.5 * (sum - diff);
        gamma = 0.5 * (sum + diff);
    }

    // Angle θ ↦ duration θ/(2‖a‖); period 4π in θ.
    let p1 = 2.0 * core::f64::consts::PI / na;
    let p2 = 2.0 * core::f64::consts::PI / nb;
    let durations = [
        math::rem_euclid(alpha / (2.0 * na), p1),
        math::rem_euclid(beta / (2.0 * nb), p2),
        math::rem_euclid(gamma / (2.0 * na), p1),
    ];

    let realized = propagate_pair(
        h1,
        h2,
        &[(0, durations[0]), (1, durations[1]), (0, durations[2])],
    );
    let residual = f_phase_invariant(target, &realized)?;
    if residual > EULER_VERIFY_TOL {
        return Err(Error::AnalyticDomain(format!(
            "three-step reconstruction residual {residual:.3e}"
        )));
    }
    Ok(EulerThreeStep {
        durations,
        residual,
    })
}

/// Four-step analytic result for the Josephson pair.
#[derive(Debug, Clone)]
pub struct JjFourStep {
    /// Durations (t1, t2, t3, t4) for the pattern H1, H2, H1, H2
    /// (t1 acts first).
    pub durations: [f64; 4],
    /// Whole periods added to land each duration in [0, period).
    pub branch_k: [u32; 4],
    pub residual: f64,
}

/// Solve `W = e^{−i t4 H2} e^{−i t3 H1} e^{−i t2 H2} e^{−i t1 H1}` for
/// H1 = −½E_J σx and H2 = ½E_c σz − ½E_J σx.
///
/// Requires the weak-tunneling regime ψ = x/√(1+x²) < ½ (x = E_J/E_c) and
/// a target with E_c²(w0²+w1²) ≥ E_J²(w2²+w3²); outside that set the
/// four-step family has no real solution and numeric synthesis takes over.
pub fn jj_four_step(e_c: f64, e_j: f64, target: &UnitaryGate) -> Result<JjFourStep> {
    if e_c.is_nan() || e_c <= 0.0 {
        return Err(Error::NonPositiveParameter {
            device: "jj1".into(),
            name: "E_c".into(),
            value: e_c,
        });
    }
    if e_j.is_nan() || e_j <= 0.0 {
        return Err(Error::NonPositiveParameter {
            device: "jj1".into(),
            name: "E_J".into(),
            value: e_j,
        });
    }
    let x = e_j / e_c;
    let psi = x / math::sqrt(1.0 + x * x);
    if psi >= 0.5 {
        return Err(Error::OutOfRegime { psi });
    }
    let w = su2_from_unitary(target)?;

    let omega = math::hypot(e_c, e_j);
    let period1 = 4.0 * core::f64::consts::PI / e_j;
    let period2 = 4.0 * core::f64::consts::PI / omega;

    // Quaternion split q = z + ζ j over ℂ = span{1, σx-direction}: the H1
    // factor is the complex unit e^{−i a} with a = E_J t/2; the H2 factor
    // has z = cos b − i(E_J/Ω) sin b, ζ = i(E_c/Ω) sin b with b = Ω t/2.
    let z = Complex64::new(w.w0, w.w1);
    let zeta = Complex64::new(w.w2, w.w3);
    let zn2 = z.norm_sqr();
    let zetan2 = zeta.norm_sqr();
    let disc = e_c * e_c * zn2 - e_j * e_j * zetan2;

    let xs = e_j / omega;
    let zs = e_c / omega;

    let raw = if zetan2 <= 1e-28 {
        // Target already in span{𝕀, σx}: one H1 step does it.
        let a1 = math::atan2(-w.w1, w.w0);
        [2.0 * a1 / e_j, 0.0, 0.0, 0.0]
    } else {
        if disc < 0.0 {
            return Err(Error::AnalyticDomain(format!(
                "discriminant E_c²(w0²+w1²) − E_J²(w2²+w3²) = {disc:.6e} is negative"
            )));
        }
        // Step-4 angle: tan b4 = 2 Im(ζz) / (zs(|z|²−|ζ|²) − 2 xs Re(ζz)).
        let zz = zeta * z;
        let num = 2.0 * zz.im;
        let den = zs * (zn2 - zetan2) - 2.0 * xs * zz.re;
        let b4 = if num == 0.0 && den == 0.0 {
            0.0
        } else {
            math::atan2(num, den)
        };
        let (sb4, cb4) = math::sin_cos(b4);
        let zb4 = Complex64::new(cb4, -xs * sb4);

        // Peel the outer factors: B(−b4)·W·A(−a1) must equal A(a3)B(b2).
        let k1 = zb4.conj() * z + Complex64::new(0.0, zs * sb4) * zeta.conj();
        let k2 = zb4.conj() * zeta - Complex64::new(0.0, zs * sb4) * z.conj();

        // |K2| = |ζ| by the b4 choice; the step-2 angle satisfies
        // tan b2 = −Ω|ζ|/√disc, the removable-singularity-free form.
        let sb2 = (-k2.norm() / zs).max(-1.0);
        let cb2 = math::sqrt((1.0 - sb2 * sb2).max(0.0));
        let b2 = math::atan2(sb2, cb2);
        let zb2 = Complex64::new(cb2, -xs * sb2);

        let sum = zb2.arg() - k1.arg();
        let diff = Complex64::new(0.0, zs * sb2).arg() - k2.arg();
        let a3 = 0.5 * (sum + diff);
        let a1 = 0.5 * (sum - diff);

        [
            2.0 * a1 / e_j,
            2.0 * b2 / omega,
            2.0 * a3 / e_j,
            2.0 * b4 / omega,
        ]
    };

    let periods = [period1, period2, period1, period2];
    let mut durations = [0.0; 4];
    let mut branch_k = [0u32; 4];
    for i in 0..4 {
        durations[i] = math::rem_euclid(raw[i], periods[i]);
        branch_k[i] = libm::round((durations[i] - raw[i]) / periods[i]) as u32;
    }

    let h1 = pauli_string(-0.5 * e_j, "X")?;
    let h2 = pauli_string(0.5 * e_c, "Z")?.add(&pauli_string(-0.5 * e_j, "X")?)?;
    let realized = propagate_pair(
        &h1,
        &h2,
        &[
            (0, durations[0]),
            (1, durations[1]),
            (0, durations[2]),
            (1, durations[3]),
        ],
    );
    let residual = f_phase_invariant(target, &realized)?;
    if residual > JJ_VERIFY_TOL {
        return Err(Error::AnalyticDomain(format!(
            "four-step reconstruction residual {residual:.3e}"
        )));
    }
    Ok(JjFourStep {
        durations,
        branch_k,
        residual,
    })
}

/// Right-to-left product of `e^{−i t H}` factors over a two-Hamiltonian set.
fn propagate_pair(
    h1: &HermitianOperator,
    h2: &HermitianOperator,
    steps: &[(usize, f64)],
) -> UnitaryGate {
    let mut u = ComplexMatrix::identity(2);
    for &(idx, t) in steps {
        let h = if idx == 0 { h1 } else { h2 };
        let factor = expm_hermitian(h, t);
        u = factor.matrix().matmul(&u).expect("2x2 product");
    }
    UnitaryGate::with_tolerance(u, crate::tol::PROPAGATOR_TOL).expect("product of unitaries")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::unitarity_defect;

    fn gate(entries: [Complex64; 4]) -> UnitaryGate {
        UnitaryGate::new(ComplexMatrix::new(2, entries.to_vec()).unwrap()).unwrap()
    }

    fn hadamard() -> UnitaryGate {
        let s = 1.0 / math::sqrt(2.0);
        gate([
            Complex64::new(s, 0.0),
            Complex64::new(s, 0.0),
            Complex64::new(s, 0.0),
            Complex64::new(-s, 0.0),
        ])
    }

    fn identity_gate() -> UnitaryGate {
        UnitaryGate::new(ComplexMatrix::identity(2)).unwrap()
    }

    #[test]
    fn su2_params_identity() {
        let p = su2_from_unitary(&identity_gate()).unwrap();
        assert_eq!(p.w(), [1.0, 0.0, 0.0, 0.0]);
        assert_eq!(p.phase, 0.0);
    }

    #[test]
    fn su2_params_hadamard() {
        let p = su2_from_unitary(&hadamard()).unwrap();
        let s = 1.0 / math::sqrt(2.0);
        assert!((p.phase - core::f64::consts::FRAC_PI_2).abs() <= 1e-14);
        assert!((p.w0).abs() <= 1e-14);
        assert!((p.w1 - s).abs() <= 1e-14);
        assert!((p.w2).abs() <= 1e-14);
        assert!((p.w3 - s).abs() <= 1e-14);
        assert!(p.reconstruct().max_entry_distance(hadamard().matrix()) <= 1e-12);
    }

    #[test]
    fn su2_params_y_rotation() {
        // e^{−i(π/4)σy}: w = (cos π/4, 0, sin π/4, 0), phase 0
        let h = pauli_string(1.0, "Y").unwrap();
        let u = expm_hermitian(&h, core::f64::consts::FRAC_PI_4);
        let p = su2_from_unitary(&u).unwrap();
        let c = math::cos(core::f64::consts::FRAC_PI_4);
        assert!((p.w0 - c).abs() <= 1e-14);
        assert!((p.w2 - c).abs() <= 1e-14);
        assert!(p.w1.abs() <= 1e-14 && p.w3.abs() <= 1e-14);
        assert!(p.phase.abs() <= 1e-14);
    }

    #[test]
    fn su2_round_trip_random() {
        let mut rng = crate::rng::SplitMix64::new(0x9E37);
        for _ in 0..200 {
            let u = crate::rng::random_su2(&mut rng);
            let p = su2_from_unitary(&u).unwrap();
            let norm = p.w0 * p.w0 + p.w1 * p.w1 + p.w2 * p.w2 + p.w3 * p.w3;
            assert!((norm - 1.0).abs() <= 1e-12);
            assert!(p.reconstruct().max_entry_distance(u.matrix()) <= 1e-12);
        }
    }

    #[test]
    fn euler_identity_target_is_all_zero() {
        let z = pauli_string(1.0, "Z").unwrap();
        let x = pauli_string(1.0, "X").unwrap();
        let r = euler_three_step(&z, &x, &identity_gate()).unwrap();
        assert_eq!(r.durations, [0.0, 0.0, 0.0]);
    }

    #[test]
    fn euler_single_axis_target() {
        let z = pauli_string(1.0, "Z").unwrap();
        let x = pauli_string(1.0, "X").unwrap();
        let a = 0.83;
        let target = expm_hermitian(&z, a);
        let r = euler_three_step(&z, &x, &target).unwrap();
        assert!((r.durations[0] - a).abs() <= 1e-12);
        assert!(r.durations[1].abs() <= 1e-12);
        assert!(r.durations[2].abs() <= 1e-12);
    }

    #[test]
    fn euler_rejects_non_orthogonal_pair() {
        let z = pauli_string(1.0, "Z").unwrap();
        let zx = pauli_string(1.0, "Z")
            .unwrap()
            .add(&pauli_string(0.4, "X").unwrap())
            .unwrap();
        assert!(matches!(
            euler_three_step(&z, &zx, &identity_gate()),
            Err(Error::NonOrthogonalPair { .. })
        ));
    }

    #[test]
    fn euler_random_targets_reconstruct() {
        let z = pauli_string(1.0, "Z").unwrap();
        let x = pauli_string(1.0, "X").unwrap();
        let mut rng = crate::rng::SplitMix64::new(0xABCD);
        for i in 0..200 {
            let target = crate::rng::random_su2(&mut rng);
            let r = euler_three_step(&z, &x, &target).unwrap();
            assert!(r.residual <= 1e-10, "case {i}: residual {:.3e}", r.residual);
            for (j, &t) in r.durations.iter().enumerate() {
                let period = 2.0 * core::f64::consts::PI;
                assert!((0.0..period).contains(&t), "case {i} duration {j} = {t}");
            }
        }
    }

    #[test]
    fn euler_works_for_scaled_pair() {
        // Different rotation rates: H1 = 2.5 σz, H2 = 0.7 σx.
        let h1 = pauli_string(2.5, "Z").unwrap();
        let h2 = pauli_string(0.7, "X").unwrap();
        let mut rng = crate::rng::SplitMix64::new(77);
        for _ in 0..50 {
            let target = crate::rng::random_su2(&mut rng);
            let r = euler_three_step(&h1, &h2, &target).unwrap();
            assert!(r.residual <= 1e-10);
        }
    }

    #[test]
    fn jj_identity_target() {
        let r = jj_four_step(10.0, 1.0, &identity_gate()).unwrap();
        assert_eq!(r.durations, [0.0, 0.0, 0.0, 0.0]);
        assert!(r.residual <= 1e-12);
    }

    #[test]
    fn jj_hadamard() {
        let r = jj_four_step(10.0, 1.0, &hadamard()).unwrap();
        assert!(r.residual <= 1e-9, "residual {:.3e}", r.residual);
    }

    #[test]
    fn jj_x_axis_targets_use_single_step() {
        // w2 = w3 = 0 branch: only the first duration may be nonzero.
        let h = pauli_string(1.0, "X").unwrap();
        let target = expm_hermitian(&h, 0.3);
        let r = jj_four_step(10.0, 1.0, &target).unwrap();
        assert!(r.durations[1] == 0.0 && r.durations[2] == 0.0 && r.durations[3] == 0.0);
        assert!(r.residual <= 1e-12);
    }

    #[test]
    fn jj_out_of_regime() {
        assert!(matches!(
            jj_four_step(1.0, 1.0, &hadamard()),
            Err(Error::OutOfRegime { .. })
        ));
    }

    #[test]
    fn jj_negative_discriminant() {
        // w0 = w1 = 0: disc = −E_J²(w2²+w3²) < 0. Take W = −iσy.
        let target = gate([
            Complex64::ZERO,
            Complex64::new(-1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::ZERO,
        ]);
        assert!(matches!(
            jj_four_step(10.0, 1.0, &target),
            Err(Error::AnalyticDomain(_))
        ));
    }

    #[test]
    fn jj_random_targets_reconstruct() {
        let mut rng = crate::rng::SplitMix64::new(0x5EED);
        let (e_c, e_j) = (10.0, 1.0);
        let mut solved = 0;
        let mut tried = 0;
        while solved < 200 {
            tried += 1;
            assert!(tried < 4000, "rejection sampling stalled");
            let target = crate::rng::random_su2(&mut rng);
            let p = su2_from_unitary(&target).unwrap();
            let disc =
                e_c * e_c * (p.w0 * p.w0 + p.w1 * p.w1) - e_j * e_j * (p.w2 * p.w2 + p.w3 * p.w3);
            if disc < 0.0 {
                continue;
            }
            let r = jj_four_step(e_c, e_j, &target).unwrap();
            assert!(r.residual <= 1e-9, "residual {:.3e}", r.residual);
            let periods = [
                4.0 * core::f64::consts::PI / e_j,
                4.0 * core::f64::consts::PI / math::hypot(e_c, e_j),
            ];
            for (i, &t) in r.durations.iter().enumerate() {
                let period = periods[i % 2];
                assert!((0.0..period).contains(&t), "duration {i} = {t}");
            }
            solved += 1;
        }
    }

    #[test]
    fn propagate_pair_stays_unitary() {
        let z = pauli_string(1.0, "Z").unwrap();
        let x = pauli_string(1.0, "X").unwrap();
        let u = propagate_pair(&z, &x, &[(0, 0.4), (1, 1.9), (0, 2.3)]);
        assert!(unitarity_defect(u.matrix()) <= 1e-13);
    }
}

//! Small deterministic PRNG for restart sampling and seeded test targets.
//!
//! SplitMix64: 64-bit state, full period, and cheap enough to derive an
//! independent stream per restart from (seed, start index). Reports must
//! be byte-identical across runs, which rules out anything seeded from
//! the environment.

use num_complex::Complex64;

use crate::math;
use crate::matrix::{ComplexMatrix, UnitaryGate};

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Stream for restart `index` of a run seeded with `seed`.
    pub fn for_start(seed: u64, index: u32) -> Self {
        Self::new(seed ^ (u64::from(index) + 1).wrapping_mul(0xA076_1D64_78BD_642F))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Standard normal via Box–Muller.
    pub fn normal(&mut self) -> f64 {
        let u1 = ((self.next_u64() >> 11) + 1) as f64 / (1u64 << 53) as f64;
        let u2 = self.uniform();
        math::sqrt(-2.0 * libm::log(u1)) * math::cos(2.0 * core::f64::consts::PI * u2)
    }
}

/// Seeded Haar-uniform SU(2) element: four normals on the 3-sphere mapped
/// to `w0 𝕀 − i(w·σ)`.
pub fn random_su2(rng: &mut SplitMix64) -> UnitaryGate {
    let g = [rng.normal(), rng.normal(), rng.normal(), rng.normal()];
    let n = math::sqrt(g.iter().map(|x| x * x).sum());
    let w = [g[0] / n, g[1] / n, g[2] / n, g[3] / n];
    let m = ComplexMatrix::new(
        2,
        alloc::vec![
            Complex64::new(w[0], -w[3]),
            Complex64::new(-w[2], -w[1]),
            Complex64::new(w[2], -w[1]),
            Complex64::new(w[0], w[3]),
        ],
    )
    .expect("fixed 2x2 shape");
    UnitaryGate::new(m).expect("unit quaternion is unitary")
}

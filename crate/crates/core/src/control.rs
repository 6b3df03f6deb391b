//! Controllability: dynamical Lie-algebra closure, the Gram matrix of a
//! Hamiltonian set, and the Lowenthal step count for SU(2) pairs.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::Error;
use crate::math;
use crate::matrix::{hs_inner, ComplexMatrix, HermitianOperator};
use crate::tol::{CLOSURE_RANK_TOL, LOWENTHAL_K_MAX, ORTHOGONALITY_TOL};
use crate::Result;

/// Outcome of the closure computation.
#[derive(Debug, Clone)]
pub struct ClosureResult {
    /// Real dimension of the generated subalgebra of su(2^N).
    pub dimension: usize,
    /// Orthonormal traceless Hermitian basis (trace inner product).
    pub basis: Vec<HermitianOperator>,
    /// True iff every traceless direction is reachable (dim = 4^N − 1).
    pub is_full_su: bool,
    /// Deepest commutator nesting that contributed a new direction.
    pub depth_reached: usize,
}

/// Lowenthal prediction for an SU(2) generator pair.
#[derive(Debug, Clone, PartialEq)]
pub struct LowenthalResult {
    /// Normalized overlap |(H1,H2)| / (‖H1‖‖H2‖) ∈ [0, 1).
    pub psi: f64,
    /// Bracket index for non-orthogonal pairs; `None` when orthogonal.
    pub k: Option<u32>,
    /// Computational steps: 3 when orthogonal, k + 2 otherwise.
    pub steps: u32,
}

struct BasisElement {
    matrix: ComplexMatrix,
    depth: usize,
}

fn trace_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    // Tr(AB) for Hermitian A, B equals Σ_ij conj(A_ij) B_ij.
    a.overlap(b).re
}

/// Traceless projection H − (Tr H / d)·𝕀.
fn traceless(m: &ComplexMatrix) -> ComplexMatrix {
    let d = m.dim();
    let shift = m.trace() / d as f64;
    let mut out = m.clone();
    for i in 0..d {
        out.set(i, i, out.get(i, i) - shift);
    }
    out
}

/// −i[A, B]; Hermitian when A and B are.
fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let ab = a.matmul(b).expect("basis dims match");
    let ba = b.matmul(a).expect("basis dims match");
    (&ab - &ba).scale(Complex64::new(0.0, -1.0))
}

/// Orthogonalize `candidate` against `basis`; returns the residual and its norm.
fn residual(basis: &[BasisElement], candidate: &ComplexMatrix) -> (ComplexMatrix, f64) {
    let mut r = candidate.clone();
    for el in basis {
        let coeff = trace_inner(&el.matrix, &r);
        r = &r - &el.matrix.scale(Complex64::new(coeff, 0.0));
    }
    let norm = r.frobenius_norm();
    (r, norm)
}

/// Dimension of the real Lie algebra generated by `{−i H}` inside su(2^N).
///
/// Seeds with the unit-normalized traceless parts of the inputs, then
/// repeatedly admits commutator directions whose Gram–Schmidt residual
/// exceeds the rank tolerance, until no new direction appears or the
/// algebra is full.
pub fn lie_closure(hams: &[HermitianOperator]) -> Result<ClosureResult> {
    let first = hams.first().ok_or(Error::InvalidDevice(
        "closure of an empty Hamiltonian list".into(),
    ))?;
    let d = first.dim();
    if !d.is_power_of_two() {
        return Err(Error::NotPowerOfTwo { dim: d });
    }
    for h in hams {
        if h.dim() != d {
            return Err(Error::DimensionMismatch {
                left: d,
                right: h.dim(),
            });
        }
    }

    let full_dim = d * d - 1;
    let mut basis: Vec<BasisElement> = Vec::new();
    let mut depth_reached = 0;

    for h in hams {
        let t = traceless(h.matrix());
        let norm = t.frobenius_norm();
        if norm <= 1e-14 {
            continue; // multiple of the identity contributes nothing
        }
        let unit = t.scale(Complex64::new(1.0 / norm, 0.0));
        let (r, rnorm) = residual(&basis, &unit);
        if rnorm > CLOSURE_RANK_TOL {
            basis.push(BasisElement {
                matrix: r.scale(Complex64::new(1.0 / rnorm, 0.0)),
                depth: 0,
            });
        }
    }

    let mut frontier: Vec<usize> = (0..basis.len()).collect();
    while !frontier.is_empty() && basis.len() < full_dim {
        let mut next = Vec::new();
        for &b_idx in &frontier {
            for a_idx in 0..basis.len() {
                if basis.len() >= full_dim {
                    break;
                }
                if a_idx == b_idx {
                    continue;
                }
                let c = commutator(&basis[a_idx].matrix, &basis[b_idx].matrix);
                let cnorm = c.frobenius_norm();
                if cnorm <= 1e-12 {
                    continue;
                }
                let unit = c.scale(Complex64::new(1.0 / cnorm, 0.0));
                let (r, rnorm) = residual(&basis, &unit);
                if rnorm > CLOSURE_RANK_TOL {
                    let depth = basis[a_idx].depth.max(basis[b_idx].depth) + 1;
                    depth_reached = depth_reached.max(depth);
                    basis.push(BasisElement {
                        matrix: r.scale(Complex64::new(1.0 / rnorm, 0.0)),
                        depth,
                    });
                    next.push(basis.len() - 1);
                }
            }
        }
        frontier = next;
    }

    let dimension = basis.len();
    let basis = basis
        .into_iter()
        .map(|el| HermitianOperator::new(el.matrix).expect("commutator basis stays Hermitian"))
        .collect();
    Ok(ClosureResult {
        dimension,
        basis,
        is_full_su: dimension == full_dim,
        depth_reached,
    })
}

/// `G[i][j] = Tr(H_i H_j)`.
pub fn gram_matrix(hams: &[HermitianOperator]) -> Result<Vec<Vec<f64>>> {
    if hams.is_empty() {
        return Err(Error::InvalidDevice("Gram matrix of an empty list".into()));
    }
    let n = hams.len();
    let mut g = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(hs_inner(&hams[i], &hams[j])?);
        }
        g.push(row);
    }
    Ok(g)
}

/// Steps needed to realize an arbitrary SU(2) element with the pair
/// {H1, H2}: three when orthogonal, otherwise k + 2 where k is fixed by
/// the bracket cos(π/k) < ψ ≤ cos(π/(k+1)).
pub fn lowenthal_steps(h1: &HermitianOperator, h2: &HermitianOperator) -> Result<LowenthalResult> {
    if h1.dim() != 2 || h2.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: h1.dim(),
            right: h2.dim(),
        });
    }
    let closure = lie_closure(&[h1.clone(), h2.clone()])?;
    if closure.dimension < 3 {
        return Err(Error::NotGenerating {
            dimension: closure.dimension,
        });
    }

    let overlap = hs_inner(h1, h2)?.abs();
    let n1 = math::sqrt(hs_inner(h1, h1)?);
    let n2 = math::sqrt(hs_inner(h2, h2)?);
    let psi = overlap / (n1 * n2);

    if psi <= ORTHOGONALITY_TOL {
        return Ok(LowenthalResult {
            psi,
            k: None,
            steps: 3,
        });
    }
    if psi >= 1.0 - 1e-12 {
        return Err(Error::ParallelPair { psi });
    }
    for k in 2..=LOWENTHAL_K_MAX {
        // Upper bound inclusive: psi exactly at cos(π/(k+1)) assigns k.
        if psi <= math::cos(core::f64::consts::PI / (k as f64 + 1.0)) {
            return Ok(LowenthalResult {
                psi,
                k: Some(k),
                steps: k + 2,
            });
        }
    }
    Err(Error::ParallelPair { psi })
}

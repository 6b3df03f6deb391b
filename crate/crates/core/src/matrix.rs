//! Dense complex matrices, Pauli strings, Hermitian exponentials and the
//! trace inner product.
//!
//! Everything downstream (device models, closure tests, pulse propagation)
//! is built on these operations. Matrices are square, row-major, f64
//! complex; dimensions stay small (2^N for N ≤ 4), so no attempt is made
//! at sparsity or blocking.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::eig::HermitianEig;
use crate::error::Error;
use crate::math;
use crate::tol::{HERMITICITY_TOL, UNITARY_TOL};
use crate::Result;

/// Square complex matrix with row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if dim == 0 || data.len() != dim * dim {
            return Err(Error::BadMatrixData {
                dim,
                len: data.len(),
                expected: dim * dim,
            });
        }
        Ok(Self { dim, data })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::ONE;
        }
        m
    }

    pub fn from_real(dim: usize, reals: &[f64]) -> Result<Self> {
        let data = reals.iter().map(|&r| Complex64::new(r, 0.0)).collect();
        Self::new(dim, data)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.dim + col] = value;
    }

    /// Matrix product. Errors when the dimensions differ.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.data[i * n + k];
                if aik == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += aik * other.data[k * n + j];
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; block (i,j) of the result is `self[i,j] * other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        let dim = n * m;
        let mut out = Self::zeros(dim);
        for i in 0..n {
            for j in 0..n {
                let aij = self.data[i * n + j];
                if aij == Complex64::ZERO {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        out.data[(i * m + k) * dim + (j * m + l)] = aij * other.data[k * m + l];
                    }
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.data[i * self.dim + i]).sum()
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        math::sqrt(self.data.iter().map(|z| z.norm_sqr()).sum())
    }

    /// `Tr(self† other)` without forming the product.
    pub fn overlap(&self, other: &Self) -> Complex64 {
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Largest per-entry modulus of the difference.
    pub fn max_entry_distance(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, other: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(other)
            .expect("dimension mismatch in matrix product")
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch in matrix sum");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(
            self.dim, other.dim,
            "dimension mismatch in matrix difference"
        );
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// `‖U†U − 𝕀‖_F`, zero for exactly unitary input.
pub fn unitarity_defect(m: &ComplexMatrix) -> f64 {
    let product = m.adjoint().matmul(m).expect("square by construction");
    let n = m.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            let expected = if i == j {
                Complex64::ONE
            } else {
                Complex64::ZERO
            };
            sum += (product.get(i, j) - expected).norm_sqr();
        }
    }
    math::sqrt(sum)
}

/// Hamiltonian: validated Hermitian matrix in angular-frequency units (ħ = 1).
///
/// Construction checks every entry against its conjugate partner and then
/// symmetrizes, so downstream spectral code can rely on exact Hermiticity.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    matrix: ComplexMatrix,
}

impl HermitianOperator {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let n = matrix.dim();
        let mut defect = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let d = (matrix.get(i, j) - matrix.get(j, i).conj()).norm();
                defect = defect.max(d);
            }
        }
        if defect > HERMITICITY_TOL {
            return Err(Error::NotHermitian {
                defect,
                tol: HERMITICITY_TOL,
            });
        }
        let mut symmetrized = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let avg = (matrix.get(i, j) + matrix.get(j, i).conj()) * 0.5;
                symmetrized.set(i, j, avg);
            }
        }
        Ok(Self {
            matrix: symmetrized,
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            matrix: self.matrix.scale(Complex64::new(factor, 0.0)),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(Self {
            matrix: &self.matrix + &other.matrix,
        })
    }

    /// Spectral decomposition (cached by callers that exponentiate often).
    pub fn eig(&self) -> HermitianEig {
        HermitianEig::new(&self.matrix)
    }
}

/// Validated unitary: a gate target or a realized propagator.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryGate {
    matrix: ComplexMatrix,
}

impl UnitaryGate {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        Self::with_tolerance(matrix, UNITARY_TOL)
    }

    /// Accepts a looser defect bound; multi-step propagators accumulate
    /// roundoff past the single-gate tolerance.
    pub fn with_tolerance(matrix: ComplexMatrix, tol: f64) -> Result<Self> {
        let defect = unitarity_defect(&matrix);
        if defect > tol {
            return Err(Error::NotUnitary { defect, tol });
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

/// `e^{−i t H}` via real-eigenvalue spectral decomposition.
///
/// The result is a product of exactly unitary factors, so its defect stays
/// at roundoff for any duration, which the synthesis objective depends on.
pub fn expm_hermitian(h: &HermitianOperator, t: f64) -> UnitaryGate {
    let u = h.eig().evolve(t);
    UnitaryGate::with_tolerance(u, UNITARY_TOL).expect("spectral exponential is unitary")
}

/// Trace inner product `Tr(A·B)`; real for Hermitian arguments.
pub fn hs_inner(a: &HermitianOperator, b: &HermitianOperator) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    // Tr(AB) = Σ_ij A_ij B_ji = Σ_ij A_ij conj(B_ij) for Hermitian B.
    let tr = b.matrix.overlap(&a.matrix);
    debug_assert!(tr.im.abs() <= 1e-12, "imaginary residue {:.3e}", tr.im);
    Ok(tr.re)
}

const PAULI_I: [Complex64; 4] = [
    Complex64::ONE,
    Complex64::ZERO,
    Complex64::ZERO,
    Complex64::ONE,
];
const PAULI_X: [Complex64; 4] = [
    Complex64::ZERO,
    Complex64::ONE,
    Complex64::ONE,
    Complex64::ZERO,
];
const PAULI_Y: [Complex64; 4] = [
    Complex64::ZERO,
    Complex64::new(0.0, -1.0),
    Complex64::new(0.0, 1.0),
    Complex64::ZERO,
];
const PAULI_Z: [Complex64; 4] = [
    Complex64::ONE,
    Complex64::ZERO,
    Complex64::ZERO,
    Complex64::new(-1.0, 0.0),
];

/// Single-qubit Pauli matrix for a letter from {I, X, Y, Z}.
pub fn pauli(letter: char) -> Result<ComplexMatrix> {
    let data = match letter {
        'I' | 'i' => PAULI_I,
        'X' | 'x' => PAULI_X,
        'Y' | 'y' => PAULI_Y,
        'Z' | 'z' => PAULI_Z,
        _ => {
            return Err(Error::InvalidPauliLetter {
                letter,
                position: 1,
            })
        }
    };
    ComplexMatrix::new(2, data.to_vec())
}

/// `coeff × σ_{s₁} ⊗ σ_{s₂} ⊗ …` for a letter string over {I, X, Y, Z}.
///
/// Positions in errors are 1-based.
pub fn pauli_string(coeff: f64, letters: &str) -> Result<HermitianOperator> {
    if letters.is_empty() {
        return Err(Error::EmptyPauliString);
    }
    let mut acc: Option<ComplexMatrix> = None;
    for (idx, letter) in letters.chars().enumerate() {
        let factor = pauli(letter).map_err(|_| Error::InvalidPauliLetter {
            letter,
            position: idx + 1,
        })?;
        acc = Some(match acc {
            None => factor,
            Some(m) => m.kron(&factor),
        });
    }
    let m = acc
        .expect("nonempty string")
        .scale(Complex64::new(coeff, 0.0));
    HermitianOperator::new(m)
}

/// Label string for a Pauli basis index (little set used when decomposing
/// operators back into strings).
pub fn pauli_label(index: usize, num_qubits: usize) -> String {
    const LETTERS: [char; 4] = ['I', 'X', 'Y', 'Z'];
    let mut s = String::with_capacity(num_qubits);
    for q in (0..num_qubits).rev() {
        s.push(LETTERS[(index >> (2 * q)) & 3]);
    }
    s
}

/// Expand a Hermitian operator in the Pauli-string basis.
///
/// Returns `(label, coefficient)` for every string with a coefficient of
/// magnitude above `threshold`. Exact for any operator since the strings
/// form a complete orthogonal basis with norm 2^N.
pub fn pauli_decompose(h: &HermitianOperator, threshold: f64) -> Result<Vec<(String, f64)>> {
    let d = h.dim();
    let num_qubits = d.trailing_zeros() as usize;
    if d == 0 || d != 1 << num_qubits {
        return Err(Error::NotPowerOfTwo { dim: d });
    }
    let mut terms = Vec::new();
    for index in 0..(4usize.pow(num_qubits as u32)) {
        let label = pauli_label(index, num_qubits);
        let basis = pauli_string(1.0, &label)?;
        let coeff = hs_inner(&basis, h)? / d as f64;
        if coeff.abs() > threshold {
            terms.push((label, coeff));
        }
    }
    Ok(terms)
}

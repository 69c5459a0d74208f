//! Validated quantum state types: density matrices with (possibly bipartite)
//! dimension structure, pure states and probability distributions.

use num_complex::Complex64;

use super::matrix::{
    self, hermitian_eigenvalues, hermitian_spectrum_unchecked, hermiticity_error, CMatrix, CVector,
};
use crate::error::{Error, Result};

const HERMITIAN_TOL: f64 = 1e-12;
const EIG_FLOOR: f64 = -1e-10;
const TRACE_TOL: f64 = 1e-10;
const NORM_TOL: f64 = 1e-12;

/// Positive semidefinite, unit-trace matrix with a declared subsystem split.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: CMatrix,
    dims: Vec<usize>,
}

impl DensityMatrix {
    /// Validates Hermitianity, positivity (eigenvalues ≥ −1e−10) and unit
    /// trace before accepting the matrix.
    pub fn new(mat: CMatrix, dims: Vec<usize>) -> Result<Self> {
        let d: usize = dims.iter().product();
        if dims.is_empty() || !mat.is_square() || mat.nrows() != d {
            return Err(Error::DimensionMismatch(format!(
                "density matrix is {}x{} but dims {:?} give {}",
                mat.nrows(),
                mat.ncols(),
                dims,
                d
            )));
        }
        let herm = hermiticity_error(&mat);
        if herm > HERMITIAN_TOL {
            return Err(Error::InvalidState(format!(
                "density matrix deviates from Hermitian by {herm:.3e}"
            )));
        }
        let tr = matrix::trace(&mat).re;
        if (tr - 1.0).abs() > TRACE_TOL {
            return Err(Error::InvalidState(format!(
                "density matrix trace is {tr}, expected 1"
            )));
        }
        let min_eig = hermitian_eigenvalues(&mat).into_iter().fold(f64::INFINITY, f64::min);
        if min_eig < EIG_FLOOR {
            return Err(Error::InvalidState(format!(
                "density matrix has eigenvalue {min_eig:.3e} below the −1e−10 floor"
            )));
        }
        Ok(Self { mat, dims })
    }

    /// For matrices that are valid states by construction (channel outputs,
    /// convex mixtures): symmetrizes roundoff and skips the spectral check.
    pub(crate) fn trusted(mat: CMatrix, dims: Vec<usize>) -> Self {
        debug_assert_eq!(dims.iter().product::<usize>(), mat.nrows());
        let mat = matrix::hermitize(&mat);
        Self { mat, dims }
    }

    pub fn from_pure(psi: &PureState) -> Self {
        Self {
            mat: psi.projector(),
            dims: psi.dims().to_vec(),
        }
    }

    /// Maximally mixed state I/d.
    pub fn maximally_mixed(d: usize) -> Self {
        Self {
            mat: matrix::identity(d) * Complex64::new(1.0 / d as f64, 0.0),
            dims: vec![d],
        }
    }

    pub fn mat(&self) -> &CMatrix {
        &self.mat
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    /// Reinterpret the same matrix with a different subsystem split.
    pub fn with_dims(&self, dims: Vec<usize>) -> Result<Self> {
        if dims.iter().product::<usize>() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "dims {:?} do not factor dimension {}",
                dims,
                self.dim()
            )));
        }
        Ok(Self {
            mat: self.mat.clone(),
            dims,
        })
    }

    /// Eigenvalues, descending, clipped to the [−1e−10, ∞) floor.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.mat)
            .into_iter()
            .map(|l| l.max(0.0))
            .collect()
    }

    /// Number of eigenvalues above `1e-12`.
    pub fn rank(&self) -> usize {
        self.eigenvalues().iter().filter(|&&l| l > 1e-12).count()
    }

    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let red = matrix::partial_trace(&self.mat, &self.dims, keep)?;
        let dims: Vec<usize> = keep.iter().map(|&k| self.dims[k]).collect();
        Ok(DensityMatrix::trusted(red, dims))
    }

    /// Purification Σᵢ √λᵢ |vᵢ⟩⊗|i⟩ on d·d dimensions; the partial trace over
    /// the second factor recovers the state.
    pub fn purify(&self) -> PureState {
        let d = self.dim();
        let (eigs, vecs) = hermitian_spectrum_unchecked(&self.mat);
        let mut out = CVector::zeros(d * d);
        for (k, &lam) in eigs.iter().enumerate() {
            if lam <= 0.0 {
                continue;
            }
            let w = Complex64::new(lam.max(0.0).sqrt(), 0.0);
            for i in 0..d {
                out[i * d + k] += vecs[(i, k)] * w;
            }
        }
        let n = out.norm();
        out /= Complex64::new(n, 0.0);
        PureState {
            vec: out,
            dims: vec![d, d],
        }
    }
}

/// Unit vector with a declared subsystem split.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    vec: CVector,
    dims: Vec<usize>,
}

impl PureState {
    pub fn new(vec: CVector, dims: Vec<usize>) -> Result<Self> {
        let d: usize = dims.iter().product();
        if dims.is_empty() || vec.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "pure state has length {} but dims {:?} give {}",
                vec.len(),
                dims,
                d
            )));
        }
        let n = vec.norm();
        if (n - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidState(format!(
                "pure state norm is {n}, expected 1"
            )));
        }
        Ok(Self { vec, dims })
    }

    /// Normalizes before wrapping; errors only on a (near-)zero vector.
    pub fn normalized(vec: CVector, dims: Vec<usize>) -> Result<Self> {
        let n = vec.norm();
        if n < 1e-12 {
            return Err(Error::InvalidState("cannot normalize a zero vector".into()));
        }
        Self::new(vec / Complex64::new(n, 0.0), dims)
    }

    pub fn basis(d: usize, i: usize) -> Self {
        Self {
            vec: matrix::basis_vector(d, i),
            dims: vec![d],
        }
    }

    pub fn vec(&self) -> &CVector {
        &self.vec
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.vec.len()
    }

    pub fn projector(&self) -> CMatrix {
        &self.vec * self.vec.adjoint()
    }

    pub fn to_density(&self) -> DensityMatrix {
        DensityMatrix::from_pure(self)
    }
}

/// Non-negative weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbDist {
    weights: Vec<f64>,
}

impl ProbDist {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidParameter("empty probability vector".into()));
        }
        if let Some(w) = weights.iter().find(|&&w| w < 0.0) {
            return Err(Error::InvalidState(format!("negative probability {w}")));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidState(format!(
                "probabilities sum to {sum}, expected 1"
            )));
        }
        Ok(Self { weights })
    }

    /// Rescales non-negative weights to sum to one.
    pub fn normalized(weights: Vec<f64>) -> Result<Self> {
        let sum: f64 = weights.iter().sum();
        if sum <= 0.0 {
            return Err(Error::InvalidState("weights sum to zero".into()));
        }
        Self::new(weights.into_iter().map(|w| (w / sum).max(0.0)).collect())
    }

    pub fn uniform(n: usize) -> Self {
        Self {
            weights: vec![1.0 / n as f64; n],
        }
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

//! Dense complex matrices and the index-convention-sensitive operations
//! (Kronecker products, direct sums, partial traces, Hermitian spectra).
//!
//! Conventions, fixed once and tested:
//! - storage is `nalgebra::DMatrix<Complex64>`; element `(i, j)` is row `i`,
//!   column `j`;
//! - `kron(a, b)` makes `a` the slow (outer) index: entry
//!   `((i_a * rb + i_b), (j_a * cb + j_b)) = a[(i_a, j_a)] * b[(i_b, j_b)]`;
//! - a bipartite product index `(a, b)` with dims `(d_a, d_b)` flattens to
//!   `a * d_b + b`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

pub fn identity(d: usize) -> CMatrix {
    CMatrix::identity(d, d)
}

pub fn zeros(rows: usize, cols: usize) -> CMatrix {
    CMatrix::zeros(rows, cols)
}

/// |i⟩⟨j| in dimension `d`.
pub fn basis_matrix(d: usize, i: usize, j: usize) -> CMatrix {
    let mut m = CMatrix::zeros(d, d);
    m[(i, j)] = C_ONE;
    m
}

/// Computational basis vector |i⟩ in dimension `d`.
pub fn basis_vector(d: usize, i: usize) -> CVector {
    let mut v = CVector::zeros(d);
    v[i] = C_ONE;
    v
}

pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> CMatrix {
    assert_eq!(entries.len(), rows * cols, "entry count must match shape");
    CMatrix::from_fn(rows, cols, |i, j| Complex64::new(entries[i * cols + j], 0.0))
}

pub fn diagonal(entries: &[f64]) -> CMatrix {
    CMatrix::from_fn(entries.len(), entries.len(), |i, j| {
        if i == j {
            Complex64::new(entries[i], 0.0)
        } else {
            C_ZERO
        }
    })
}

/// Largest entry-wise absolute difference between two equal-shaped matrices.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch in max_abs_diff");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn max_abs(a: &CMatrix) -> f64 {
    a.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

pub fn trace(a: &CMatrix) -> Complex64 {
    assert!(a.is_square(), "trace requires a square matrix");
    (0..a.nrows()).map(|i| a[(i, i)]).sum()
}

/// Deviation from Hermitianity, `max |M - M†|`.
pub fn hermiticity_error(m: &CMatrix) -> f64 {
    if !m.is_square() {
        return f64::INFINITY;
    }
    let mut worst = 0.0f64;
    for i in 0..m.nrows() {
        for j in i..m.ncols() {
            let e = (m[(i, j)] - m[(j, i)].conj()).norm();
            if e > worst {
                worst = e;
            }
        }
    }
    worst
}

/// (M + M†)/2 — exact on Hermitian input, cleans accumulated roundoff.
pub fn hermitize(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()) * Complex64::new(0.5, 0.0)
}

/// Kronecker product with the first factor on the slow index.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

pub fn kron_vec(a: &CVector, b: &CVector) -> CVector {
    let mut out = CVector::zeros(a.len() * b.len());
    for i in 0..a.len() {
        for j in 0..b.len() {
            out[i * b.len() + j] = a[i] * b[j];
        }
    }
    out
}

/// Block-diagonal direct sum of square matrices.
pub fn direct_sum_mat(blocks: &[CMatrix]) -> Result<CMatrix> {
    if blocks.is_empty() {
        return Err(Error::InvalidParameter(
            "direct sum of an empty block list".into(),
        ));
    }
    for b in blocks {
        if !b.is_square() {
            return Err(Error::DimensionMismatch(
                "direct sum blocks must be square".into(),
            ));
        }
    }
    let total: usize = blocks.iter().map(|b| b.nrows()).sum();
    let mut out = CMatrix::zeros(total, total);
    let mut off = 0;
    for b in blocks {
        let d = b.nrows();
        out.view_mut((off, off), (d, d)).copy_from(b);
        off += d;
    }
    Ok(out)
}

/// Partial trace over the subsystems *not* listed in `keep`.
///
/// `dims` lists the subsystem dimensions (slow to fast per the kron
/// convention); `keep` is the set of subsystem indices to retain, and the
/// output orders them as in the input.
pub fn partial_trace(m: &CMatrix, dims: &[usize], keep: &[usize]) -> Result<CMatrix> {
    let d: usize = dims.iter().product();
    if !m.is_square() || m.nrows() != d {
        return Err(Error::DimensionMismatch(format!(
            "partial trace: matrix is {}x{}, dims product is {}",
            m.nrows(),
            m.ncols(),
            d
        )));
    }
    if keep.iter().any(|&k| k >= dims.len()) {
        return Err(Error::InvalidParameter(
            "partial trace: keep index out of range".into(),
        ));
    }
    let mut keep_sorted: Vec<usize> = keep.to_vec();
    keep_sorted.sort_unstable();
    keep_sorted.dedup();

    let traced: Vec<usize> = (0..dims.len()).filter(|i| !keep_sorted.contains(i)).collect();
    let d_keep: usize = keep_sorted.iter().map(|&i| dims[i]).product();
    let d_traced: usize = traced.iter().map(|&i| dims[i]).product();

    // Strides of each subsystem in the flattened index.
    let mut strides = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }

    let unflatten = |flat: usize, subsys: &[usize]| -> usize {
        // Map a flat index over `subsys` (in listed order) to a full-space offset.
        let mut rem = flat;
        let mut offset = 0;
        for &s in subsys.iter().rev() {
            let idx = rem % dims[s];
            rem /= dims[s];
            offset += idx * strides[s];
        }
        offset
    };

    let mut out = CMatrix::zeros(d_keep, d_keep);
    for r in 0..d_keep {
        let r_off = unflatten(r, &keep_sorted);
        for c in 0..d_keep {
            let c_off = unflatten(c, &keep_sorted);
            let mut acc = C_ZERO;
            for t in 0..d_traced {
                let t_off = unflatten(t, &traced);
                acc += m[(r_off + t_off, c_off + t_off)];
            }
            out[(r, c)] = acc;
        }
    }
    Ok(out)
}

/// Eigendecomposition of a Hermitian matrix: real eigenvalues in descending
/// order with matching orthonormal eigenvector columns.
pub fn hermitian_spectrum(m: &CMatrix) -> Result<(Vec<f64>, CMatrix)> {
    let herm_err = hermiticity_error(m);
    if herm_err > 1e-10 {
        return Err(Error::InvalidParameter(format!(
            "hermitian_spectrum: input deviates from Hermitian by {herm_err:.3e}"
        )));
    }
    Ok(hermitian_spectrum_unchecked(m))
}

/// Same as [`hermitian_spectrum`] but symmetrizes instead of validating; for
/// hot paths where Hermitianity holds by construction.
pub fn hermitian_spectrum_unchecked(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let se = hermitize(m).symmetric_eigen();
    let mut order: Vec<usize> = (0..se.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| {
        se.eigenvalues[b]
            .partial_cmp(&se.eigenvalues[a])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let eigs: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let n = se.eigenvectors.nrows();
    let vecs = CMatrix::from_fn(n, n, |r, c| se.eigenvectors[(r, order[c])]);
    (eigs, vecs)
}

/// Eigenvalues only, descending.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    let se = hermitize(m).symmetric_eigen();
    let mut eigs: Vec<f64> = se.eigenvalues.iter().copied().collect();
    eigs.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
    eigs
}

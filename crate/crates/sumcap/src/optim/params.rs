//! Real embeddings of the optimization domains: unit vectors (pure states),
//! density matrices through AA†/tr(AA†), and isometries through thin QR.
//! All maps are total — degenerate parameter vectors fall back to a fixed
//! reference point instead of failing.

use nalgebra::linalg::QR;
use num_complex::Complex64;
use rand::Rng;

use crate::matcore::matrix::{CMatrix, CVector};
use crate::matcore::random::complex_gaussian;

/// 2d reals → normalized complex d-vector.
pub fn unit_vector_from_params(x: &[f64]) -> CVector {
    debug_assert_eq!(x.len() % 2, 0);
    let d = x.len() / 2;
    let mut v = CVector::from_fn(d, |i, _| Complex64::new(x[2 * i], x[2 * i + 1]));
    let n = v.norm();
    if n < 1e-12 {
        v = CVector::zeros(d);
        v[0] = Complex64::new(1.0, 0.0);
        return v;
    }
    v / Complex64::new(n, 0.0)
}

pub fn params_from_unit_vector(v: &CVector) -> Vec<f64> {
    let mut x = Vec::with_capacity(2 * v.len());
    for c in v.iter() {
        x.push(c.re);
        x.push(c.im);
    }
    x
}

/// 2d² reals → density matrix AA†/tr(AA†).
pub fn density_from_params(x: &[f64], d: usize) -> CMatrix {
    debug_assert_eq!(x.len(), 2 * d * d);
    let a = CMatrix::from_fn(d, d, |i, j| {
        let k = 2 * (i * d + j);
        Complex64::new(x[k], x[k + 1])
    });
    let m = &a * a.adjoint();
    let t: f64 = (0..d).map(|i| m[(i, i)].re).sum();
    if t < 1e-12 {
        return CMatrix::identity(d, d) * Complex64::new(1.0 / d as f64, 0.0);
    }
    m / Complex64::new(t, 0.0)
}

pub fn params_from_density_factor(a: &CMatrix) -> Vec<f64> {
    let d = a.nrows();
    let mut x = Vec::with_capacity(2 * d * d);
    for i in 0..d {
        for j in 0..d {
            x.push(a[(i, j)].re);
            x.push(a[(i, j)].im);
        }
    }
    x
}

/// 2·m·r reals → m×r isometry (W†W = I_r) via thin QR, m ≥ r.
pub fn isometry_from_params(x: &[f64], m: usize, r: usize) -> CMatrix {
    debug_assert_eq!(x.len(), 2 * m * r);
    debug_assert!(m >= r);
    let z = CMatrix::from_fn(m, r, |i, j| {
        let k = 2 * (i * r + j);
        Complex64::new(x[k], x[k + 1])
    });
    let qr = QR::new(z);
    let q = qr.q();
    // QR of a rank-deficient Z still yields orthonormal columns, but guard
    // against a fully zero parameter block anyway.
    if q.ncols() == r && q.column(0).norm() > 0.5 {
        q
    } else {
        CMatrix::identity(m, r)
    }
}

/// Parameters that reproduce the "spectral" isometry [I_r; 0].
pub fn params_for_identity_isometry(m: usize, r: usize) -> Vec<f64> {
    let mut x = vec![0.0; 2 * m * r];
    for j in 0..r {
        x[2 * (j * r + j)] = 1.0;
    }
    x
}

pub fn random_params(len: usize, rng: &mut impl Rng) -> Vec<f64> {
    (0..len)
        .map(|i| {
            if i % 2 == 0 {
                complex_gaussian(rng).re * std::f64::consts::SQRT_2
            } else {
                complex_gaussian(rng).im * std::f64::consts::SQRT_2
            }
        })
        .collect()
}

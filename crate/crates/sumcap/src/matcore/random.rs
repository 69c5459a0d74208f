//! Seeded randomness: Haar unitaries via Ginibre + QR with phase fixing,
//! random pure states and random density matrices. Everything is a pure
//! function of its seed.

use nalgebra::linalg::QR;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::matrix::{CMatrix, CVector};
use super::state::{DensityMatrix, PureState};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Complex standard Gaussian with variance 1 (1/2 per quadrature).
pub fn complex_gaussian(rng: &mut impl Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re / f64::sqrt(2.0), im / f64::sqrt(2.0))
}

pub fn ginibre(rows: usize, cols: usize, rng: &mut impl Rng) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

/// Haar-distributed unitary: QR of a Ginibre matrix with the R diagonal
/// phases absorbed into Q.
pub fn haar_unitary(d: usize, rng: &mut impl Rng) -> CMatrix {
    let g = ginibre(d, d, rng);
    let qr = QR::new(g);
    let q = qr.q();
    let r = qr.r();
    let mut u = q;
    for j in 0..d {
        let rjj = r[(j, j)];
        let phase = if rjj.norm() > 0.0 {
            rjj / rjj.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        for i in 0..d {
            u[(i, j)] *= phase;
        }
    }
    u
}

pub fn random_haar_unitary(d: usize, seed: u64) -> CMatrix {
    haar_unitary(d, &mut rng_from_seed(seed))
}

pub fn haar_pure(d: usize, rng: &mut impl Rng) -> CVector {
    loop {
        let v = CVector::from_fn(d, |_, _| complex_gaussian(rng));
        let n = v.norm();
        if n > 1e-12 {
            return v / Complex64::new(n, 0.0);
        }
    }
}

pub fn random_pure(d: usize, seed: u64) -> PureState {
    PureState::new(haar_pure(d, &mut rng_from_seed(seed)), vec![d])
        .expect("normalized Gaussian vector is a valid pure state")
}

/// Random rank-`rank` density matrix GG†/tr(GG†) with Ginibre G.
pub fn random_density(d: usize, rank: usize, seed: u64) -> DensityMatrix {
    assert!(rank >= 1 && rank <= d, "rank must be in 1..=d");
    let mut rng = rng_from_seed(seed);
    let g = ginibre(d, rank, &mut rng);
    let m = &g * g.adjoint();
    let t = super::matrix::trace(&m).re;
    DensityMatrix::new(m / Complex64::new(t, 0.0), vec![d])
        .expect("normalized Gram matrix is a valid density matrix")
}

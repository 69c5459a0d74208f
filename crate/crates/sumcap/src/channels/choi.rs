//! Choi matrices: the canonical equality witness for maps.
//!
//! Convention: C = Σᵢⱼ |i⟩⟨j| ⊗ T(|i⟩⟨j|) with the input factor on the slow
//! index, so C has dimension d_in·d_out, tr C = d_in, and tracing out the
//! output factor of a trace-preserving map gives I_{d_in}.

use num_complex::Complex64;

use super::channel::Channel;
use crate::error::{Error, Result};
use crate::matcore::matrix::{self, CMatrix};

const CHOI_PSD_TOL: f64 = 1e-8;
const CHOI_TP_TOL: f64 = 1e-8;
/// Eigenvalues below this are numerical noise and produce no Kraus operator;
/// the only lossy step in the Kraus ↔ Choi round trip.
const KRAUS_CUTOFF: f64 = 1e-10;

#[derive(Debug, Clone)]
pub struct ChoiMatrix {
    mat: CMatrix,
    d_in: usize,
    d_out: usize,
}

impl ChoiMatrix {
    /// Validates positivity (eigenvalues ≥ −1e−8) and the trace-preservation
    /// marginal tr_out C = I.
    pub fn new(mat: CMatrix, d_in: usize, d_out: usize) -> Result<Self> {
        if mat.nrows() != d_in * d_out || !mat.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "Choi matrix is {}x{}, expected {}",
                mat.nrows(),
                mat.ncols(),
                d_in * d_out
            )));
        }
        let herm = matrix::hermiticity_error(&mat);
        if herm > 1e-8 {
            return Err(Error::InvalidChannel(format!(
                "Choi matrix deviates from Hermitian by {herm:.3e}"
            )));
        }
        let min_eig = matrix::hermitian_eigenvalues(&mat)
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if min_eig < -CHOI_PSD_TOL {
            return Err(Error::InvalidChannel(format!(
                "Choi matrix not positive semidefinite: min eigenvalue {min_eig:.3e}"
            )));
        }
        let marginal = matrix::partial_trace(&mat, &[d_in, d_out], &[0])?;
        let tp_err = matrix::max_abs_diff(&marginal, &matrix::identity(d_in));
        if tp_err > CHOI_TP_TOL {
            return Err(Error::InvalidChannel(format!(
                "Choi input marginal deviates from identity by {tp_err:.3e}"
            )));
        }
        Ok(Self { mat, d_in, d_out })
    }

    pub fn mat(&self) -> &CMatrix {
        &self.mat
    }

    pub fn d_in(&self) -> usize {
        self.d_in
    }

    pub fn d_out(&self) -> usize {
        self.d_out
    }

    pub fn max_abs_diff(&self, other: &ChoiMatrix) -> f64 {
        matrix::max_abs_diff(&self.mat, &other.mat)
    }
}

impl Channel {
    /// Choi matrix C = Σₐ vec(Kₐ) vec(Kₐ)† with vec(K)[(i,o)] = K[o,i].
    pub fn choi(&self) -> ChoiMatrix {
        let d = self.d_in() * self.d_out();
        let mut mat = CMatrix::zeros(d, d);
        for k in self.kraus() {
            let v = CMatrix::from_fn(d, 1, |idx, _| {
                let i = idx / self.d_out();
                let o = idx % self.d_out();
                k[(o, i)]
            });
            mat += &v * v.adjoint();
        }
        ChoiMatrix {
            mat,
            d_in: self.d_in(),
            d_out: self.d_out(),
        }
    }
}

/// Kraus operators from the spectral decomposition of a Choi matrix,
/// discarding eigenvalues below 1e−10.
pub fn kraus_from_choi(choi: &ChoiMatrix) -> Result<Channel> {
    let (eigs, vecs) = matrix::hermitian_spectrum_unchecked(&choi.mat);
    let mut kraus = Vec::new();
    for (a, &mu) in eigs.iter().enumerate() {
        if mu < KRAUS_CUTOFF {
            continue;
        }
        let w = Complex64::new(mu.sqrt(), 0.0);
        let k = CMatrix::from_fn(choi.d_out, choi.d_in, |o, i| {
            vecs[(i * choi.d_out + o, a)] * w
        });
        kraus.push(k);
    }
    Channel::new(kraus, "from Choi")
}

/// Apply a channel through its Choi matrix: T(ρ) = tr_in[C · (ρᵀ ⊗ I)].
/// Slow but representation-independent; used as a cross-check.
pub fn apply_via_choi(choi: &ChoiMatrix, rho: &CMatrix) -> CMatrix {
    let rho_t = rho.transpose();
    let big = &choi.mat * matrix::kron(&rho_t, &matrix::identity(choi.d_out));
    matrix::partial_trace(&big, &[choi.d_in, choi.d_out], &[1])
        .expect("dimensions are consistent by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::constructors::{depolarizing, identity_channel, random_channel};
    use crate::matcore::matrix::{identity, max_abs_diff};
    use crate::matcore::random::random_density;

    #[test]
    fn choi_of_identity_qubit() {
        let c = identity_channel(2).choi();
        // Σ_ij |ii⟩⟨jj|: rank one, trace 2.
        let mut expect = CMatrix::zeros(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                expect[(i * 2 + i, j * 2 + j)] = Complex64::new(1.0, 0.0);
            }
        }
        assert!(max_abs_diff(c.mat(), &expect) < 1e-14);
        let eigs = crate::matcore::matrix::hermitian_eigenvalues(c.mat());
        assert!((eigs[0] - 2.0).abs() < 1e-12 && eigs[1].abs() < 1e-12);
    }

    #[test]
    fn choi_of_fully_depolarizing_qubit() {
        let c = depolarizing(2, 0.0).unwrap().choi();
        assert!(max_abs_diff(c.mat(), &(identity(4) * Complex64::new(0.5, 0.0))) < 1e-12);
    }

    #[test]
    fn kraus_choi_round_trip_on_random_channels() {
        for seed in 0..4u64 {
            let t = random_channel(3, 2, 2, seed).unwrap();
            let c1 = t.choi();
            let t2 = kraus_from_choi(&c1).unwrap();
            let c2 = t2.choi();
            assert!(c1.max_abs_diff(&c2) < 1e-9);
        }
    }

    #[test]
    fn choi_validation_rejects_bad_matrices() {
        // Not PSD.
        let m = crate::matcore::matrix::diagonal(&[2.0, -0.5, 0.25, 0.25]);
        assert!(ChoiMatrix::new(m, 2, 2).is_err());
        // PSD but wrong marginal.
        let m = crate::matcore::matrix::diagonal(&[2.0, 0.0, 0.0, 0.0]);
        assert!(ChoiMatrix::new(m, 2, 2).is_err());
        // Valid: identity channel.
        let c = identity_channel(2).choi();
        assert!(ChoiMatrix::new(c.mat().clone(), 2, 2).is_ok());
    }

    #[test]
    fn apply_via_choi_matches_kraus_application() {
        for seed in 0..3u64 {
            let t = random_channel(2, 3, 2, 40 + seed).unwrap();
            let rho = random_density(2, 2, 50 + seed);
            let via_kraus = t.apply(&rho).unwrap();
            let via_choi = apply_via_choi(&t.choi(), rho.mat());
            assert!(max_abs_diff(via_kraus.mat(), &via_choi) < 1e-9);
        }
    }
}

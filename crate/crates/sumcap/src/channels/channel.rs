//! Quantum channels in Kraus form, with the compositions the direct-sum
//! constructions need: tensor products, direct sums, output padding and the
//! complementary channel.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::matrix::{self, CMatrix, CVector};
use crate::matcore::state::DensityMatrix;

pub(crate) const TP_TOL: f64 = 1e-8;
const UNITAL_TOL: f64 = 1e-9;

/// Completely positive trace-preserving map stored as a Kraus list.
/// Complete positivity is automatic in this form; trace preservation
/// (Σ Kᵢ†Kᵢ = I within 1e−8) is validated on construction.
#[derive(Debug, Clone)]
pub struct Channel {
    kraus: Vec<CMatrix>,
    d_in: usize,
    d_out: usize,
    label: String,
}

impl Channel {
    pub fn new(kraus: Vec<CMatrix>, label: impl Into<String>) -> Result<Self> {
        if kraus.is_empty() {
            return Err(Error::InvalidChannel("empty Kraus list".into()));
        }
        let d_out = kraus[0].nrows();
        let d_in = kraus[0].ncols();
        if d_in == 0 || d_out == 0 {
            return Err(Error::InvalidChannel("zero-dimensional Kraus operator".into()));
        }
        for k in &kraus {
            if k.nrows() != d_out || k.ncols() != d_in {
                return Err(Error::InvalidChannel(
                    "Kraus operators have inconsistent shapes".into(),
                ));
            }
        }
        let channel = Self {
            kraus,
            d_in,
            d_out,
            label: label.into(),
        };
        let err = channel.trace_preservation_error();
        if err > TP_TOL {
            return Err(Error::InvalidChannel(format!(
                "trace preservation violated: max |ΣK†K − I| = {err:.3e} exceeds 1e-8"
            )));
        }
        Ok(channel)
    }

    pub fn kraus(&self) -> &[CMatrix] {
        &self.kraus
    }

    pub fn d_in(&self) -> usize {
        self.d_in
    }

    pub fn d_out(&self) -> usize {
        self.d_out
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn trace_preservation_error(&self) -> f64 {
        let mut acc = CMatrix::zeros(self.d_in, self.d_in);
        for k in &self.kraus {
            acc += k.adjoint() * k;
        }
        matrix::max_abs_diff(&acc, &matrix::identity(self.d_in))
    }

    /// Σ KᵢρKᵢ† on a raw matrix (hot path, no state validation).
    pub(crate) fn apply_mat(&self, rho: &CMatrix) -> CMatrix {
        let mut out = CMatrix::zeros(self.d_out, self.d_out);
        for k in &self.kraus {
            let kr = k * rho;
            out += &kr * k.adjoint();
        }
        out
    }

    /// Channel output on a pure input, Σ (Kψ)(Kψ)†.
    pub(crate) fn apply_pure(&self, psi: &CVector) -> CMatrix {
        let mut out = CMatrix::zeros(self.d_out, self.d_out);
        for k in &self.kraus {
            let v = k * psi;
            out += &v * v.adjoint();
        }
        out
    }

    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        if rho.dim() != self.d_in {
            return Err(Error::DimensionMismatch(format!(
                "channel expects input dimension {}, state has {}",
                self.d_in,
                rho.dim()
            )));
        }
        Ok(DensityMatrix::trusted(
            self.apply_mat(rho.mat()),
            vec![self.d_out],
        ))
    }

    /// Kraus set {Kᵢ ⊗ Lⱼ}; input/output dimensions multiply.
    pub fn tensor(&self, other: &Channel) -> Channel {
        let kraus: Vec<CMatrix> = self
            .kraus
            .iter()
            .flat_map(|k| other.kraus.iter().map(move |l| matrix::kron(k, l)))
            .collect();
        Channel {
            kraus,
            d_in: self.d_in * other.d_in,
            d_out: self.d_out * other.d_out,
            label: format!("({})⊗({})", self.label, other.label),
        }
    }

    /// Blockwise channel: each block's Kraus operators embedded with zeros
    /// outside their block, so cross-block coherences of the input are erased.
    pub fn direct_sum(parts: &[Channel]) -> Result<Channel> {
        if parts.is_empty() {
            return Err(Error::InvalidChannel("direct sum of no channels".into()));
        }
        let d_in: usize = parts.iter().map(|c| c.d_in).sum();
        let d_out: usize = parts.iter().map(|c| c.d_out).sum();
        let mut kraus = Vec::new();
        let mut in_off = 0;
        let mut out_off = 0;
        for part in parts {
            for k in &part.kraus {
                let mut big = CMatrix::zeros(d_out, d_in);
                big.view_mut((out_off, in_off), (part.d_out, part.d_in)).copy_from(k);
                kraus.push(big);
            }
            in_off += part.d_in;
            out_off += part.d_out;
        }
        let label = parts
            .iter()
            .map(|c| c.label.clone())
            .collect::<Vec<_>>()
            .join(" ⊕ ");
        Channel::new(kraus, label)
    }

    /// ρ ↦ T(ρ) ⊗ σ. Kraus set {Kᵢ ⊗ √μₖ|vₖ⟩} from the spectral
    /// decomposition of σ.
    pub fn pad_output(&self, sigma: &DensityMatrix) -> Channel {
        let (eigs, vecs) = matrix::hermitian_spectrum_unchecked(sigma.mat());
        let mut kraus = Vec::new();
        for (idx, &mu) in eigs.iter().enumerate() {
            if mu <= 1e-14 {
                continue;
            }
            let col = CMatrix::from_fn(sigma.dim(), 1, |r, _| {
                vecs[(r, idx)] * Complex64::new(mu.sqrt(), 0.0)
            });
            for k in &self.kraus {
                kraus.push(matrix::kron(k, &col));
            }
        }
        Channel {
            kraus,
            d_in: self.d_in,
            d_out: self.d_out * sigma.dim(),
            label: format!("({}) padded", self.label),
        }
    }

    /// Complementary channel from the Stinespring isometry V = Σᵢ Kᵢ⊗|i⟩:
    /// the environment-side marginal, with output dimension = Kraus count.
    /// Satisfies S(T_c(ρ)) = S((T⊗id)(Ψ)) for Ψ a purification of ρ.
    pub fn complementary(&self) -> Channel {
        let k = self.kraus.len();
        // E_o rows collect the o-th row of every Kraus operator, so that
        // (T_c(ρ))_{ij} = tr(K_i ρ K_j†) = (Σ_o E_o ρ E_o†)_{ij}.
        let kraus: Vec<CMatrix> = (0..self.d_out)
            .map(|o| CMatrix::from_fn(k, self.d_in, |i, m| self.kraus[i][(o, m)]))
            .collect();
        Channel {
            kraus,
            d_in: self.d_in,
            d_out: k,
            label: format!("({}) complementary", self.label),
        }
    }

    /// True iff the maximally mixed state is a fixed point.
    pub fn is_unital(&self) -> Result<bool> {
        if self.d_in != self.d_out {
            return Err(Error::DimensionMismatch(
                "unitality is defined for square channels only".into(),
            ));
        }
        let mixed = matrix::identity(self.d_in) * Complex64::new(1.0 / self.d_in as f64, 0.0);
        let out = self.apply_mat(&mixed);
        Ok(matrix::max_abs_diff(&out, &mixed) <= UNITAL_TOL)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::constructors::{
        constant_channel, depolarizing, identity_channel, unitary_channel, werner_holevo,
    };
    use crate::matcore::entropy::entropy_of_hermitian;
    use crate::matcore::matrix::{basis_vector, diagonal, identity, max_abs_diff};
    use crate::matcore::random::{random_density, random_haar_unitary, random_pure};
    use crate::matcore::state::PureState;

    #[test]
    fn apply_identity_returns_input() {
        let t = identity_channel(3);
        let rho = random_density(3, 2, 5);
        let out = t.apply(&rho).unwrap();
        assert!(max_abs_diff(out.mat(), rho.mat()) < 1e-12);
    }

    #[test]
    fn apply_fully_depolarizing_gives_maximally_mixed() {
        let t = depolarizing(2, 0.0).unwrap();
        let rho = random_pure(2, 3).to_density();
        let out = t.apply(&rho).unwrap();
        assert!(max_abs_diff(out.mat(), DensityMatrix::maximally_mixed(2).mat()) < 1e-10);
    }

    #[test]
    fn werner_holevo_on_basis_state() {
        let t = werner_holevo(3);
        let rho = PureState::basis(3, 0).to_density();
        let out = t.apply(&rho).unwrap();
        assert!(max_abs_diff(out.mat(), &diagonal(&[0.0, 0.5, 0.5])) < 1e-12);
    }

    #[test]
    fn apply_rejects_dimension_mismatch() {
        let t = identity_channel(2);
        let rho = random_density(3, 1, 1);
        assert!(t.apply(&rho).is_err());
    }

    #[test]
    fn direct_sum_erases_off_diagonal_blocks() {
        let t = Channel::direct_sum(&[identity_channel(2), identity_channel(2)]).unwrap();
        assert_eq!(t.d_in(), 4);
        assert_eq!(t.d_out(), 4);

        let rho = random_density(4, 4, 9);
        let out = t.apply(&rho).unwrap();
        // Diagonal blocks intact, off-diagonal blocks zeroed.
        for i in 0..4 {
            for j in 0..4 {
                let same_block = (i < 2) == (j < 2);
                let expect = if same_block {
                    rho.mat()[(i, j)]
                } else {
                    Complex64::new(0.0, 0.0)
                };
                assert!((out.mat()[(i, j)] - expect).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn direct_sum_of_one_channel_is_that_channel() {
        let t = depolarizing(2, 0.3).unwrap();
        let s = Channel::direct_sum(std::slice::from_ref(&t)).unwrap();
        assert_eq!(s.d_in(), t.d_in());
        let rho = random_density(2, 2, 4);
        assert!(max_abs_diff(s.apply(&rho).unwrap().mat(), t.apply(&rho).unwrap().mat()) < 1e-12);
    }

    #[test]
    fn compositions_stay_trace_preserving() {
        let a = depolarizing(2, 0.5).unwrap();
        let b = werner_holevo(3);
        for t in [
            a.tensor(&b),
            Channel::direct_sum(&[a.clone(), b.clone()]).unwrap(),
            a.pad_output(&random_density(2, 2, 8)),
            a.complementary(),
        ] {
            assert!(t.trace_preservation_error() < 1e-10);
        }
    }

    #[test]
    fn complementary_of_unitary_is_constant_rank_one() {
        let u = random_haar_unitary(3, 2);
        let t = unitary_channel(&u);
        let tc = t.complementary();
        assert_eq!(tc.d_out(), 1);
        let rho = random_density(3, 3, 6);
        let out = tc.apply(&rho).unwrap();
        assert!(entropy_of_hermitian(out.mat()).abs() < 1e-12);
    }

    #[test]
    fn complementary_matches_extended_channel_entropy() {
        // S(T_c(ρ)) = S((T⊗id)(Ψ)) with Ψ a purification of ρ.
        for seed in 0..3u64 {
            let t = crate::channels::constructors::random_channel(2, 2, 2, 100 + seed).unwrap();
            let rho = random_density(2, 2, 200 + seed);
            let ext = t.tensor(&identity_channel(2));
            let psi = rho.purify();
            let joint = ext.apply_mat(&psi.projector());

            let tc = t.complementary();
            let env = tc.apply(&rho).unwrap();

            let lhs = entropy_of_hermitian(&joint);
            let rhs = entropy_of_hermitian(env.mat());
            assert!((lhs - rhs).abs() < 1e-8, "lhs={lhs} rhs={rhs}");
        }
    }

    #[test]
    fn complementary_of_depolarizing_on_pure_input() {
        let t = depolarizing(2, 0.0).unwrap();
        let psi = random_pure(2, 11);
        let tc = t.complementary();
        let s_env = entropy_of_hermitian(&tc.apply_pure(psi.vec()));

        let ext = t.tensor(&identity_channel(2));
        let purified = psi.to_density().purify();
        let s_joint = entropy_of_hermitian(&ext.apply_mat(&purified.projector()));

        assert!((s_env - 1.0).abs() < 1e-8);
        assert!((s_joint - 1.0).abs() < 1e-8);
    }

    #[test]
    fn unitality_checks() {
        let t = werner_holevo(4);
        assert!(t.is_unital().unwrap());

        let pure = random_pure(2, 7).to_density();
        let c = constant_channel(&pure, 2);
        assert!(!c.is_unital().unwrap());

        let rect = crate::channels::constructors::partial_trace_channel(
            2,
            3,
            crate::channels::constructors::Factor::Left,
        );
        assert!(rect.is_unital().is_err());
    }

    #[test]
    fn invalid_kraus_rejected() {
        // Not trace preserving: single Kraus 2I.
        let k = identity(2) * Complex64::new(2.0, 0.0);
        assert!(Channel::new(vec![k], "bad").is_err());
        assert!(Channel::new(vec![], "empty").is_err());
        // Inconsistent shapes.
        let k1 = identity(2);
        let k2 = CMatrix::zeros(3, 2);
        assert!(Channel::new(vec![k1, k2], "ragged").is_err());
        let _ = basis_vector(2, 0);
    }
}

//! Named channel constructors. Every output passes CPTP validation.

use num_complex::Complex64;

use super::channel::Channel;
use super::choi::{kraus_from_choi, ChoiMatrix};
use crate::error::{Error, Result};
use crate::matcore::matrix::{self, CMatrix};
use crate::matcore::random::{haar_unitary, rng_from_seed};
use crate::matcore::state::{DensityMatrix, ProbDist};

pub fn identity_channel(d: usize) -> Channel {
    Channel::new(vec![matrix::identity(d)], format!("identity({d})"))
        .expect("identity Kraus set is trace preserving")
}

/// Depolarizing channel T(ρ) = λρ + (1−λ)tr(ρ)I/d, λ ∈ [−1/(d²−1), 1].
/// Built through its Choi matrix λ·C_id + (1−λ)·I/d, which is PSD exactly on
/// that parameter range.
pub fn depolarizing(d: usize, lambda: f64) -> Result<Channel> {
    let lo = -1.0 / ((d * d - 1) as f64);
    if !(lo..=1.0).contains(&lambda) {
        return Err(Error::InvalidParameter(format!(
            "depolarizing parameter λ={lambda} outside [{lo:.6}, 1]"
        )));
    }
    let id_choi = identity_channel(d).choi();
    let mat = id_choi.mat() * Complex64::new(lambda, 0.0)
        + matrix::identity(d * d) * Complex64::new((1.0 - lambda) / d as f64, 0.0);
    let choi = ChoiMatrix::new(mat, d, d)?;
    Ok(kraus_from_choi(&choi)?.with_label(format!("depolarizing({d}, λ={lambda})")))
}

/// Full dephasing: kills all off-diagonal elements in the computational basis.
pub fn dephasing(d: usize) -> Channel {
    let kraus: Vec<CMatrix> = (0..d).map(|i| matrix::basis_matrix(d, i, i)).collect();
    Channel::new(kraus, format!("dephasing({d})")).expect("projector Kraus set is trace preserving")
}

pub fn unitary_channel(u: &CMatrix) -> Channel {
    Channel::new(vec![u.clone()], "unitary").expect("a unitary is trace preserving")
}

/// ρ ↦ tr(ρ)·σ with input dimension `d_in`.
pub fn constant_channel(sigma: &DensityMatrix, d_in: usize) -> Channel {
    let (eigs, vecs) = matrix::hermitian_spectrum_unchecked(sigma.mat());
    let mut kraus = Vec::new();
    for (k, &mu) in eigs.iter().enumerate() {
        if mu <= 1e-14 {
            continue;
        }
        let w = Complex64::new(mu.sqrt(), 0.0);
        for m in 0..d_in {
            kraus.push(CMatrix::from_fn(sigma.dim(), d_in, |r, c| {
                if c == m {
                    vecs[(r, k)] * w
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }));
        }
    }
    Channel::new(kraus, format!("constant(d_in={d_in})"))
        .expect("constant channel Kraus set is trace preserving")
}

/// Which tensor factor the partial-trace channel keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    Left,
    Right,
}

/// Partial trace as a channel on a bipartite input of dims (d_a, d_b).
pub fn partial_trace_channel(d_a: usize, d_b: usize, keep: Factor) -> Channel {
    let kraus: Vec<CMatrix> = match keep {
        Factor::Left => (0..d_b)
            .map(|b| {
                CMatrix::from_fn(d_a, d_a * d_b, |r, c| {
                    if c == r * d_b + b {
                        Complex64::new(1.0, 0.0)
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                })
            })
            .collect(),
        Factor::Right => (0..d_a)
            .map(|a| {
                CMatrix::from_fn(d_b, d_a * d_b, |r, c| {
                    if c == a * d_b + r {
                        Complex64::new(1.0, 0.0)
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                })
            })
            .collect(),
    };
    let side = match keep {
        Factor::Left => "left",
        Factor::Right => "right",
    };
    Channel::new(kraus, format!("partial_trace({d_a},{d_b},keep {side})"))
        .expect("partial trace Kraus set is trace preserving")
}

/// Werner–Holevo channel ρ ↦ (tr(ρ)I − ρᵀ)/(d−1), via the antisymmetric
/// Kraus set (|i⟩⟨j| − |j⟩⟨i|)/√(d−1), i < j.
pub fn werner_holevo(d: usize) -> Channel {
    assert!(d >= 2, "Werner-Holevo channel needs d ≥ 2");
    let w = Complex64::new(1.0 / ((d - 1) as f64).sqrt(), 0.0);
    let mut kraus = Vec::new();
    for i in 0..d {
        for j in (i + 1)..d {
            let mut k = CMatrix::zeros(d, d);
            k[(i, j)] = w;
            k[(j, i)] = -w;
            kraus.push(k);
        }
    }
    Channel::new(kraus, format!("werner_holevo({d})"))
        .expect("antisymmetric Kraus set is trace preserving")
}

/// Mixed-unitary channel Σ pᵢ Uᵢ·Uᵢ†.
pub fn mixed_unitary(p: &ProbDist, unitaries: &[CMatrix]) -> Result<Channel> {
    if p.len() != unitaries.len() {
        return Err(Error::DimensionMismatch(
            "probability and unitary counts differ".into(),
        ));
    }
    let kraus: Vec<CMatrix> = p
        .weights()
        .iter()
        .zip(unitaries)
        .map(|(&w, u)| u * Complex64::new(w.sqrt(), 0.0))
        .collect();
    Channel::new(kraus, "mixed_unitary")
}

/// Haar-random channel: a random isometry V: d_in → d_out ⊗ env, Kraus
/// operators Kₑ = (I ⊗ ⟨e|)V. Deterministic in the seed.
pub fn random_channel(d_in: usize, d_out: usize, env_dim: usize, seed: u64) -> Result<Channel> {
    let total = d_out * env_dim;
    if total < d_in {
        return Err(Error::InvalidParameter(format!(
            "random channel needs d_out·env ≥ d_in, got {total} < {d_in}"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let u = haar_unitary(total, &mut rng);
    // Isometry = first d_in columns; output index (o,e) flattens to o·env+e.
    let kraus: Vec<CMatrix> = (0..env_dim)
        .map(|e| CMatrix::from_fn(d_out, d_in, |o, m| u[(o * env_dim + e, m)]))
        .collect();
    Channel::new(kraus, format!("random({d_in}->{d_out}, env={env_dim}, seed={seed})"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::choi::kraus_from_choi;
    use crate::matcore::random::{random_haar_unitary, random_pure};

    #[test]
    fn depolarizing_extremes() {
        // λ=1 is the identity channel.
        let t = depolarizing(2, 1.0).unwrap();
        assert!(t.choi().max_abs_diff(&identity_channel(2).choi()) < 1e-10);

        // λ=0 is the constant maximally mixed channel.
        let t0 = depolarizing(2, 0.0).unwrap();
        let cc = constant_channel(&DensityMatrix::maximally_mixed(2), 2);
        assert!(t0.choi().max_abs_diff(&cc.choi()) < 1e-10);
    }

    #[test]
    fn depolarizing_range_enforced() {
        assert!(depolarizing(2, 1.5).is_err());
        assert!(depolarizing(2, -0.4).is_err());
        assert!(depolarizing(2, -1.0 / 3.0).is_ok());
    }

    #[test]
    fn all_constructors_pass_cptp_validation() {
        let u = random_haar_unitary(3, 1);
        let sigma = random_pure(2, 2).to_density();
        let p = ProbDist::new(vec![0.25, 0.75]).unwrap();
        let us = vec![random_haar_unitary(2, 3), random_haar_unitary(2, 4)];
        let channels: Vec<Channel> = vec![
            identity_channel(4),
            depolarizing(3, 0.4).unwrap(),
            dephasing(3),
            unitary_channel(&u),
            constant_channel(&sigma, 3),
            partial_trace_channel(2, 3, Factor::Left),
            partial_trace_channel(2, 3, Factor::Right),
            werner_holevo(3),
            mixed_unitary(&p, &us).unwrap(),
            random_channel(2, 3, 2, 7).unwrap(),
        ];
        for t in &channels {
            assert!(
                t.trace_preservation_error() < 1e-10,
                "{} violates trace preservation",
                t.label()
            );
        }
    }

    #[test]
    fn werner_holevo_output_spectrum_on_pure_inputs() {
        let t = werner_holevo(3);
        for seed in 0..4u64 {
            let psi = random_pure(3, seed);
            let out = t.apply(&psi.to_density()).unwrap();
            let eigs = out.eigenvalues();
            assert!((eigs[0] - 0.5).abs() < 1e-10);
            assert!((eigs[1] - 0.5).abs() < 1e-10);
            assert!(eigs[2].abs() < 1e-10);
        }
        assert!(t.is_unital().unwrap());
    }

    #[test]
    fn partial_trace_channel_matches_partial_trace() {
        let rho = crate::matcore::random::random_density(6, 4, 5)
            .with_dims(vec![2, 3])
            .unwrap();
        let keep_a = partial_trace_channel(2, 3, Factor::Left).apply(&rho).unwrap();
        let direct = rho.partial_trace(&[0]).unwrap();
        assert!(matrix::max_abs_diff(keep_a.mat(), direct.mat()) < 1e-12);

        let keep_b = partial_trace_channel(2, 3, Factor::Right).apply(&rho).unwrap();
        let direct_b = rho.partial_trace(&[1]).unwrap();
        assert!(matrix::max_abs_diff(keep_b.mat(), direct_b.mat()) < 1e-12);
    }

    #[test]
    fn tensor_with_constant_factorizes() {
        let t = depolarizing(2, 0.7).unwrap();
        let sigma = random_pure(2, 9).to_density();
        let c = constant_channel(&sigma, 2);
        let prod = t.tensor(&c);

        let rho1 = crate::matcore::random::random_density(2, 2, 10);
        let rho2 = crate::matcore::random::random_density(2, 2, 11);
        let joint = DensityMatrix::new(matrix::kron(rho1.mat(), rho2.mat()), vec![4]).unwrap();
        let out = prod.apply(&joint).unwrap();
        let expect = matrix::kron(t.apply(&rho1).unwrap().mat(), sigma.mat());
        assert!(matrix::max_abs_diff(out.mat(), &expect) < 1e-10);
    }

    #[test]
    fn pad_output_choi_matches_direct_construction() {
        let t = depolarizing(2, 0.5).unwrap();
        let sigma = crate::matcore::random::random_density(2, 2, 12);
        let padded = t.pad_output(&sigma);

        // Direct construction: Choi from basis-matrix action ρ ↦ T(ρ)⊗σ.
        let d_in = 2;
        let d_out = padded.d_out();
        let mut mat = CMatrix::zeros(d_in * d_out, d_in * d_out);
        for i in 0..d_in {
            for j in 0..d_in {
                let out = matrix::kron(&t.apply_mat(&matrix::basis_matrix(d_in, i, j)), sigma.mat());
                for o in 0..d_out {
                    for op in 0..d_out {
                        mat[(i * d_out + o, j * d_out + op)] += out[(o, op)];
                    }
                }
            }
        }
        assert!(matrix::max_abs_diff(padded.choi().mat(), &mat) < 1e-10);
    }

    #[test]
    fn random_channel_round_trips_through_choi() {
        let t = random_channel(3, 2, 3, 21).unwrap();
        let back = kraus_from_choi(&t.choi()).unwrap();
        assert!(t.choi().max_abs_diff(&back.choi()) < 1e-9);
    }
}

//! Coherent information J(T) = sup_ρ S(T(ρ)) − S((T⊗id)Ψ) and mutual
//! information I(T) = sup_ρ S(ρ) + S(T(ρ)) − S((T⊗id)Ψ), both computed
//! through the complementary channel: S((T⊗id)Ψ) = S(T_c(ρ)).

use super::{BoundKind, OptimizerOptions, QuantityResult, Witness};
use crate::channels::Channel;
use crate::error::{Error, Result};
use crate::matcore::entropy::entropy_of_hermitian;
use crate::matcore::random::rng_from_seed;
use crate::matcore::state::DensityMatrix;
use crate::optim::{best_of_restarts, best_of_restarts_staged, params, restart_seed};

/// S(T(ρ)) − S(T_c(ρ)).
pub fn coherent_objective(channel: &Channel, rho: &DensityMatrix) -> f64 {
    let tc = channel.complementary();
    entropy_of_hermitian(&channel.apply_mat(rho.mat())) - entropy_of_hermitian(&tc.apply_mat(rho.mat()))
}

/// S(ρ) + S(T(ρ)) − S(T_c(ρ)).
pub fn mutual_objective(channel: &Channel, rho: &DensityMatrix) -> f64 {
    entropy_of_hermitian(rho.mat()) + coherent_objective(channel, rho)
}

fn maximize_over_densities(
    channel: &Channel,
    opts: &OptimizerOptions,
    include_input_entropy: bool,
    staged: bool,
) -> Result<(f64, DensityMatrix, usize, usize)> {
    opts.validate()?;
    let d = channel.d_in();
    let tc = channel.complementary();
    let nm = opts.nelder_mead();
    // Density matrices enter through the total map x ↦ AA†/tr(AA†).
    let objective = |x: &[f64]| {
        let rho = params::density_from_params(x, d);
        let mut val =
            entropy_of_hermitian(&channel.apply_mat(&rho)) - entropy_of_hermitian(&tc.apply_mat(&rho));
        if include_input_entropy {
            val += entropy_of_hermitian(&rho);
        }
        -val
    };

    let run_one = |i: usize| {
        let mut rng = rng_from_seed(restart_seed(opts.seed, i));
        // Restart 0 starts at the maximally mixed state (identity factor).
        let x0 = if i == 0 {
            params::params_from_density_factor(
                &(crate::matcore::matrix::identity(d)
                    * num_complex::Complex64::new(1.0 / (d as f64).sqrt(), 0.0)),
            )
        } else {
            params::random_params(2 * d * d, &mut rng)
        };
        let m = nm.minimize_polished(&objective, &x0, 1);
        (m.value, m.x)
    };

    let (best, used) = if staged {
        // The objective is concave in ρ, so agreeing probes are conclusive.
        best_of_restarts_staged(opts.restarts, 2, 1e-6, run_one)
    } else {
        (best_of_restarts(opts.restarts, run_one), opts.restarts)
    };

    let rho = DensityMatrix::trusted(
        params::density_from_params(&best.payload, d),
        vec![d],
    );
    Ok((-best.value, rho, used, best.index))
}

/// Coherent information, maximized over density matrices. The objective is
/// not concave for general channels, so the result is a lower bound; the
/// witness is the best input found.
pub fn coherent_information(channel: &Channel, opts: &OptimizerOptions) -> Result<QuantityResult> {
    let (_, rho, used, idx) = maximize_over_densities(channel, opts, false, false)?;
    let value = coherent_objective(channel, &rho);
    Ok(QuantityResult {
        value,
        witness: Witness::Density(rho),
        witness_value: value,
        bound_kind: BoundKind::LowerBound,
        restarts_used: used,
        best_restart_index: idx,
    })
}

/// Mutual information (entanglement-assisted capacity). The objective is
/// concave in ρ, so the local search converges to the global maximum;
/// restarts stop early once two probes agree.
pub fn mutual_information(channel: &Channel, opts: &OptimizerOptions) -> Result<QuantityResult> {
    let (_, rho, used, idx) = maximize_over_densities(channel, opts, true, true)?;
    let value = mutual_objective(channel, &rho);
    Ok(QuantityResult {
        value,
        witness: Witness::Density(rho),
        witness_value: value,
        bound_kind: BoundKind::ExactClosedForm,
        restarts_used: used,
        best_restart_index: idx,
    })
}

/// Validates that the state dimension matches the channel input.
pub(crate) fn check_input_dim(channel: &Channel, rho: &DensityMatrix) -> Result<()> {
    if rho.dim() != channel.d_in() {
        return Err(Error::DimensionMismatch(format!(
            "channel expects input dimension {}, state has {}",
            channel.d_in(),
            rho.dim()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{depolarizing, identity_channel, unitary_channel};
    use crate::matcore::random::random_haar_unitary;

    fn opts() -> OptimizerOptions {
        OptimizerOptions::seeded(11).with_restarts(6)
    }

    #[test]
    fn coherent_information_of_identity_qubit() {
        let r = coherent_information(&identity_channel(2), &opts()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-5, "J = {}", r.value);
    }

    #[test]
    fn coherent_information_of_constant_channel_is_zero() {
        let t = depolarizing(2, 0.0).unwrap();
        let r = coherent_information(&t, &opts()).unwrap();
        assert!(r.value.abs() < 1e-6, "J = {}", r.value);
    }

    #[test]
    fn coherent_information_of_unitary_is_log_d() {
        let t = unitary_channel(&random_haar_unitary(3, 4));
        let r = coherent_information(&t, &opts()).unwrap();
        assert!((r.value - 3f64.log2()).abs() < 1e-5, "J = {}", r.value);
    }

    #[test]
    fn mutual_information_of_identity() {
        let r = mutual_information(&identity_channel(2), &opts()).unwrap();
        assert!((r.value - 2.0).abs() < 1e-5, "I = {}", r.value);

        let r3 = mutual_information(&identity_channel(3), &opts()).unwrap();
        assert!((r3.value - 2.0 * 3f64.log2()).abs() < 1e-4, "I = {}", r3.value);
    }

    #[test]
    fn mutual_information_of_constant_channel_is_zero() {
        let t = depolarizing(2, 0.0).unwrap();
        let r = mutual_information(&t, &opts()).unwrap();
        assert!(r.value.abs() < 1e-6, "I = {}", r.value);
    }

    #[test]
    fn witnesses_reevaluate() {
        let t = crate::channels::random_channel(2, 2, 2, 9).unwrap();
        let j = coherent_information(&t, &opts()).unwrap();
        if let Witness::Density(rho) = &j.witness {
            assert!((coherent_objective(&t, rho) - j.value).abs() < 1e-8);
        }
        let i = mutual_information(&t, &opts()).unwrap();
        if let Witness::Density(rho) = &i.witness {
            assert!((mutual_objective(&t, rho) - i.value).abs() < 1e-8);
        }
        // Informal ordering: entanglement assistance helps.
        assert!(j.value <= i.value + 1e-6);
        assert!(j.value >= -1e-8);
    }
}

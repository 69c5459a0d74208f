//! HSW capacity χ(T) = sup over pure-state ensembles of the Holevo quantity,
//! the constrained capacity χ(T, ρ), and the capacity/minimal-entropy gap.
//!
//! The search alternates two monotone steps: a Blahut–Arimoto update of the
//! probabilities (the objective is concave in p for fixed states, and the
//! classical update applies verbatim to the induced classical-quantum
//! channel), and a per-state simplex descent with the remaining ensemble
//! frozen. Pure ensemble members suffice because the Holevo quantity is
//! convex in each member.

use num_complex::Complex64;

use super::coherent::check_input_dim;
use super::roof::convex_closure_output_entropy;
use super::{BoundKind, Ensemble, OptimizerOptions, QuantityResult, Witness};
use crate::channels::Channel;
use crate::error::Result;
use crate::matcore::entropy::{entropy_from_eigenvalues, entropy_of_hermitian, RenyiOrder};
use crate::matcore::matrix::{hermitian_spectrum_unchecked, zeros, CMatrix, CVector};
use crate::matcore::random::{haar_pure, rng_from_seed};
use crate::matcore::state::{DensityMatrix, ProbDist, PureState};
use crate::optim::{best_of_restarts, params, restart_seed, NelderMead};

/// Holevo quantity S(Σ pₖ T(ρₖ)) − Σ pₖ S(T(ρₖ)) of an input ensemble.
pub fn holevo_quantity(channel: &Channel, ensemble: &Ensemble) -> f64 {
    let mut avg = zeros(channel.d_out(), channel.d_out());
    let mut mean_entropy = 0.0;
    for (p, rho) in ensemble.probs().weights().iter().zip(ensemble.states()) {
        let out = channel.apply_mat(rho.mat());
        mean_entropy += p * entropy_of_hermitian(&out);
        avg += out * Complex64::new(*p, 0.0);
    }
    entropy_of_hermitian(&avg) - mean_entropy
}

struct EnsembleSearch {
    states: Vec<CVector>,
    outputs: Vec<CMatrix>,
    entropies: Vec<f64>,
    probs: Vec<f64>,
    d_out: usize,
}

impl EnsembleSearch {
    fn average(&self) -> CMatrix {
        let mut avg = zeros(self.d_out, self.d_out);
        for (p, out) in self.probs.iter().zip(&self.outputs) {
            avg += out * Complex64::new(*p, 0.0);
        }
        avg
    }

    fn objective(&self) -> f64 {
        let mean: f64 = self.probs.iter().zip(&self.entropies).map(|(p, s)| p * s).sum();
        entropy_of_hermitian(&self.average()) - mean
    }

    /// Blahut–Arimoto probability updates, pₖ ∝ pₖ·2^{D(σₖ‖σ̄)}, run to
    /// stationarity. Monotone in the objective for fixed states.
    fn update_probs(&mut self) {
        let mut last = self.objective();
        for _ in 0..200 {
            let (eigs, vecs) = hermitian_spectrum_unchecked(&self.average());
            // log₂ σ̄ expressed spectrally; vanishing directions are skipped,
            // their overlaps are O(λ) as long as every pₖ stays positive.
            let mut log_weights = vec![0.0f64; self.probs.len()];
            for (k, out) in self.outputs.iter().enumerate() {
                if self.probs[k] <= 0.0 {
                    log_weights[k] = f64::NEG_INFINITY;
                    continue;
                }
                let mut cross = 0.0;
                for (a, &lam) in eigs.iter().enumerate() {
                    if lam <= 1e-15 {
                        continue;
                    }
                    let col = vecs.column(a);
                    let mut overlap = 0.0;
                    for r in 0..self.d_out {
                        for c in 0..self.d_out {
                            overlap += (col[r].conj() * out[(r, c)] * col[c]).re;
                        }
                    }
                    if overlap > 1e-16 {
                        cross += overlap * lam.log2();
                    }
                }
                let relative = -self.entropies[k] - cross;
                log_weights[k] = self.probs[k].log2() + relative;
            }
            let peak = log_weights.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            if !peak.is_finite() {
                return;
            }
            let mut total = 0.0;
            for w in &mut log_weights {
                *w = (*w - peak).exp2();
                total += *w;
            }
            for (p, w) in self.probs.iter_mut().zip(&log_weights) {
                *p = w / total;
            }
            let now = self.objective();
            if (now - last).abs() < 1e-11 {
                return;
            }
            last = now;
        }
    }

    /// One coordinate-descent sweep over the ensemble states.
    fn update_states(&mut self, channel: &Channel, nm: &NelderMead) {
        for k in 0..self.states.len() {
            let p = self.probs[k];
            if p < 1e-10 {
                continue;
            }
            let mut partial_avg = self.average();
            partial_avg -= &self.outputs[k] * Complex64::new(p, 0.0);
            let partial_entropy: f64 = self
                .probs
                .iter()
                .zip(&self.entropies)
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, (q, s))| q * s)
                .sum();

            let objective = |x: &[f64]| {
                let psi = params::unit_vector_from_params(x);
                let out = channel.apply_pure(&psi);
                let s = entropy_of_hermitian(&out);
                let avg = &partial_avg + &out * Complex64::new(p, 0.0);
                -(entropy_of_hermitian(&avg) - partial_entropy - p * s)
            };

            let x0 = params::params_from_unit_vector(&self.states[k]);
            let m = nm.minimize(&objective, &x0);
            if -m.value > self.objective() + 1e-14 {
                let psi = params::unit_vector_from_params(&m.x);
                self.outputs[k] = channel.apply_pure(&psi);
                self.entropies[k] = entropy_of_hermitian(&self.outputs[k]);
                self.states[k] = psi;
            }
            let _ = d_in;
        }
    }

    fn into_ensemble(self, d_in: usize) -> Ensemble {
        let mut probs = Vec::new();
        let mut states = Vec::new();
        for (p, psi) in self.probs.iter().zip(&self.states) {
            if *p < 1e-12 {
                continue;
            }
            probs.push(*p);
            states.push(
                PureState::new(psi.clone(), vec![d_in])
                    .expect("search states stay normalized")
                    .to_density(),
            );
        }
        if states.is_empty() {
            // Degenerate but possible when every weight collapses; fall back
            // to the first search state.
            probs.push(1.0);
            states.push(
                PureState::new(self.states[0].clone(), vec![d_in])
                    .expect("search states stay normalized")
                    .to_density(),
            );
        }
        Ensemble::new(
            ProbDist::normalized(probs).expect("positive weights"),
            states,
        )
        .expect("ensemble built from a consistent search")
    }
}

fn chi_single_restart(
    channel: &Channel,
    m: usize,
    seed: u64,
    basis_start: bool,
    opts: &OptimizerOptions,
) -> EnsembleSearch {
    let d_in = channel.d_in();
    let mut rng = rng_from_seed(seed);
    let states: Vec<CVector> = (0..m)
        .map(|k| {
            if basis_start {
                crate::matcore::matrix::basis_vector(d_in, k % d_in)
            } else {
                haar_pure(d_in, &mut rng)
            }
        })
        .collect();
    let outputs: Vec<CMatrix> = states.iter().map(|s| channel.apply_pure(s)).collect();
    let entropies: Vec<f64> = outputs.iter().map(entropy_of_hermitian).collect();
    let mut search = EnsembleSearch {
        states,
        outputs,
        entropies,
        probs: vec![1.0 / m as f64; m],
        d_out: channel.d_out(),
    };

    let nm = NelderMead {
        max_iterations: (150 + 50 * d_in).min(opts.max_iterations),
        f_tolerance: opts.objective_tolerance,
        ..Default::default()
    };
    let mut last = f64::NEG_INFINITY;
    for _ in 0..30 {
        search.update_probs();
        search.update_states(channel, &nm);
        let now = search.objective();
        if now - last < 1e-8 {
            break;
        }
        last = now;
    }
    search.update_probs();
    search
}

/// HSW capacity lower bound from a multi-start alternating search over
/// ensembles of `m` pure states (`m` = `opts.ensemble_size`, default d_in²).
/// Restart 0 starts from the computational basis, the rest from Haar-random
/// states; the witness is the best ensemble found.
pub fn holevo_capacity(channel: &Channel, opts: &OptimizerOptions) -> Result<QuantityResult> {
    opts.validate()?;
    let d_in = channel.d_in();
    let m = opts.ensemble_size.unwrap_or(d_in * d_in).max(2);

    let best = best_of_restarts(opts.restarts, |i| {
        let search = chi_single_restart(
            channel,
            m,
            restart_seed(opts.seed, i),
            i == 0,
            opts,
        );
        // best_of_restarts minimizes.
        (-search.objective(), search.into_ensemble(d_in))
    });

    let ensemble = best.payload;
    let value = holevo_quantity(channel, &ensemble);
    Ok(QuantityResult {
        value,
        witness: Witness::Ensemble(ensemble),
        witness_value: value,
        bound_kind: BoundKind::LowerBound,
        restarts_used: opts.restarts,
        best_restart_index: best.index,
    })
}

/// Constrained HSW capacity χ(T, ρ) = S(T(ρ)) − H_T(ρ). The witness is the
/// decomposition achieving the convex-closure bound.
pub fn constrained_holevo(
    channel: &Channel,
    rho: &DensityMatrix,
    opts: &OptimizerOptions,
) -> Result<QuantityResult> {
    check_input_dim(channel, rho)?;
    let roof = convex_closure_output_entropy(channel, rho, opts)?;
    let s_out = entropy_of_hermitian(&channel.apply_mat(rho.mat()));
    let value = s_out - roof.value;
    Ok(QuantityResult {
        value,
        witness_value: s_out - roof.witness_value,
        witness: roof.witness,
        bound_kind: BoundKind::LowerBound,
        restarts_used: roof.restarts_used,
        best_restart_index: roof.best_restart_index,
    })
}

/// log₂ d_out − S_min(T) − χ(T): non-negative for every channel, zero for
/// unital qubit channels.
pub fn hsw_smin_gap(channel: &Channel, opts: &OptimizerOptions) -> Result<f64> {
    let smin = super::min_output::min_output_renyi(channel, RenyiOrder::Alpha(1.0), opts)?;
    let chi = holevo_capacity(channel, opts)?;
    Ok((channel.d_out() as f64).log2() - smin.value - chi.value)
}

/// One-shot objective evaluation used by feasibility arguments: the Holevo
/// quantity of an explicitly constructed ensemble (members may be mixed).
pub fn holevo_quantity_of_parts(channel: &Channel, probs: &[f64], states: &[DensityMatrix]) -> f64 {
    let ens = Ensemble::new(
        ProbDist::normalized(probs.to_vec()).expect("positive weights"),
        states.to_vec(),
    )
    .expect("consistent ensemble");
    holevo_quantity(channel, &ens)
}

//! Minimal output α-Rényi entropy. Pure inputs suffice: the von Neumann
//! entropy is concave and the Schatten α-norm convex, so the optimum over
//! density matrices sits at an extreme point.

use super::{BoundKind, OptimizerOptions, QuantityResult, Witness};
use crate::channels::Channel;
use crate::error::Result;
use crate::matcore::entropy::{renyi_of_hermitian, RenyiOrder};
use crate::matcore::random::rng_from_seed;
use crate::matcore::state::PureState;
use crate::optim::{best_of_restarts, params, restart_seed};

/// S_α(T(ψ)) for a pure input.
pub fn output_renyi(channel: &Channel, psi: &PureState, order: RenyiOrder) -> f64 {
    renyi_of_hermitian(&channel.apply_pure(psi.vec()), order)
}

/// Minimize S_α(T(ψ)) over pure inputs by multi-start simplex descent on the
/// real embedding of the unit sphere. The result is a certified upper bound
/// on the true minimum; the witness is the best input found.
pub fn min_output_renyi(
    channel: &Channel,
    order: RenyiOrder,
    opts: &OptimizerOptions,
) -> Result<QuantityResult> {
    opts.validate()?;
    let d = channel.d_in();
    let nm = opts.nelder_mead();
    let objective =
        |x: &[f64]| renyi_of_hermitian(&channel.apply_pure(&params::unit_vector_from_params(x)), order);

    let best = best_of_restarts(opts.restarts, |i| {
        let mut rng = rng_from_seed(restart_seed(opts.seed, i));
        // Restart 0 starts at |0⟩; the rest are Haar-random directions.
        let x0 = if i == 0 {
            let mut x = vec![0.0; 2 * d];
            x[0] = 1.0;
            x
        } else {
            params::random_params(2 * d, &mut rng)
        };
        let m = nm.minimize_polished(&objective, &x0, 1);
        (m.value, m.x)
    });

    let witness = PureState::new(params::unit_vector_from_params(&best.payload), vec![d])
        .expect("embedded parameters normalize to a unit vector");
    let value = output_renyi(channel, &witness, order);
    Ok(QuantityResult {
        value,
        witness: Witness::Pure(witness),
        witness_value: value,
        bound_kind: BoundKind::UpperBound,
        restarts_used: opts.restarts,
        best_restart_index: best.index,
    })
}

//! Derivative-free local search and the deterministic multi-start driver
//! shared by all quantity optimizers.

pub mod multistart;
pub mod nelder_mead;
pub mod params;

pub use multistart::{best_of_restarts, best_of_restarts_staged, restart_seed, RestartOutcome};
pub use nelder_mead::{Minimum, NelderMead};

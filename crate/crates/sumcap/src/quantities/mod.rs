//! Numerical evaluation of the information quantities: minimal output Rényi
//! entropy, coherent and mutual information, HSW capacity, the constrained
//! capacity, the convex closure of the output entropy, entanglement of
//! formation, and the closed-form block-weight optimizer.
//!
//! Every evaluator returns a [`QuantityResult`]: the value in bits, the
//! achieving witness, and an explicit [`BoundKind`] — nonconvex searches
//! certify one-sided bounds only.

mod block_weights;
mod coherent;
mod eof;
mod holevo;
mod min_output;
mod roof;

pub use block_weights::optimal_block_weights;
pub use coherent::{
    coherent_information, coherent_objective, mutual_information, mutual_objective,
};
pub use eof::{concurrence, concurrence_eof, eof};
pub use holevo::{constrained_holevo, holevo_capacity, holevo_quantity, hsw_smin_gap};
pub use min_output::{min_output_renyi, output_renyi};
pub use roof::{average_output_entropy, convex_closure_output_entropy};

use crate::error::{Error, Result};
use crate::matcore::state::{DensityMatrix, ProbDist, PureState};
use serde::Serialize;

/// Options shared by all optimizing quantities.
#[derive(Debug, Clone, Serialize)]
pub struct OptimizerOptions {
    pub restarts: usize,
    pub max_iterations: usize,
    pub objective_tolerance: f64,
    pub seed: u64,
    /// Ensemble cardinality for the HSW search; defaults to d_in².
    pub ensemble_size: Option<usize>,
    /// Pure-state count for convex-roof decompositions; defaults to rank².
    pub decomposition_size: Option<usize>,
}

impl Default for OptimizerOptions {
    fn default() -> Self {
        Self {
            restarts: 32,
            max_iterations: 10_000,
            objective_tolerance: 1e-9,
            seed: 0,
            ensemble_size: None,
            decomposition_size: None,
        }
    }
}

impl OptimizerOptions {
    pub fn seeded(seed: u64) -> Self {
        Self {
            seed,
            ..Default::default()
        }
    }

    pub fn with_restarts(mut self, restarts: usize) -> Self {
        self.restarts = restarts;
        self
    }

    pub fn with_ensemble_size(mut self, m: usize) -> Self {
        self.ensemble_size = Some(m);
        self
    }

    pub fn with_decomposition_size(mut self, m: usize) -> Self {
        self.decomposition_size = Some(m);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.restarts < 1 {
            return Err(Error::InvalidParameter("restarts must be ≥ 1".into()));
        }
        if !(self.objective_tolerance > 0.0) {
            return Err(Error::InvalidParameter(
                "objective tolerance must be positive".into(),
            ));
        }
        Ok(())
    }

    pub(crate) fn nelder_mead(&self) -> crate::optim::NelderMead {
        crate::optim::NelderMead {
            max_iterations: self.max_iterations,
            f_tolerance: self.objective_tolerance,
            ..Default::default()
        }
    }
}

/// How to read the reported value of a nonconvex search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    ExactClosedForm,
    UpperBound,
    LowerBound,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::ExactClosedForm => write!(f, "exact-closed-form"),
            Self::UpperBound => write!(f, "upper-bound"),
            Self::LowerBound => write!(f, "lower-bound"),
        }
    }
}

/// Probability vector plus density matrices of a common dimension.
#[derive(Debug, Clone)]
pub struct Ensemble {
    probs: ProbDist,
    states: Vec<DensityMatrix>,
}

impl Ensemble {
    pub fn new(probs: ProbDist, states: Vec<DensityMatrix>) -> Result<Self> {
        if probs.len() != states.len() {
            return Err(Error::DimensionMismatch(
                "ensemble probability and state counts differ".into(),
            ));
        }
        if states.is_empty() {
            return Err(Error::InvalidParameter("empty ensemble".into()));
        }
        let d = states[0].dim();
        if states.iter().any(|s| s.dim() != d) {
            return Err(Error::DimensionMismatch(
                "ensemble states have mixed dimensions".into(),
            ));
        }
        Ok(Self { probs, states })
    }

    pub fn probs(&self) -> &ProbDist {
        &self.probs
    }

    pub fn states(&self) -> &[DensityMatrix] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Σ pₖ ρₖ.
    pub fn average(&self) -> DensityMatrix {
        let d = self.states[0].dim();
        let mut acc = crate::matcore::matrix::zeros(d, d);
        for (p, s) in self.probs.weights().iter().zip(&self.states) {
            acc += s.mat() * num_complex::Complex64::new(*p, 0.0);
        }
        DensityMatrix::trusted(acc, self.states[0].dims().to_vec())
    }
}

/// The achieving input of a quantity evaluation.
#[derive(Debug, Clone)]
pub enum Witness {
    Pure(PureState),
    Density(DensityMatrix),
    Ensemble(Ensemble),
}

impl Witness {
    pub fn summary(&self) -> String {
        match self {
            Self::Pure(p) => format!("pure state, dim {}", p.dim()),
            Self::Density(r) => format!("density matrix, dim {}, rank {}", r.dim(), r.rank()),
            Self::Ensemble(e) => format!(
                "ensemble of {} states, dim {}",
                e.len(),
                e.states()[0].dim()
            ),
        }
    }
}

/// Value (bits) plus the witness that achieves it.
///
/// `witness_value` is the objective re-evaluated at the witness; it equals
/// `value` except on the closed-form entanglement-of-formation path, where
/// `value` may come from the concurrence oracle while the witness is the
/// roof decomposition.
#[derive(Debug, Clone)]
pub struct QuantityResult {
    pub value: f64,
    pub witness: Witness,
    pub witness_value: f64,
    pub bound_kind: BoundKind,
    pub restarts_used: usize,
    pub best_restart_index: usize,
}

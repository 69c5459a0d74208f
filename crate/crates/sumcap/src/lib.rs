//! Capacities and entropic quantities of finite-dimensional quantum channels.
//!
//! The crate is organized in layers:
//!
//! - [`matcore`] — dense complex linear algebra, entropies, purification and
//!   seeded randomness.
//! - [`channels`] — Kraus/Choi channel representations, CPTP validation and
//!   the channel constructors (identity, depolarizing, Werner-Holevo, ...).
//! - [`quantities`] — numerical evaluation of minimal output Rényi entropy,
//!   coherent/mutual information, HSW capacity, the convex closure of the
//!   output entropy and entanglement of formation, each returning a value
//!   plus the achieving witness.
//! - [`harness`] — executable checks of the direct-sum identities, the
//!   reduction constructions and the entanglement-monotone affinity law,
//!   producing [`harness::CheckReport`] records.
//! - [`cli`] — the `sumcap` command-line front end.
//!
//! Multi-start optimizer restarts run in parallel through rayon when the
//! default `parallel` feature is enabled; a sequential fallback is always
//! available (see [`exec`]). Results are identical either way: restart seeds
//! are derived deterministically and the reduction over restarts is
//! order-independent.

pub mod channels;
pub mod cli;
pub mod error;
pub mod exec;
pub mod harness;
pub mod matcore;
pub mod optim;
pub mod quantities;

pub use error::{Error, Result};

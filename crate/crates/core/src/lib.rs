//! Core library for surrogate-assisted optimization of a gas-turbine system.
//!
//! The pipeline: load or synthesize plant operating data, train shallow MLP
//! surrogates for power, thermal efficiency and turbine heat rate, fit a
//! Mahalanobis ellipsoid over the scaled inputs as an operating-envelope
//! constraint, then solve setpoint / ramp / extrapolation NLPs with an
//! augmented-Lagrangian solver. Monte Carlo perturbation and Shapley
//! attribution quantify robustness and feature importance.
//!
//! Everything is deterministic given the seeds carried in the various
//! config structs; no wall-clock entropy is used anywhere.

pub mod dataset;
pub mod error;
pub mod explain;
pub mod linalg;
pub mod mahalanobis;
pub mod optimizer;
pub mod robustness;
pub mod scenarios;
pub mod seeds;
pub mod surrogate;

pub use error::CoreError;

/// Number of model input variables (6 process + 3 ambient).
pub const INPUT_DIM: usize = 9;

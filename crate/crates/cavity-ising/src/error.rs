//! Error types shared across the simulator.

use thiserror::Error;

/// Invalid model parameters.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("site count n = {n} must be even and at least 4")]
    BadSiteCount { n: usize },
    #[error("parameter {name} = {value} must be {requirement}")]
    BadParameter {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },
}

/// Failures of the self-consistent stationary analysis.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum StationaryError {
    #[error("delta_c = 0 has no stationary solution (the drive term diverges)")]
    ZeroDetuning,
    #[error("scan range [{lo}, {hi}] is empty or has fewer than 2 samples")]
    EmptyScan { lo: f64, hi: f64 },
    #[error("no bistable regime: d eps/d x_a has no sign change on the scan (monotone drive curve)")]
    NoBistability,
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Failures of the time evolution and protocol drivers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum DynamicsError {
    #[error(
        "requested {requested} branch does not exist at eps = {eps}; available: {available}"
    )]
    BranchUnavailable {
        requested: String,
        eps: f64,
        available: String,
    },
    #[error(
        "per-pair norm drift {drift:.3e} at t = {t} exceeds 1e-6; reduce the step size dt"
    )]
    NormDrift { drift: f64, t: f64 },
    #[error("integrator config invalid: {0}")]
    BadConfig(String),
    #[error(transparent)]
    Stationary(#[from] StationaryError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Failures of the measurement / fitting operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error(
        "adiabatic readout from B_eff = {b_from} to {b_to} would cross the critical point B = J0"
    )]
    WouldCrossCritical { b_from: f64, b_to: f64 },
    #[error("scaling fit needs at least 3 (T, lambda_c) pairs, got {0}")]
    TooFewPairs(usize),
    #[error("scaling fit needs all lambda_c of one sign")]
    MixedSigns,
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
}

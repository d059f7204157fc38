//! Mean-field simulator for a transverse-field Ising chain coupled to a
//! driven, damped cavity.
//!
//! The cavity displacement shifts the transverse field of the chain while
//! the chain magnetization back-acts on the cavity drive, producing a
//! bistable regime bounded by two bifurcation points. This crate provides
//!
//! * [`tfim`] — momentum-space Bogoliubov machinery for the chain and all
//!   observables of a pair-product state,
//! * [`stationary`] — self-consistent stationary solutions, their linear
//!   stability, and bifurcation-point location,
//! * [`dynamics`] — joint Runge-Kutta evolution of cavity quadratures and
//!   mode pairs plus the sudden-quench, slow-ramp and hysteresis protocols,
//! * [`analysis`] — Landau-Zener reference predictions, spin-basis
//!   quasiparticle estimators with an adiabatic readout ramp, and the
//!   empirical ramp-rate scaling fit,
//! * [`oracle`] — a dense exact-diagonalization cross-check for small
//!   chains,
//! * [`cli`] — the configuration-driven command-line front end.

pub mod analysis;
pub mod cli;
pub mod dynamics;
pub mod error;
pub mod oracle;
pub mod parallel;
pub mod stationary;
pub mod tfim;

pub use error::{AnalysisError, DynamicsError, ModelError, StationaryError};
pub use tfim::ModelParams;

//! Birth-death processes with rates `B_N = βN^b`, `D_N = δN^d`.
//!
//! Numerical oracles (truncated master equation, Gillespie sampling) sit next
//! to the closed-form generating function of the linear model.

mod closed;
mod exec;
mod gillespie;
mod master;
mod model;
mod output;

pub use closed::{extinction_probability, series_pow, ClosedFormG, Variant};
pub use exec::Execution;
pub use gillespie::{
    gillespie, gillespie_with, ConfidenceIntervals, EnsembleSummary, GillespieConfig, Interval, TrajectoryEnsemble, RNG_ID,
};
pub use master::{integrate_master, master_rhs, master_rhs_with, rate_tables, stable_step, vector_moments, DistributionSnapshot, LEAKAGE_WARN};
pub use model::{BirthDeathModel, ModelError};
pub use output::{write_distribution_csv, write_trajectories_csv};

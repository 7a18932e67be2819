//! Instance generators, repeated-trial experiments and their reports.

pub mod ensemble;
pub mod experiments;
pub mod lowerbound;
pub mod report;

pub use ensemble::{Ensemble, Instance, TextKind, WeightKind};
pub use experiments::{
    concentration_experiment, error_sweep, event_experiment, trial_seed, Estimator, EventReportSet, EventSummary,
    EventTrial, LowerboundReport, LowerboundSummary, LowerboundTrial,
};
pub use lowerbound::{
    gen_blocks, gen_lowerbound, lowerbound_r, lowerbound_word, rho, t1_threshold, t2_threshold, LowerboundKind,
    Premises,
};
pub use report::{percentile, DeltaSummary, ExperimentReport, Report, TrialResult, SCHEMA};

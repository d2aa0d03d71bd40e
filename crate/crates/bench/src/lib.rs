//! Benchmark campaigns for the n-way GCD algorithms.
//!
//! A [`BenchConfig`] fixes a seed, a list shape and an input distribution.
//! [`run_campaign`] generates the inputs, runs every selected algorithm on
//! each of them, insists that all algorithms agree, and aggregates their
//! [`gcdn_core::OpCounters`] and wall times into a [`BenchReport`].

mod campaign;
mod config;
mod generate;
pub mod report;

pub use campaign::{
    run_campaign, AlgorithmRow, BenchError, BenchReport, FieldStats, Measurement, TrialRecord,
};
pub use config::{BenchConfig, ConfigError, Distribution};
pub use generate::generate_inputs;

use std::time::Instant;

use gcdn_core::{Algorithm, Natural, NumberList, OpCounters};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::config::{BenchConfig, ConfigError};
use crate::generate::generate_inputs;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BenchError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{}", describe_mismatch(.trial, .input, .results))]
    Mismatch {
        trial: usize,
        input: NumberList,
        results: Vec<(Algorithm, Natural)>,
    },
}

fn describe_mismatch(
    trial: &usize,
    input: &NumberList,
    results: &[(Algorithm, Natural)],
) -> String {
    let got: Vec<String> = results.iter().map(|(a, g)| format!("{a}={g}")).collect();
    format!(
        "algorithms disagree on trial {trial} input {input}: {}",
        got.join(", ")
    )
}

/// What one algorithm did on one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measurement {
    pub algorithm: Algorithm,
    pub counters: OpCounters,
    pub wall_ns: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRecord {
    pub input: NumberList,
    pub gcd: Natural,
    pub measurements: Vec<Measurement>,
}

impl TrialRecord {
    pub fn counters_for(&self, alg: Algorithm) -> Option<&OpCounters> {
        self.measurements
            .iter()
            .find(|m| m.algorithm == alg)
            .map(|m| &m.counters)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FieldStats {
    pub mean: f64,
    pub median: f64,
    pub max: u64,
}

impl FieldStats {
    fn of(values: &mut [u64]) -> FieldStats {
        values.sort_unstable();
        let n = values.len();
        let sum: u128 = values.iter().map(|&v| v as u128).sum();
        let median = if n % 2 == 1 {
            values[n / 2] as f64
        } else {
            (values[n / 2 - 1] as f64 + values[n / 2] as f64) / 2.0
        };
        FieldStats {
            mean: sum as f64 / n as f64,
            median,
            max: values[n - 1],
        }
    }
}

/// Aggregate over all trials for one algorithm.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmRow {
    pub algorithm: Algorithm,
    pub trials: usize,
    /// In `OpCounters::FIELD_NAMES` order.
    pub counters: [FieldStats; 6],
    pub mean_wall_ns: f64,
}

impl AlgorithmRow {
    pub fn field(&self, name: &str) -> Option<&FieldStats> {
        OpCounters::FIELD_NAMES
            .iter()
            .position(|&f| f == name)
            .map(|i| &self.counters[i])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub config: BenchConfig,
    pub rows: Vec<AlgorithmRow>,
    pub trials: Vec<TrialRecord>,
}

fn run_trial(
    trial: usize,
    input: &NumberList,
    algs: &[Algorithm],
) -> Result<TrialRecord, BenchError> {
    let mut measurements = Vec::with_capacity(algs.len());
    let mut results = Vec::with_capacity(algs.len());
    for &algorithm in algs {
        let start = Instant::now();
        let r = algorithm.run(input, false);
        let wall_ns = start.elapsed().as_nanos() as u64;
        measurements.push(Measurement {
            algorithm,
            counters: r.counters,
            wall_ns,
        });
        results.push((algorithm, r.gcd));
    }
    let gcd = results[0].1.clone();
    if results.iter().any(|(_, g)| *g != gcd) {
        return Err(BenchError::Mismatch {
            trial,
            input: input.clone(),
            results,
        });
    }
    Ok(TrialRecord {
        input: input.clone(),
        gcd,
        measurements,
    })
}

/// Runs every selected algorithm on every generated input.
///
/// All algorithms must agree on every trial; the first disagreement (in
/// trial order) aborts the campaign.
pub fn run_campaign(cfg: &BenchConfig) -> Result<BenchReport, BenchError> {
    let inputs = generate_inputs(cfg)?;
    let algs = &cfg.algorithms;
    let outcomes: Vec<Result<TrialRecord, BenchError>> = if cfg.parallel {
        inputs
            .par_iter()
            .enumerate()
            .map(|(i, xs)| run_trial(i, xs, algs))
            .collect()
    } else {
        inputs
            .iter()
            .enumerate()
            .map(|(i, xs)| run_trial(i, xs, algs))
            .collect()
    };
    let trials = outcomes.into_iter().collect::<Result<Vec<_>, _>>()?;

    let rows = algs
        .iter()
        .enumerate()
        .map(|(k, &algorithm)| {
            let per_trial: Vec<&Measurement> = trials.iter().map(|t| &t.measurements[k]).collect();
            let counters = std::array::from_fn(|f| {
                let mut vals: Vec<u64> = per_trial.iter().map(|m| m.counters.values()[f]).collect();
                FieldStats::of(&mut vals)
            });
            let wall: u128 = per_trial.iter().map(|m| m.wall_ns as u128).sum();
            AlgorithmRow {
                algorithm,
                trials: trials.len(),
                counters,
                mean_wall_ns: wall as f64 / trials.len() as f64,
            }
        })
        .collect();

    Ok(BenchReport {
        config: cfg.clone(),
        rows,
        trials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stats_of_odd_and_even_counts() {
        let s = FieldStats::of(&mut [5, 1, 3]);
        assert_eq!((s.mean, s.median, s.max), (3.0, 3.0, 5));
        let s = FieldStats::of(&mut [4, 1, 3, 2]);
        assert_eq!((s.mean, s.median, s.max), (2.5, 2.5, 4));
    }

    #[test]
    fn mismatch_message_lists_every_result() {
        let e = BenchError::Mismatch {
            trial: 3,
            input: NumberList::from_u64s(&[4, 6]),
            results: vec![
                (Algorithm::GcdN, Natural::from(2u32)),
                (Algorithm::FoldEuclid, Natural::one()),
            ],
        };
        assert_eq!(
            e.to_string(),
            "algorithms disagree on trial 3 input (4, 6): gcd-n=2, fold-euclid=1"
        );
    }
}

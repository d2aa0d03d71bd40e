use std::fmt;
use std::str::FromStr;

use gcdn_core::{Algorithm, Natural};
use thiserror::Error;

/// Shape of the generated input lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Distribution {
    /// Every element uniform in `[0, 2^bits)`.
    UniformRandom,
    /// `g * r` with `r` uniform in `[0, 2^bits)`, so `g` divides every element.
    CommonFactor { factor: Natural },
    /// One element below 2^16, the rest with exactly `bits` bits.
    OneSmallManyLarge,
    /// A single uniform value repeated `n` times.
    AllEqual,
    /// Fibonacci numbers drawn from the eight largest below 2^bits.
    /// Neighbouring Fibonacci numbers are the slowest inputs for Euclid's
    /// algorithm, so pairwise folds pay the most here.
    AdversarialChain,
}

impl Distribution {
    pub fn name(&self) -> &'static str {
        match self {
            Distribution::UniformRandom => "uniform-random",
            Distribution::CommonFactor { .. } => "common-factor",
            Distribution::OneSmallManyLarge => "one-small-many-large",
            Distribution::AllEqual => "all-equal",
            Distribution::AdversarialChain => "adversarial-chain",
        }
    }

    /// Parses a distribution name; `common-factor` takes `factor`.
    pub fn parse(name: &str, factor: Natural) -> Result<Self, ConfigError> {
        Ok(match name {
            "uniform-random" => Distribution::UniformRandom,
            "common-factor" => Distribution::CommonFactor { factor },
            "one-small-many-large" => Distribution::OneSmallManyLarge,
            "all-equal" => Distribution::AllEqual,
            "adversarial-chain" => Distribution::AdversarialChain,
            other => return Err(ConfigError::UnknownDistribution(other.to_string())),
        })
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distribution::CommonFactor { factor } => write!(f, "common-factor({factor})"),
            d => f.write_str(d.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("trials must be at least 1")]
    ZeroTrials,
    #[error("list length n must be at least 1")]
    ZeroLength,
    #[error("bits must be at least 1")]
    ZeroBits,
    #[error("at least one algorithm must be selected")]
    NoAlgorithms,
    #[error("common factor must be at least 1")]
    ZeroFactor,
    #[error("unknown distribution `{0}`")]
    UnknownDistribution(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BenchConfig {
    pub seed: u64,
    pub n: usize,
    pub bits: u64,
    pub distribution: Distribution,
    pub trials: usize,
    pub algorithms: Vec<Algorithm>,
    /// Run trials on the rayon pool. Counters are unaffected; wall times get noisier.
    pub parallel: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            seed: 0,
            n: 8,
            bits: 64,
            distribution: Distribution::UniformRandom,
            trials: 100,
            algorithms: Algorithm::ALL.to_vec(),
            parallel: false,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.trials == 0 {
            return Err(ConfigError::ZeroTrials);
        }
        if self.n == 0 {
            return Err(ConfigError::ZeroLength);
        }
        if self.bits == 0 {
            return Err(ConfigError::ZeroBits);
        }
        if self.algorithms.is_empty() {
            return Err(ConfigError::NoAlgorithms);
        }
        if let Distribution::CommonFactor { factor } = &self.distribution {
            if factor.is_zero() {
                return Err(ConfigError::ZeroFactor);
            }
        }
        Ok(())
    }
}

impl FromStr for Distribution {
    type Err = ConfigError;

    /// Accepts the plain names, plus `common-factor:<g>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once(':') {
            Some(("common-factor", g)) => g
                .parse::<Natural>()
                .map(|factor| Distribution::CommonFactor { factor })
                .map_err(|_| ConfigError::UnknownDistribution(s.to_string())),
            Some(_) => Err(ConfigError::UnknownDistribution(s.to_string())),
            None => Distribution::parse(s, Natural::from(21u32)),
        }
    }
}

//! GCD of n non-negative integers.
//!
//! Two n-way algorithms reduce the whole list at once instead of folding a
//! two-argument GCD across it:
//!
//! * [`gcd_n`] repeatedly reduces every element modulo the least non-zero one.
//! * [`binary_gcd_n`] strips common factors of two, then alternates halving
//!   even elements with subtracting the least non-zero one.
//!
//! Both report [`OpCounters`] and can record a [`Trace`] of every state they
//! pass through. [`fold_gcd`] with [`euclid_pair`] or [`binary_pair`] is the
//! pairwise baseline, and [`oracle`] holds independent reference GCDs.

mod binary_n;
mod counters;
mod euclid_n;
mod list;
mod natural;
pub mod oracle;
mod pair;
mod steps;
mod trace;

use std::fmt;
use std::str::FromStr;

pub use binary_n::{binary_gcd_n, binary_gcd_n_traced};
pub use counters::OpCounters;
pub use euclid_n::{gcd_n, gcd_n_traced};
pub use list::{EmptyListError, NumberList};
pub use natural::{Natural, ParseNaturalError};
pub use pair::{binary_pair, euclid_pair, fold_gcd, gcd_pair, PairGcd};
pub use steps::{
    halve_all_step, halve_one_step, least_nonzero_pivot, mod_reduce_step, subtract_step, StepError,
};
pub use trace::{StepKind, Trace, TraceEvent};

/// Outcome of one algorithm run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdResult {
    pub gcd: Natural,
    pub counters: OpCounters,
    pub trace: Option<Trace>,
}

/// The four interchangeable ways of computing an n-way GCD.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    GcdN,
    BinaryGcdN,
    FoldEuclid,
    FoldBinary,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::GcdN,
        Algorithm::BinaryGcdN,
        Algorithm::FoldEuclid,
        Algorithm::FoldBinary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::GcdN => "gcd-n",
            Algorithm::BinaryGcdN => "binary-gcd-n",
            Algorithm::FoldEuclid => "fold-euclid",
            Algorithm::FoldBinary => "fold-binary",
        }
    }

    pub fn run(self, xs: &NumberList, trace: bool) -> GcdResult {
        match (self, trace) {
            (Algorithm::GcdN, false) => gcd_n(xs),
            (Algorithm::GcdN, true) => gcd_n_traced(xs),
            (Algorithm::BinaryGcdN, false) => binary_gcd_n(xs),
            (Algorithm::BinaryGcdN, true) => binary_gcd_n_traced(xs),
            (Algorithm::FoldEuclid, t) => fold_gcd(xs, euclid_pair, t),
            (Algorithm::FoldBinary, t) => fold_gcd(xs, binary_pair, t),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown algorithm `{0}` (expected gcd-n, binary-gcd-n, fold-euclid or fold-binary)")]
pub struct UnknownAlgorithm(pub String);

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| UnknownAlgorithm(s.to_string()))
    }
}

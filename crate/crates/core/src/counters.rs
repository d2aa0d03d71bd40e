use std::ops::AddAssign;

use serde::Serialize;

/// Tallies of the primitive operations performed during one run.
///
/// * `mods`: one per residue computed.
/// * `subtractions`: one per elementwise subtraction.
/// * `halvings`: one per single halving of one element.
/// * `comparisons`: magnitude comparisons made while scanning for a pivot
///   (or choosing operand order in the pairwise binary GCD).
/// * `swaps`: pivot moves into the leading slot; only tallied when a run
///   keeps the pivot-first presentation (traced runs, pairwise binary GCD).
/// * `outer_iterations`: reduction rounds, or pair invocations for a fold.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct OpCounters {
    pub mods: u64,
    pub subtractions: u64,
    pub halvings: u64,
    pub comparisons: u64,
    pub swaps: u64,
    pub outer_iterations: u64,
}

impl OpCounters {
    pub const FIELD_NAMES: [&'static str; 6] = [
        "mods",
        "subtractions",
        "halvings",
        "comparisons",
        "swaps",
        "outer_iterations",
    ];

    /// Field values in [`OpCounters::FIELD_NAMES`] order.
    pub fn values(&self) -> [u64; 6] {
        [
            self.mods,
            self.subtractions,
            self.halvings,
            self.comparisons,
            self.swaps,
            self.outer_iterations,
        ]
    }
}

impl AddAssign for OpCounters {
    fn add_assign(&mut self, rhs: OpCounters) {
        self.mods += rhs.mods;
        self.subtractions += rhs.subtractions;
        self.halvings += rhs.halvings;
        self.comparisons += rhs.comparisons;
        self.swaps += rhs.swaps;
        self.outer_iterations += rhs.outer_iterations;
    }
}

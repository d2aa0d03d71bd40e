//! The n-way Euclidean reduction.
//!
//! Each round picks the least non-zero element as pivot and replaces every
//! other element by its residue modulo the pivot. The run ends as soon as at
//! most one element is non-zero: that element (or 0) is the GCD.
//!
//! The textbook formulation physically swaps the pivot into the first slot
//! and then bubbles the largest two values into the last two slots so the
//! stopping test can read "last is non-zero and second-to-last is zero".
//! Counting non-zero elements directly is equivalent and is what we do.

use crate::counters::OpCounters;
use crate::list::NumberList;
use crate::natural::Natural;
use crate::steps::{least_nonzero_pivot_counted, mod_reduce_in_place};
use crate::trace::{Recorder, StepKind};
use crate::GcdResult;

/// GCD of all elements by repeated mod-reduction against the least non-zero element.
pub fn gcd_n(xs: &NumberList) -> GcdResult {
    run(xs, false)
}

/// [`gcd_n`] with a full step trace.
pub fn gcd_n_traced(xs: &NumberList) -> GcdResult {
    run(xs, true)
}

fn run(xs: &NumberList, trace: bool) -> GcdResult {
    let mut values = xs.as_slice().to_vec();
    let mut counters = OpCounters::default();
    let mut rec = Recorder::new(trace, values.len());

    let gcd = loop {
        let mut nonzero = values.iter().filter(|x| !x.is_zero());
        match (nonzero.next(), nonzero.next()) {
            (None, _) => break Natural::zero(),
            (Some(only), None) => break only.clone(),
            _ => {}
        }
        let pivot = least_nonzero_pivot_counted(&values, &mut counters)
            .expect("at least two non-zero elements");
        rec.select_pivot(pivot, &mut counters);
        rec.record(StepKind::PivotSelect, &values, 0);

        mod_reduce_in_place(&mut values, pivot, &mut counters);
        counters.outer_iterations += 1;
        rec.record(StepKind::ModReduce, &values, 0);
    };

    GcdResult {
        trace: rec.finish(&values, 0, &gcd),
        gcd,
        counters,
    }
}

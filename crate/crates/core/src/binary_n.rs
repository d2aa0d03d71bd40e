//! The n-way binary reduction.
//!
//! First, factors of two common to every element are stripped and counted
//! in `p`. Then each round halves every even non-zero element until it is
//! odd, picks the least non-zero element as pivot, and subtracts it from
//! every other non-zero element. Once a single non-zero element `a` is left
//! the result is `a * 2^p`.
//!
//! Zeros never become the pivot and are never halved or subtracted from;
//! an all-zero list returns 0 straight away.

use crate::counters::OpCounters;
use crate::list::NumberList;
use crate::natural::Natural;
use crate::steps::{halve_all_in_place, least_nonzero_pivot_counted, subtract_in_place};
use crate::trace::{Recorder, StepKind};
use crate::GcdResult;

/// GCD of all elements using only halving, subtraction, parity tests and comparisons.
pub fn binary_gcd_n(xs: &NumberList) -> GcdResult {
    run(xs, false)
}

/// [`binary_gcd_n`] with a full step trace.
pub fn binary_gcd_n_traced(xs: &NumberList) -> GcdResult {
    run(xs, true)
}

fn run(xs: &NumberList, trace: bool) -> GcdResult {
    let mut values = xs.as_slice().to_vec();
    let mut counters = OpCounters::default();
    let mut rec = Recorder::new(trace, values.len());

    if values.iter().all(Natural::is_zero) {
        let zero = Natural::zero();
        return GcdResult {
            trace: rec.finish(&values, 0, &zero),
            gcd: zero,
            counters,
        };
    }

    let mut p = 0u64;
    while values.iter().all(Natural::is_even) {
        halve_all_in_place(&mut values, &mut counters);
        p += 1;
        rec.record(StepKind::HalveAll, &values, p);
    }

    loop {
        if values.iter().filter(|x| !x.is_zero()).nth(1).is_none() {
            break;
        }
        for i in 0..values.len() {
            while !values[i].is_zero() && values[i].is_even() {
                values[i].halve_in_place();
                counters.halvings += 1;
                rec.record(StepKind::HalveOne, &values, p);
            }
        }
        let pivot = least_nonzero_pivot_counted(&values, &mut counters)
            .expect("at least two non-zero elements");
        rec.select_pivot(pivot, &mut counters);
        rec.record(StepKind::PivotSelect, &values, p);

        subtract_in_place(&mut values, pivot, &mut counters);
        counters.outer_iterations += 1;
        rec.record(StepKind::Subtract, &values, p);
    }

    let core = values
        .iter()
        .find(|x| !x.is_zero())
        .expect("a non-zero element survives")
        .clone();
    let gcd = core << p;
    GcdResult {
        trace: rec.finish(&values, p, &gcd),
        gcd,
        counters,
    }
}

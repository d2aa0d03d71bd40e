//! Two-argument GCDs and the pairwise fold baseline.

use crate::counters::OpCounters;
use crate::list::NumberList;
use crate::natural::Natural;
use crate::trace::Recorder;
use crate::GcdResult;

/// Signature shared by the instrumented pairwise GCDs.
pub type PairGcd = fn(&Natural, &Natural, &mut OpCounters) -> Natural;

/// Euclid's algorithm: `gcd(a, b) = gcd(b, a mod b)`, `gcd(a, 0) = a`.
pub fn gcd_pair(a: &Natural, b: &Natural) -> Natural {
    euclid_pair(a, b, &mut OpCounters::default())
}

/// [`gcd_pair`] with one `mods` tick per remainder.
pub fn euclid_pair(a: &Natural, b: &Natural, c: &mut OpCounters) -> Natural {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = a.checked_rem(&b).expect("divisor is non-zero");
        c.mods += 1;
        a = b;
        b = r;
    }
    a
}

/// Stein's binary GCD: halving, subtraction and comparisons only.
pub fn binary_pair(a: &Natural, b: &Natural, c: &mut OpCounters) -> Natural {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let mut a = a.clone();
    let mut b = b.clone();
    let mut shift = 0u64;
    while a.is_even() && b.is_even() {
        a.halve_in_place();
        b.halve_in_place();
        c.halvings += 2;
        shift += 1;
    }
    while a.is_even() {
        a.halve_in_place();
        c.halvings += 1;
    }
    // a is odd from here on.
    loop {
        while b.is_even() {
            b.halve_in_place();
            c.halvings += 1;
        }
        c.comparisons += 1;
        if a > b {
            std::mem::swap(&mut a, &mut b);
            c.swaps += 1;
        }
        b.sub_in_place(&a);
        c.subtractions += 1;
        if b.is_zero() {
            break;
        }
    }
    a << shift
}

/// Left-to-right fold of `pair` over the list.
///
/// With `trace` set, the trace holds only the terminating event: a fold has
/// no list-wide reduction states to show.
pub fn fold_gcd(xs: &NumberList, pair: PairGcd, trace: bool) -> GcdResult {
    let mut counters = OpCounters::default();
    let items = xs.as_slice();
    let mut acc = items[0].clone();
    for x in &items[1..] {
        acc = pair(&acc, x, &mut counters);
        counters.outer_iterations += 1;
    }
    let trace = Recorder::new(trace, items.len()).finish(items, 0, &acc);
    GcdResult {
        gcd: acc,
        counters,
        trace,
    }
}

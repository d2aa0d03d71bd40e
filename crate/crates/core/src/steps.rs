//! The individual GCD-preserving reductions the n-way algorithms are built from.
//!
//! Each public step is a pure function over a [`NumberList`]. The algorithms
//! drive the in-place `*_in_place` variants so they can tally operations
//! without cloning the list on every round.

use thiserror::Error;

use crate::counters::OpCounters;
use crate::list::NumberList;
use crate::natural::Natural;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StepError {
    #[error("pivot index {index} is out of range for a list of length {len}")]
    PivotOutOfRange { index: usize, len: usize },
    #[error("pivot value is zero")]
    ZeroPivot,
    #[error("element {index} is odd")]
    OddElement { index: usize },
    #[error("cannot halve zero")]
    HalveZero,
    #[error("cannot halve an odd value")]
    HalveOdd,
    #[error("element {index} is smaller than the pivot")]
    BelowPivot { index: usize },
}

/// Index of the smallest non-zero element, lowest index on ties.
///
/// `None` iff every element is zero.
pub fn least_nonzero_pivot(xs: &NumberList) -> Option<usize> {
    least_nonzero_pivot_counted(xs.as_slice(), &mut OpCounters::default())
}

pub(crate) fn least_nonzero_pivot_counted(xs: &[Natural], c: &mut OpCounters) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, x) in xs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        match best {
            None => best = Some(i),
            Some(b) => {
                c.comparisons += 1;
                if *x < xs[b] {
                    best = Some(i);
                }
            }
        }
    }
    best
}

fn check_pivot(xs: &[Natural], pivot: usize) -> Result<(), StepError> {
    match xs.get(pivot) {
        None => Err(StepError::PivotOutOfRange {
            index: pivot,
            len: xs.len(),
        }),
        Some(p) if p.is_zero() => Err(StepError::ZeroPivot),
        Some(_) => Ok(()),
    }
}

/// Replaces every non-pivot element by its residue modulo the pivot.
pub fn mod_reduce_step(xs: &NumberList, pivot: usize) -> Result<NumberList, StepError> {
    check_pivot(xs.as_slice(), pivot)?;
    let mut out = xs.clone();
    mod_reduce_in_place(out.as_mut_slice(), pivot, &mut OpCounters::default());
    Ok(out)
}

pub(crate) fn mod_reduce_in_place(xs: &mut [Natural], pivot: usize, c: &mut OpCounters) {
    let p = xs[pivot].clone();
    for (i, x) in xs.iter_mut().enumerate() {
        // 0 mod p is 0; no residue needs computing.
        if i == pivot || x.is_zero() {
            continue;
        }
        *x = x.checked_rem(&p).expect("pivot is non-zero");
        c.mods += 1;
    }
}

/// Halves every element of an all-even list. The second value is the
/// increment to the extracted power of two, always 1.
pub fn halve_all_step(xs: &NumberList) -> Result<(NumberList, u64), StepError> {
    if let Some(index) = xs.iter().position(Natural::is_odd) {
        return Err(StepError::OddElement { index });
    }
    let mut out = xs.clone();
    halve_all_in_place(out.as_mut_slice(), &mut OpCounters::default());
    Ok((out, 1))
}

pub(crate) fn halve_all_in_place(xs: &mut [Natural], c: &mut OpCounters) {
    for x in xs.iter_mut() {
        x.halve_in_place();
        c.halvings += 1;
    }
}

/// Halves one even, non-zero value.
pub fn halve_one_step(x: &Natural) -> Result<Natural, StepError> {
    if x.is_zero() {
        Err(StepError::HalveZero)
    } else if x.is_odd() {
        Err(StepError::HalveOdd)
    } else {
        Ok(x.halve())
    }
}

/// Subtracts the pivot from every other non-zero element. Zeros stay zero.
pub fn subtract_step(xs: &NumberList, pivot: usize) -> Result<NumberList, StepError> {
    let s = xs.as_slice();
    check_pivot(s, pivot)?;
    let p = &s[pivot];
    if let Some(index) = s.iter().position(|x| !x.is_zero() && x < p) {
        return Err(StepError::BelowPivot { index });
    }
    let mut out = xs.clone();
    subtract_in_place(out.as_mut_slice(), pivot, &mut OpCounters::default());
    Ok(out)
}

pub(crate) fn subtract_in_place(xs: &mut [Natural], pivot: usize, c: &mut OpCounters) {
    let p = xs[pivot].clone();
    for (i, x) in xs.iter_mut().enumerate() {
        if i == pivot || x.is_zero() {
            continue;
        }
        x.sub_in_place(&p);
        c.subtractions += 1;
    }
}

//! Step-by-step records of an algorithm run.
//!
//! Algorithms work on values at fixed indices and pick a pivot by index.
//! Snapshots are rendered pivot-first instead: whenever a new pivot is
//! chosen it is swapped into the leading position of a presentation order,
//! which is how the reduction chains are usually written out by hand, e.g.
//! `(22, 14, 8, 10)` followed by `(8, 14, 22, 10)`.

use std::fmt;
use std::str::FromStr;

use crate::counters::OpCounters;
use crate::natural::Natural;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    PivotSelect,
    ModReduce,
    HalveAll,
    HalveOne,
    Subtract,
    Terminate,
}

impl StepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StepKind::PivotSelect => "pivot-select",
            StepKind::ModReduce => "mod-reduce",
            StepKind::HalveAll => "halve-all",
            StepKind::HalveOne => "halve-one",
            StepKind::Subtract => "subtract",
            StepKind::Terminate => "terminate",
        }
    }
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StepKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "pivot-select" => StepKind::PivotSelect,
            "mod-reduce" => StepKind::ModReduce,
            "halve-all" => StepKind::HalveAll,
            "halve-one" => StepKind::HalveOne,
            "subtract" => StepKind::Subtract,
            "terminate" => StepKind::Terminate,
            other => return Err(format!("unknown step kind `{other}`")),
        })
    }
}

/// State after one reduction step.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TraceEvent {
    pub kind: StepKind,
    /// Values in pivot-first presentation order.
    pub state: Vec<Natural>,
    /// Input index of the current pivot, once one has been chosen.
    pub pivot: Option<usize>,
    /// Common factors of two extracted so far (binary algorithm only).
    pub power_of_two: u64,
    /// Set on the final `Terminate` event.
    pub result: Option<Natural>,
}

impl TraceEvent {
    pub fn sorted_state(&self) -> Vec<Natural> {
        let mut v = self.state.clone();
        v.sort();
        v
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Trace {
    pub events: Vec<TraceEvent>,
}

impl Trace {
    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TraceEvent> {
        self.events.iter()
    }

    pub fn of_kind(&self, kind: StepKind) -> impl Iterator<Item = &TraceEvent> {
        self.events.iter().filter(move |e| e.kind == kind)
    }

    pub fn last(&self) -> Option<&TraceEvent> {
        self.events.last()
    }
}

impl<'a> IntoIterator for &'a Trace {
    type Item = &'a TraceEvent;
    type IntoIter = std::slice::Iter<'a, TraceEvent>;
    fn into_iter(self) -> Self::IntoIter {
        self.events.iter()
    }
}

/// Collects events while an algorithm runs. A disabled recorder is free.
pub(crate) struct Recorder {
    inner: Option<Presentation>,
}

struct Presentation {
    order: Vec<usize>,
    pivot: Option<usize>,
    events: Vec<TraceEvent>,
}

impl Recorder {
    pub(crate) fn new(enabled: bool, len: usize) -> Self {
        Recorder {
            inner: enabled.then(|| Presentation {
                order: (0..len).collect(),
                pivot: None,
                events: Vec::new(),
            }),
        }
    }

    /// Moves `pivot` to the front of the presentation order.
    pub(crate) fn select_pivot(&mut self, pivot: usize, counters: &mut OpCounters) {
        if let Some(p) = self.inner.as_mut() {
            let pos = p
                .order
                .iter()
                .position(|&i| i == pivot)
                .expect("pivot index is in the presentation order");
            if pos != 0 {
                p.order.swap(0, pos);
                counters.swaps += 1;
            }
            p.pivot = Some(pivot);
        }
    }

    pub(crate) fn record(&mut self, kind: StepKind, values: &[Natural], power_of_two: u64) {
        if let Some(p) = self.inner.as_mut() {
            p.events.push(TraceEvent {
                kind,
                state: p.order.iter().map(|&i| values[i].clone()).collect(),
                pivot: p.pivot,
                power_of_two,
                result: None,
            });
        }
    }

    pub(crate) fn finish(
        self,
        values: &[Natural],
        power_of_two: u64,
        result: &Natural,
    ) -> Option<Trace> {
        self.inner.map(|mut p| {
            p.events.push(TraceEvent {
                kind: StepKind::Terminate,
                state: p.order.iter().map(|&i| values[i].clone()).collect(),
                pivot: p.pivot,
                power_of_two,
                result: Some(result.clone()),
            });
            Trace { events: p.events }
        })
    }
}

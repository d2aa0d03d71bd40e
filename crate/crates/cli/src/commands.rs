use std::io::Write;

use gcdn_bench::report::{to_json_lines, to_table};
use gcdn_bench::{run_campaign, BenchConfig, BenchError};
use gcdn_core::oracle::{self, OracleError, FACTOR_BOUND};
use gcdn_core::{Algorithm, Natural, NumberList, TraceEvent};
use serde::Serialize;

use crate::input::{InputError, InputSpec};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_EMPTY: u8 = 3;
pub const EXIT_MISMATCH: u8 = 4;

/// A failure carrying the process exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(format!("write failed: {e}"))
    }
}

fn read_list(input: &InputSpec) -> Result<NumberList, Failure> {
    let values = input.read()?;
    NumberList::new(values).map_err(|_| Failure {
        code: EXIT_EMPTY,
        message: "no numbers in input".into(),
    })
}

/// One trace event as a JSON-lines record.
#[derive(Serialize)]
pub struct TraceRecord {
    pub step: usize,
    pub kind: &'static str,
    pub state: Vec<String>,
    pub pivot: Option<usize>,
    pub p: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<String>,
}

impl TraceRecord {
    pub fn new(step: usize, e: &TraceEvent) -> Self {
        TraceRecord {
            step,
            kind: e.kind.as_str(),
            state: e.state.iter().map(Natural::to_string).collect(),
            pivot: e.pivot,
            p: e.power_of_two,
            result: e.result.as_ref().map(Natural::to_string),
        }
    }
}

pub fn compute(
    out: &mut impl Write,
    alg: Algorithm,
    input: &InputSpec,
    trace: bool,
) -> Result<(), Failure> {
    let xs = read_list(input)?;
    let result = alg.run(&xs, trace);
    if let Some(t) = &result.trace {
        for (i, e) in t.iter().enumerate() {
            let line =
                serde_json::to_string(&TraceRecord::new(i, e)).expect("trace record serializes");
            writeln!(out, "{line}")?;
        }
    }
    writeln!(out, "{}", result.gcd)?;
    Ok(())
}

pub fn verify(out: &mut impl Write, input: &InputSpec) -> Result<(), Failure> {
    let xs = read_list(input)?;
    if let Some(big) = xs
        .iter()
        .find(|x| x.to_u128().is_none_or(|v| v > FACTOR_BOUND))
    {
        return Err(Failure::usage(format!(
            "verify only accepts values up to 2^64 = {FACTOR_BOUND} (factorization oracle bound); got {big}"
        )));
    }

    let mut rows: Vec<(String, Option<Natural>, &str)> = Algorithm::ALL
        .iter()
        .map(|a| (a.name().to_string(), Some(a.run(&xs, false).gcd), ""))
        .collect();
    let fac = oracle::oracle_gcd_factorization(&xs).map_err(|e| Failure::usage(e.to_string()))?;
    rows.push(("oracle-factorization".into(), Some(fac), ""));
    match oracle::oracle_gcd_bruteforce(&xs) {
        Ok(g) => rows.push(("oracle-bruteforce".into(), Some(g), "")),
        Err(OracleError::AboveScanBound { .. }) => rows.push((
            "oracle-bruteforce".into(),
            None,
            "skipped: smallest non-zero value above 1000000",
        )),
        Err(e) => return Err(Failure::usage(e.to_string())),
    }

    let reference = rows[0].1.clone();
    let agree = rows.iter().all(|(_, g, _)| g.is_none() || *g == reference);
    for (name, g, note) in &rows {
        match g {
            Some(g) => writeln!(out, "{name:<22} {g}")?,
            None => writeln!(out, "{name:<22} - ({note})")?,
        }
    }
    if agree {
        writeln!(out, "all methods agree")?;
        Ok(())
    } else {
        writeln!(out, "MISMATCH")?;
        Err(Failure {
            code: EXIT_MISMATCH,
            message: format!("methods disagree on {xs}"),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    JsonLines,
}

pub fn bench(out: &mut impl Write, cfg: &BenchConfig, format: Format) -> Result<(), Failure> {
    let report = run_campaign(cfg).map_err(|e| match e {
        BenchError::Config(c) => Failure::usage(c.to_string()),
        m @ BenchError::Mismatch { .. } => Failure {
            code: EXIT_MISMATCH,
            message: m.to_string(),
        },
    })?;
    match format {
        Format::Table => write!(out, "{}", to_table(&report))?,
        Format::JsonLines => write!(out, "{}", to_json_lines(&report))?,
    }
    Ok(())
}

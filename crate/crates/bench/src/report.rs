//! Rendering a [`BenchReport`] as a text table or as JSON lines.
//!
//! JSON-lines output has one `config` record, then one `counters` record per
//! algorithm, then one `timing` record per algorithm. Everything except the
//! `timing` records depends only on the configuration.

use gcdn_core::OpCounters;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::campaign::BenchReport;
use crate::config::Distribution;

#[derive(Serialize)]
struct ConfigRecord<'a> {
    kind: &'static str,
    seed: u64,
    n: usize,
    bits: u64,
    distribution: &'a str,
    factor: Option<String>,
    trials: usize,
    algorithms: Vec<&'static str>,
}

pub fn to_json_lines(report: &BenchReport) -> String {
    let cfg = &report.config;
    let dist = cfg.distribution.name();
    let mut lines = Vec::new();
    let header = ConfigRecord {
        kind: "config",
        seed: cfg.seed,
        n: cfg.n,
        bits: cfg.bits,
        distribution: dist,
        factor: match &cfg.distribution {
            Distribution::CommonFactor { factor } => Some(factor.to_string()),
            _ => None,
        },
        trials: cfg.trials,
        algorithms: cfg.algorithms.iter().map(|a| a.name()).collect(),
    };
    lines.push(serde_json::to_string(&header).expect("config serializes"));

    for row in &report.rows {
        let mut rec = Map::new();
        rec.insert("kind".into(), json!("counters"));
        rec.insert("algorithm".into(), json!(row.algorithm.name()));
        rec.insert("distribution".into(), json!(dist));
        rec.insert("trials".into(), json!(row.trials));
        for (name, stats) in OpCounters::FIELD_NAMES.iter().zip(&row.counters) {
            rec.insert(
                (*name).into(),
                serde_json::to_value(stats).expect("stats serialize"),
            );
        }
        lines.push(Value::Object(rec).to_string());
    }
    for row in &report.rows {
        lines.push(
            json!({
                "kind": "timing",
                "algorithm": row.algorithm.name(),
                "mean_wall_ns": row.mean_wall_ns,
            })
            .to_string(),
        );
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

/// The configuration-determined part of [`to_json_lines`] output.
pub fn counter_section(json_lines: &str) -> String {
    json_lines
        .lines()
        .filter(|l| !l.contains("\"kind\":\"timing\""))
        .map(|l| format!("{l}\n"))
        .collect()
}

pub fn to_table(report: &BenchReport) -> String {
    let cfg = &report.config;
    let mut out = format!(
        "distribution={} seed={} n={} bits={} trials={}\n",
        cfg.distribution, cfg.seed, cfg.n, cfg.bits, cfg.trials
    );
    out.push_str(&format!("{:<14} {:<18}", "algorithm", "counter"));
    out.push_str(&format!("{:>14} {:>14} {:>12}\n", "mean", "median", "max"));
    for row in &report.rows {
        for (name, s) in OpCounters::FIELD_NAMES.iter().zip(&row.counters) {
            out.push_str(&format!(
                "{:<14} {:<18}{:>14.2} {:>14.1} {:>12}\n",
                row.algorithm.name(),
                name,
                s.mean,
                s.median,
                s.max
            ));
        }
        out.push_str(&format!(
            "{:<14} {:<18}{:>14.0}\n",
            row.algorithm.name(),
            "wall_ns",
            row.mean_wall_ns
        ));
    }
    out
}

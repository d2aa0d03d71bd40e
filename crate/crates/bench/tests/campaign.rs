use gcdn_bench::report::{counter_section, to_json_lines, to_table};
use gcdn_bench::{run_campaign, BenchConfig, BenchError, ConfigError, Distribution};
use gcdn_core::{Algorithm, Natural};

fn cfg(distribution: Distribution) -> BenchConfig {
    BenchConfig {
        seed: 11,
        n: 8,
        bits: 96,
        trials: 40,
        distribution,
        ..Default::default()
    }
}

#[test]
fn every_distribution_agrees_across_algorithms() {
    for d in [
        Distribution::UniformRandom,
        Distribution::CommonFactor {
            factor: Natural::from(21u32),
        },
        Distribution::OneSmallManyLarge,
        Distribution::AllEqual,
        Distribution::AdversarialChain,
    ] {
        let report = run_campaign(&cfg(d.clone())).unwrap();
        assert_eq!(report.rows.len(), 4, "{d}");
        assert_eq!(report.trials.len(), 40);
        for t in &report.trials {
            for alg in Algorithm::ALL {
                assert_eq!(alg.run(&t.input, false).gcd, t.gcd);
            }
        }
    }
}

#[test]
fn planted_factor_is_a_divisor_of_every_reported_gcd() {
    let report = run_campaign(&cfg(Distribution::CommonFactor {
        factor: Natural::from(21u32),
    }))
    .unwrap();
    assert!(report.trials.iter().all(|t| t.gcd.rem_u64(21) == 0));
}

#[test]
fn counter_sections_are_reproducible() {
    let c = BenchConfig {
        seed: 7,
        n: 16,
        bits: 128,
        trials: 50,
        ..cfg(Distribution::OneSmallManyLarge)
    };
    let a = to_json_lines(&run_campaign(&c).unwrap());
    let b = to_json_lines(&run_campaign(&c).unwrap());
    assert_eq!(counter_section(&a), counter_section(&b));
    assert_eq!(counter_section(&a).lines().count(), 5);
}

#[test]
fn parallel_runs_match_sequential_counters() {
    let seq = cfg(Distribution::UniformRandom);
    let par = BenchConfig {
        parallel: true,
        ..seq.clone()
    };
    let a = run_campaign(&seq).unwrap();
    let b = run_campaign(&par).unwrap();
    assert_eq!(
        counter_section(&to_json_lines(&a)),
        counter_section(&to_json_lines(&b))
    );
    for (x, y) in a.trials.iter().zip(&b.trials) {
        let cx: Vec<_> = x.measurements.iter().map(|m| m.counters).collect();
        let cy: Vec<_> = y.measurements.iter().map(|m| m.counters).collect();
        assert_eq!(cx, cy);
    }
}

#[test]
fn algorithm_subset_is_respected() {
    let c = BenchConfig {
        algorithms: vec![Algorithm::BinaryGcdN, Algorithm::FoldBinary],
        ..cfg(Distribution::AllEqual)
    };
    let r = run_campaign(&c).unwrap();
    let names: Vec<_> = r.rows.iter().map(|row| row.algorithm).collect();
    assert_eq!(names, [Algorithm::BinaryGcdN, Algorithm::FoldBinary]);
    // Binary reductions never compute a residue.
    assert!(r.rows.iter().all(|row| row.field("mods").unwrap().max == 0));
}

#[test]
fn zero_trials_is_a_config_error() {
    let c = BenchConfig {
        trials: 0,
        ..cfg(Distribution::UniformRandom)
    };
    assert_eq!(
        run_campaign(&c),
        Err(BenchError::Config(ConfigError::ZeroTrials))
    );
}

#[test]
fn one_small_many_large_mod_counts() {
    let c = BenchConfig {
        n: 32,
        bits: 256,
        trials: 30,
        ..cfg(Distribution::OneSmallManyLarge)
    };
    let r = run_campaign(&c).unwrap();
    let fewer = r
        .trials
        .iter()
        .filter(|t| {
            t.counters_for(Algorithm::GcdN).unwrap().mods
                <= t.counters_for(Algorithm::FoldEuclid).unwrap().mods
        })
        .count();
    // Observation only; no ordering between algorithms is asserted.
    println!(
        "gcd-n used no more mods than fold-euclid on {fewer}/{} trials",
        r.trials.len()
    );
    print!("{}", to_table(&r));
}

#[test]
fn json_lines_shape() {
    let r = run_campaign(&BenchConfig {
        trials: 3,
        ..cfg(Distribution::AllEqual)
    })
    .unwrap();
    let out = to_json_lines(&r);
    let records: Vec<serde_json::Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 1 + 4 + 4);
    assert_eq!(records[0]["kind"], "config");
    assert_eq!(records[0]["distribution"], "all-equal");
    assert_eq!(records[1]["kind"], "counters");
    assert_eq!(records[1]["algorithm"], "gcd-n");
    assert!(records[1]["mods"]["median"].is_number());
    assert_eq!(records[8]["kind"], "timing");
}

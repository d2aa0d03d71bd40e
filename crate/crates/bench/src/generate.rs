//! Deterministic input generation.
//!
//! All randomness comes from ChaCha8 seeded through `SeedableRng::seed_from_u64`.
//! Only raw `next_u64`/`fill_bytes` output is consumed, never a
//! distribution sampler, so the generated lists are identical on every
//! platform and across `rand` releases.

use gcdn_core::{Natural, NumberList};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::config::{BenchConfig, ConfigError, Distribution};

/// Generates `cfg.trials` lists of length `cfg.n`.
pub fn generate_inputs(cfg: &BenchConfig) -> Result<Vec<NumberList>, ConfigError> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let fibs = match cfg.distribution {
        Distribution::AdversarialChain => fibonacci_below_pow2(cfg.bits),
        _ => Vec::new(),
    };
    let lists = (0..cfg.trials)
        .map(|_| {
            let items = match &cfg.distribution {
                Distribution::UniformRandom => (0..cfg.n)
                    .map(|_| random_bits(&mut rng, cfg.bits, false))
                    .collect(),
                Distribution::CommonFactor { factor } => (0..cfg.n)
                    .map(|_| factor * &random_bits(&mut rng, cfg.bits, false))
                    .collect(),
                Distribution::OneSmallManyLarge => {
                    let small_at = (rng.next_u64() % cfg.n as u64) as usize;
                    (0..cfg.n)
                        .map(|i| {
                            if i == small_at {
                                Natural::from(rng.next_u64() & 0xffff)
                            } else {
                                random_bits(&mut rng, cfg.bits, true)
                            }
                        })
                        .collect()
                }
                Distribution::AllEqual => vec![random_bits(&mut rng, cfg.bits, false); cfg.n],
                Distribution::AdversarialChain => {
                    let window = fibs.len().min(8) as u64;
                    (0..cfg.n)
                        .map(|_| {
                            let back = (rng.next_u64() % window) as usize;
                            fibs[fibs.len() - 1 - back].clone()
                        })
                        .collect()
                }
            };
            NumberList::new(items).expect("n >= 1")
        })
        .collect();
    Ok(lists)
}

/// Uniform value below `2^bits`; with `top` set, exactly `bits` bits long.
fn random_bits(rng: &mut ChaCha8Rng, bits: u64, top: bool) -> Natural {
    let nbytes = bits.div_ceil(8) as usize;
    let mut buf = vec![0u8; nbytes];
    rng.fill_bytes(&mut buf);
    let spare = (nbytes as u64 * 8 - bits) as u32;
    let last = nbytes - 1;
    buf[last] &= 0xffu8 >> spare;
    if top {
        buf[last] |= 0x80u8 >> spare;
    }
    Natural::from_bytes_le(&buf)
}

/// Fibonacci numbers 1, 2, 3, 5, ... strictly below `2^bits`.
fn fibonacci_below_pow2(bits: u64) -> Vec<Natural> {
    let limit = Natural::pow2(bits);
    let mut out = vec![Natural::one()];
    let (mut a, mut b) = (Natural::one(), Natural::from(2u32));
    while b < limit {
        out.push(b.clone());
        let next = &a + &b;
        a = b;
        b = next;
    }
    out
}

// Copyright (c) 2026 The kuttaka-kit Authors
// SPDX-License-Identifier: Apache-2.0

//! Kuttaka inverse against the extended-Euclid inverse on random coprime pairs.

use std::time::{Duration, Instant};

use kuttaka::arith::gcd;
use kuttaka::{extended_euclid, mod_inverse};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const MIN_BITS: u32 = 2;
pub const MAX_BITS: u32 = 59;

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub trials: usize,
    pub bits: u32,
    pub seed: u64,
    /// Use this pair on every trial instead of sampling.
    pub fixed: Option<(u64, u64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub a: u64,
    pub m: u64,
    pub kuttaka: Result<u64, String>,
    pub euclid: Result<u64, String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub trials: usize,
    pub kuttaka_median: Duration,
    pub euclid_median: Duration,
    /// Inverse from the last trial; handy with a fixed pair.
    pub last: (u64, u64, u64),
}

fn euclid_inverse(a: u64, m: u64) -> Result<u64, String> {
    let (g, s, _) = extended_euclid(a.into(), m.into()).map_err(|e| e.to_string())?;
    if g != 1 {
        return Err(format!("{a} and {m} are not coprime"));
    }
    Ok(s.rem_euclid(m.into()) as u64)
}

fn sample(rng: &mut StdRng, bits: u32) -> (u64, u64) {
    let lo = 1u64 << (bits - 1);
    loop {
        let m = rng.gen_range(lo.max(2)..lo << 1);
        let a = rng.gen_range(1..m);
        if gcd(a.into(), m.into()) == 1 {
            return (a, m);
        }
    }
}

fn median(mut xs: Vec<Duration>) -> Duration {
    xs.sort_unstable();
    xs[xs.len() / 2]
}

pub fn run(config: &Config) -> Result<Report, Box<Mismatch>> {
    let mut rng = StdRng::seed_from_u64(config.seed);
    let mut kt = Vec::with_capacity(config.trials);
    let mut et = Vec::with_capacity(config.trials);
    let mut last = (0, 0, 0);
    for _ in 0..config.trials {
        let (a, m) = config
            .fixed
            .unwrap_or_else(|| sample(&mut rng, config.bits));

        let start = Instant::now();
        let k = std::hint::black_box(mod_inverse(a, m)).map_err(|e| e.to_string());
        kt.push(start.elapsed());

        let start = Instant::now();
        let e = std::hint::black_box(euclid_inverse(a, m));
        et.push(start.elapsed());

        match (&k, &e) {
            (Ok(x), Ok(y)) if x == y => last = (a, m, *x),
            _ => {
                return Err(Box::new(Mismatch {
                    a,
                    m,
                    kuttaka: k,
                    euclid: e,
                }))
            }
        }
    }
    Ok(Report {
        trials: config.trials,
        kuttaka_median: median(kt),
        euclid_median: median(et),
        last,
    })
}

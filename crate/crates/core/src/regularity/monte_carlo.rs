//! Seeded Monte-Carlo estimates of how often random instances pass the
//! regularity check.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::degree::DegreeVector;
use crate::error::{Error, ErrorKind};
use crate::limits::Limits;
use crate::regularity::check::{check_regularity_at_origin, SAMPLED_CHECK_NOTE};
use crate::regularity::random::{random_h, random_instance};
use crate::render::rational_string;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MonteCarloStats {
    pub degrees: Vec<u32>,
    pub modulus: u64,
    pub trials: u32,
    pub h_per_trial: u32,
    pub seed: u64,
    /// Checks that produced a verdict.
    pub checks: u64,
    pub passes: u64,
    /// `passes / checks` as `"p/q"`; `null` when nothing was checked.
    pub pass_rate: Option<String>,
    /// Trial seeds with at least one failing `h`, ascending.
    pub failure_seeds: Vec<u64>,
    pub limit_exceeded: u64,
    pub other_errors: u64,
    pub notes: Vec<String>,
}

impl MonteCarloStats {
    pub fn pass_fraction(&self) -> Option<f64> {
        (self.checks > 0).then(|| self.passes as f64 / self.checks as f64)
    }
}

#[derive(Default)]
struct Tally {
    checks: u64,
    passes: u64,
    failed: bool,
    limit: u64,
    other: u64,
}

impl Tally {
    fn record_error(&mut self, e: &Error) {
        match e.kind() {
            ErrorKind::Limit => self.limit += 1,
            ErrorKind::Input => self.other += 1,
        }
    }
}

fn run_trial(d: &DegreeVector, p: u64, trial_seed: u64, h_per_trial: u32, limits: &Limits) -> Tally {
    let mut tally = Tally::default();
    let inst = match random_instance(d, p, trial_seed, limits) {
        Ok(inst) => inst,
        Err(e) => {
            tally.record_error(&e);
            return tally;
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    rng.set_stream(1);
    for _ in 0..h_per_trial {
        let outcome = random_h(&inst, &mut rng, limits)
            .and_then(|h| check_regularity_at_origin(&inst, &h, limits));
        match outcome {
            Ok((verdict, _)) => {
                tally.checks += 1;
                if verdict {
                    tally.passes += 1;
                } else {
                    tally.failed = true;
                }
            }
            Err(e) => tally.record_error(&e),
        }
    }
    tally
}

/// Per-trial seeds are drawn from a generator seeded with `seed`, so the
/// record depends only on the arguments. Trials run in parallel.
pub fn monte_carlo_regularity(
    d: &DegreeVector,
    p: u64,
    trials: u32,
    h_per_trial: u32,
    seed: u64,
    limits: &Limits,
) -> MonteCarloStats {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..trials).map(|_| master.random()).collect();
    let tallies: Vec<(u64, Tally)> = seeds
        .par_iter()
        .map(|&s| (s, run_trial(d, p, s, h_per_trial, limits)))
        .collect();
    let mut stats = MonteCarloStats {
        degrees: d.degrees().to_vec(),
        modulus: p,
        trials,
        h_per_trial,
        seed,
        checks: 0,
        passes: 0,
        pass_rate: None,
        failure_seeds: Vec::new(),
        limit_exceeded: 0,
        other_errors: 0,
        notes: vec![SAMPLED_CHECK_NOTE.to_string()],
    };
    for (s, t) in tallies {
        stats.checks += t.checks;
        stats.passes += t.passes;
        stats.limit_exceeded += t.limit;
        stats.other_errors += t.other;
        if t.failed {
            stats.failure_seeds.push(s);
        }
    }
    stats.failure_seeds.sort_unstable();
    if stats.checks > 0 {
        let rate = BigRational::new(BigInt::from(stats.passes), BigInt::from(stats.checks));
        stats.pass_rate = Some(rational_string(&rate));
    }
    if stats.limit_exceeded > 0 {
        stats
            .notes
            .push("checks that hit a resource limit are excluded from the pass rate".into());
    }
    stats
}

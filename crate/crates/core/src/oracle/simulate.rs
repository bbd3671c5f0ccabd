//! Seeded Monte-Carlo estimates of the shuffle and carries chains.
//!
//! Trial `i` draws from ChaCha8 stream `i` under the configured seed, and
//! per-trial counts are reduced by integer addition, so results do not depend
//! on how rayon partitions the trials.

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::Permutation;
use crate::matrix::Matrix;
use crate::oracle::shuffles::shuffle_outcome;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SimulationConfig {
    pub trials: u64,
    pub seed: u64,
    /// Transitions recorded per trial.
    pub steps: u32,
}

impl SimulationConfig {
    pub fn new(trials: u64, seed: u64) -> Self {
        SimulationConfig { trials, seed, steps: 1 }
    }

    fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::EmptySample("trials must be positive".into()));
        }
        if self.steps == 0 {
            return Err(Error::EmptySample("steps must be positive".into()));
        }
        Ok(())
    }
}

/// Transition counts between states `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmpiricalMatrix {
    pub n: usize,
    pub config: SimulationConfig,
    pub counts: Vec<Vec<u64>>,
}

impl EmpiricalMatrix {
    pub fn row_totals(&self) -> Vec<u64> {
        self.counts.iter().map(|r| r.iter().sum()).collect()
    }

    /// Row-normalized frequencies; rows with no visits are all zero.
    pub fn frequencies(&self) -> Vec<Vec<f64>> {
        self.counts
            .iter()
            .map(|row| {
                let total: u64 = row.iter().sum();
                row.iter().map(|&c| if total == 0 { 0.0 } else { c as f64 / total as f64 }).collect()
            })
            .collect()
    }

    /// Total-variation distance of each empirical row from the exact row.
    pub fn tv_distances(&self, exact: &Matrix<BigRational>) -> Result<Vec<f64>> {
        if exact.rows() != self.n || exact.cols() != self.n {
            return Err(Error::Shape(format!("exact matrix is {}x{}, sample is {n}x{n}", exact.rows(), exact.cols(), n = self.n)));
        }
        Ok(self
            .frequencies()
            .iter()
            .enumerate()
            .map(|(i, row)| {
                0.5 * row
                    .iter()
                    .enumerate()
                    .map(|(j, f)| (f - exact.get(i, j).to_f64().unwrap_or(f64::NAN)).abs())
                    .sum::<f64>()
            })
            .collect())
    }
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn run_trials(n: usize, cfg: &SimulationConfig, trial: impl Fn(&mut ChaCha8Rng, &mut [u64]) + Sync) -> EmpiricalMatrix {
    let flat = (0..cfg.trials)
        .into_par_iter()
        .fold(
            || vec![0u64; n * n],
            |mut acc, i| {
                let mut rng = trial_rng(cfg.seed, i);
                trial(&mut rng, &mut acc);
                acc
            },
        )
        .reduce(
            || vec![0u64; n * n],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    EmpiricalMatrix { n, config: *cfg, counts: flat.chunks(n).map(<[u64]>::to_vec).collect() }
}

/// Repeated GSR `b`-shuffles, recording descent counts before and after
/// each shuffle.
///
/// Each trial starts from a uniformly random permutation, which is stationary
/// for the permutation chain, and then performs `cfg.steps` shuffles.
pub fn simulate_shuffle_chain(n: usize, b: u64, cfg: &SimulationConfig) -> Result<EmpiricalMatrix> {
    if n == 0 || b == 0 {
        return Err(Error::InvalidParameter("n and b must be at least 1".into()));
    }
    cfg.validate()?;
    Ok(run_trials(n, cfg, |rng, acc| {
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(rng);
        let mut state = Permutation::from_images_unchecked(images);
        let mut word = vec![0u64; n];
        for _ in 0..cfg.steps {
            word.iter_mut().for_each(|d| *d = rng.gen_range(0..b));
            let next = shuffle_outcome(&word).compose(&state);
            acc[state.descent_count() * n + next.descent_count()] += 1;
            state = next;
        }
    }))
}

/// Column-by-column addition of `n_summands` random base-`b` numbers with
/// `digits` digits each; records the carry into and out of every column.
///
/// The carry into the lowest column is 0. Carries stay in `0..n_summands`.
pub fn simulate_carries(n_summands: usize, b: u64, digits: u32, cfg: &SimulationConfig) -> Result<EmpiricalMatrix> {
    if n_summands < 2 || b < 2 {
        return Err(Error::InvalidParameter("carries need at least 2 summands and base at least 2".into()));
    }
    if digits == 0 {
        return Err(Error::EmptySample("digits must be positive".into()));
    }
    cfg.validate()?;
    let n = n_summands;
    Ok(run_trials(n, cfg, |rng, acc| {
        let mut carry = 0u64;
        for _ in 0..digits {
            let column: u64 = carry + (0..n_summands).map(|_| rng.gen_range(0..b)).sum::<u64>();
            let next = column / b;
            acc[carry as usize * n + next as usize] += 1;
            carry = next;
        }
    }))
}

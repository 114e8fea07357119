use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::distribution::SampleDistribution;
use super::ising::IsingAnsatz;
use crate::bits;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Interpolation {
    #[default]
    Geometric,
    Linear,
}

/// Inverse-temperature ramp for simulated annealing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnnealSchedule {
    pub sweeps: usize,
    pub beta_start: f64,
    pub beta_end: f64,
    #[serde(default)]
    pub interpolation: Interpolation,
}

impl Default for AnnealSchedule {
    fn default() -> Self {
        AnnealSchedule {
            sweeps: 1000,
            beta_start: 0.1,
            beta_end: 10.0,
            interpolation: Interpolation::Geometric,
        }
    }
}

impl AnnealSchedule {
    pub fn validate(&self) -> Result<()> {
        if self.sweeps == 0 {
            return Err(Error::Config("annealing needs at least one sweep".into()));
        }
        if !(self.beta_start > 0.0 && self.beta_end >= self.beta_start && self.beta_end.is_finite()) {
            return Err(Error::Config(format!(
                "need 0 < beta_start <= beta_end, got {} and {}",
                self.beta_start, self.beta_end
            )));
        }
        Ok(())
    }

    /// Inverse temperature of every sweep.
    pub fn betas(&self) -> Vec<f64> {
        let n = self.sweeps;
        if n == 1 {
            return vec![self.beta_end];
        }
        (0..n)
            .map(|t| {
                let f = t as f64 / (n - 1) as f64;
                match self.interpolation {
                    Interpolation::Geometric => {
                        self.beta_start * (self.beta_end / self.beta_start).powf(f)
                    }
                    Interpolation::Linear => self.beta_start + (self.beta_end - self.beta_start) * f,
                }
            })
            .collect()
    }
}

const RUNS_PER_CHUNK: u64 = 256;

/// `shots` independent single-spin-flip Metropolis anneals, each from a
/// uniformly random start; the final configurations are counted.
///
/// Run `r` draws from ChaCha8 stream `r` of `seed`, so the result does not
/// depend on how runs are scheduled across threads.
pub fn simulated_anneal(
    theta: &IsingAnsatz,
    shots: u64,
    schedule: &AnnealSchedule,
    seed: u64,
) -> Result<SampleDistribution> {
    schedule.validate()?;
    let m = theta.n_qubits();
    let betas = schedule.betas();
    let fields: Vec<f64> = (0..m).map(|i| theta.linear(i)).collect();
    let couplings = theta.coupling_matrix();

    let chunks = shots.div_ceil(RUNS_PER_CHUNK);
    let partial: Vec<BTreeMap<u64, u64>> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut counts = BTreeMap::new();
            let mut spins = vec![0.0f64; m];
            let lo = chunk * RUNS_PER_CHUNK;
            let hi = (lo + RUNS_PER_CHUNK).min(shots);
            for run in lo..hi {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(run);
                anneal_once(&fields, &couplings, &betas, &mut spins, &mut rng);
                let mut state = 0u64;
                for (q, s) in spins.iter().enumerate() {
                    if *s < 0.0 {
                        state |= bits::qubit_mask(q, m);
                    }
                }
                *counts.entry(state).or_insert(0) += 1;
            }
            counts
        })
        .collect();

    let mut merged: BTreeMap<u64, u64> = BTreeMap::new();
    for counts in partial {
        for (s, c) in counts {
            *merged.entry(s).or_insert(0) += c;
        }
    }
    SampleDistribution::from_counts(m, merged)
}

fn anneal_once(fields: &[f64], couplings: &[f64], betas: &[f64], spins: &mut [f64], rng: &mut ChaCha8Rng) {
    let m = fields.len();
    for s in spins.iter_mut() {
        *s = if rng.random::<bool>() { 1.0 } else { -1.0 };
    }
    for &beta in betas {
        for i in 0..m {
            let row = &couplings[i * m..(i + 1) * m];
            let local: f64 = fields[i] + row.iter().zip(spins.iter()).map(|(j, s)| j * s).sum::<f64>();
            let delta = -2.0 * spins[i] * local;
            if delta <= 0.0 || rng.random::<f64>() < (-beta * delta).exp() {
                spins[i] = -spins[i];
            }
        }
    }
}

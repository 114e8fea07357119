use rand::seq::index::sample as sample_indices;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::evaluate::{evaluate_trial, SamplerConfig};
use crate::error::{Error, Result};
use crate::hamiltonian::Observable;
use crate::sampler::IsingAnsatz;

/// Which parameters coordinate descent may move.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Coordinates {
    #[default]
    All,
    Subset(Vec<usize>),
    /// `count` distinct coordinates drawn once from `seed`.
    Random { count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct FineTuneOptions {
    pub initial_step: f64,
    pub min_step: f64,
    pub max_cycles: usize,
    pub coordinates: Coordinates,
    /// Sampler seed shared by every evaluation.
    pub seed: u64,
}

impl Default for FineTuneOptions {
    fn default() -> Self {
        FineTuneOptions {
            initial_step: 0.25,
            min_step: 1e-3,
            max_cycles: 20,
            coordinates: Coordinates::All,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FineTuneResult {
    pub theta: IsingAnsatz,
    pub energy: f64,
    pub initial_energy: f64,
    /// Energy after each accepted move, starting with the initial energy.
    pub history: Vec<f64>,
    pub evaluations: usize,
}

/// Cyclic coordinate descent on continuous angles.
///
/// Each coordinate probes `+-step`, keeps moving while the energy drops,
/// and halves its step when neither direction improves. Stops once every
/// step is below `min_step` or after `max_cycles` passes.
pub fn fine_tune<H: Observable + ?Sized>(
    theta0: &IsingAnsatz,
    h: &H,
    config: &SamplerConfig,
    options: &FineTuneOptions,
) -> Result<FineTuneResult> {
    let nu = theta0.parameter_count();
    let coords: Vec<usize> = match &options.coordinates {
        Coordinates::All => (0..nu).collect(),
        Coordinates::Subset(c) => {
            if let Some(&bad) = c.iter().find(|&&i| i >= nu) {
                return Err(Error::Config(format!("coordinate {bad} out of range for nu = {nu}")));
            }
            c.clone()
        }
        Coordinates::Random { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut c = sample_indices(&mut rng, nu, (*count).min(nu)).into_vec();
            c.sort_unstable();
            c
        }
    };
    if !(options.initial_step > 0.0 && options.min_step > 0.0) {
        return Err(Error::Config("fine-tune steps must be positive".into()));
    }

    let mut evaluations = 0usize;
    let mut energy_at = |theta: &IsingAnsatz| -> Option<f64> {
        evaluations += 1;
        match evaluate_trial(h, theta, config, options.seed) {
            Ok(t) => Some(t.energy),
            Err(e) => {
                log::debug!("fine-tune probe failed: {e}");
                None
            }
        }
    };

    let mut theta = theta0.clone();
    let initial_energy = energy_at(&theta).ok_or(Error::EmptyDistribution)?;
    let mut energy = initial_energy;
    let mut history = vec![energy];
    let mut steps = vec![options.initial_step; coords.len()];

    for _ in 0..options.max_cycles {
        if steps.iter().all(|&s| s < options.min_step) {
            break;
        }
        for (k, &c) in coords.iter().enumerate() {
            if steps[k] < options.min_step {
                continue;
            }
            let base = theta.parameters()[c];
            let mut moved = false;
            for dir in [1.0, -1.0] {
                let mut x = base;
                loop {
                    let mut probe = theta.clone();
                    probe.set_parameter(c, x + dir * steps[k]);
                    match energy_at(&probe) {
                        Some(e) if e < energy => {
                            x += dir * steps[k];
                            theta = probe;
                            energy = e;
                            history.push(e);
                            moved = true;
                        }
                        _ => break,
                    }
                }
                if moved {
                    break;
                }
            }
            if !moved {
                steps[k] *= 0.5;
            }
        }
    }

    Ok(FineTuneResult {
        theta,
        energy,
        initial_energy,
        history,
        evaluations,
    })
}

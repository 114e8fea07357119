use crate::error::{Error, Result};
use crate::hamiltonian::Observable;
use crate::sampler::{sample, Backend, IsingAnsatz, ProbabilityTable, SampleCount};
use crate::trial_state::{optimize_signs_with, SignOptions, SignPattern, TrialState};

/// How each ansatz is turned into a trial state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerConfig {
    pub backend: Backend,
    pub shots: SampleCount,
    /// Outcomes with probability below this are dropped before sign search.
    pub support_floor: f64,
    pub signs: SignOptions,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            backend: Backend::default(),
            shots: SampleCount::Finite(1000),
            support_floor: 0.0,
            signs: SignOptions::default(),
        }
    }
}

/// One ansatz after sampling and sign optimization.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialEvaluation {
    pub theta: IsingAnsatz,
    pub probabilities: ProbabilityTable,
    pub signs: SignPattern,
    pub state: TrialState,
    pub energy: f64,
}

/// Sampled probabilities of `theta`, after the support floor.
pub fn trial_probabilities(theta: &IsingAnsatz, config: &SamplerConfig, seed: u64) -> Result<ProbabilityTable> {
    let probs = sample(&config.backend, theta, config.shots, seed)?.probabilities();
    finish_probabilities(probs, config)
}

pub(crate) fn finish_probabilities(probs: ProbabilityTable, config: &SamplerConfig) -> Result<ProbabilityTable> {
    let probs = if config.support_floor > 0.0 {
        probs.truncated(config.support_floor)
    } else {
        probs
    };
    if probs.is_empty() {
        return Err(Error::EmptyDistribution);
    }
    Ok(probs)
}

pub(crate) fn evaluate_probabilities<H: Observable + ?Sized>(
    theta: IsingAnsatz,
    probabilities: ProbabilityTable,
    h: &H,
    config: &SamplerConfig,
) -> Result<TrialEvaluation> {
    let found = optimize_signs_with(&probabilities, h, &config.signs)?;
    Ok(TrialEvaluation {
        theta,
        probabilities,
        signs: found.signs,
        state: found.state,
        energy: found.energy,
    })
}

/// Sample `theta`, choose signs, and return the trial energy.
pub fn evaluate_trial<H: Observable + ?Sized>(
    h: &H,
    theta: &IsingAnsatz,
    config: &SamplerConfig,
    seed: u64,
) -> Result<TrialEvaluation> {
    if theta.n_qubits() != h.n_qubits() {
        return Err(Error::Shape {
            expected: h.n_qubits(),
            found: theta.n_qubits(),
        });
    }
    let probs = trial_probabilities(theta, config, seed)?;
    evaluate_probabilities(theta.clone(), probs, h, config)
}

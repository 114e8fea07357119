use std::collections::BTreeMap;

use super::evaluate::{evaluate_probabilities, finish_probabilities, SamplerConfig, TrialEvaluation};
use crate::error::{Error, Result};
use crate::hamiltonian::Observable;
use crate::sampler::{derive_seed, sample, IsingAnsatz, ProbabilityTable};

/// Trial state from the averaged distributions of several ansatz.
///
/// Ansatz `k` samples with `derive_seed(seed, k)`, matching trial `k` of a
/// search with master seed `seed`. The returned `theta` is the first ansatz.
pub fn alpha_varqa<H: Observable + ?Sized>(
    thetas: &[IsingAnsatz],
    h: &H,
    config: &SamplerConfig,
    seed: u64,
) -> Result<TrialEvaluation> {
    let first = thetas
        .first()
        .ok_or_else(|| Error::Config("alpha-VarQA needs at least one ansatz".into()))?;
    let m = first.n_qubits();
    if let Some(bad) = thetas.iter().find(|t| t.n_qubits() != m) {
        return Err(Error::Shape {
            expected: m,
            found: bad.n_qubits(),
        });
    }
    if h.n_qubits() != m {
        return Err(Error::Shape {
            expected: h.n_qubits(),
            found: m,
        });
    }
    let probs = if thetas.len() == 1 {
        sample(&config.backend, first, config.shots, derive_seed(seed, 0))?.probabilities()
    } else {
        let alpha = thetas.len() as f64;
        let mut acc: BTreeMap<u64, f64> = BTreeMap::new();
        for (k, theta) in thetas.iter().enumerate() {
            let p = sample(&config.backend, theta, config.shots, derive_seed(seed, k as u64))?.probabilities();
            let total = p.total();
            for &(s, v) in p.entries() {
                *acc.entry(s).or_insert(0.0) += v / total / alpha;
            }
        }
        ProbabilityTable::new(m, acc)?
    };
    let probs = finish_probabilities(probs, config)?;
    evaluate_probabilities(first.clone(), probs, h, config)
}

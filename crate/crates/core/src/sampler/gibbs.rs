use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::distribution::{ProbabilityTable, SampleDistribution};
use super::ising::IsingAnsatz;
use crate::error::{Error, Result};

/// Largest register enumerated by [`gibbs_distribution`].
pub const GIBBS_QUBIT_LIMIT: usize = 24;

/// Boltzmann probabilities `exp(-beta E_m) / Z` over all `2^M` basis states.
pub fn gibbs_distribution(theta: &IsingAnsatz, beta: f64) -> Result<ProbabilityTable> {
    Ok(ProbabilityTable::from_dense(theta.n_qubits(), &gibbs_dense(theta, beta)?))
}

/// Dense form of [`gibbs_distribution`], indexed by basis state.
pub fn gibbs_dense(theta: &IsingAnsatz, beta: f64) -> Result<Vec<f64>> {
    let m = theta.n_qubits();
    if m > GIBBS_QUBIT_LIMIT {
        return Err(Error::DimensionTooLarge {
            qubits: m,
            limit: GIBBS_QUBIT_LIMIT,
        });
    }
    if !(beta.is_finite() && beta >= 0.0) {
        return Err(Error::Config(format!("inverse temperature must be finite and >= 0, got {beta}")));
    }
    let energies: Vec<f64> = (0..1u64 << m).map(|s| theta.energy(s)).collect();
    let e_min = energies.iter().copied().fold(f64::INFINITY, f64::min);
    let mut weights: Vec<f64> = energies.iter().map(|e| (-beta * (e - e_min)).exp()).collect();
    let z: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= z);
    Ok(weights)
}

/// `shots` independent draws from the Gibbs distribution of `theta`.
pub fn gibbs_shots(theta: &IsingAnsatz, beta: f64, shots: u64, seed: u64) -> Result<SampleDistribution> {
    let probs = gibbs_dense(theta, beta)?;
    let mut cumulative = Vec::with_capacity(probs.len());
    let mut acc = 0.0;
    for p in &probs {
        acc += p;
        cumulative.push(acc);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![0u64; probs.len()];
    for _ in 0..shots {
        let u = rng.random::<f64>() * acc;
        let i = cumulative.partition_point(|&c| c <= u).min(probs.len() - 1);
        counts[i] += 1;
    }
    SampleDistribution::from_counts(
        theta.n_qubits(),
        counts.into_iter().enumerate().map(|(m, c)| (m as u64, c)),
    )
}

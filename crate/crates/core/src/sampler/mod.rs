//! Ising ansatz and bit-string samplers.

mod anneal;
mod distribution;
mod gibbs;
mod ising;

pub use anneal::{simulated_anneal, AnnealSchedule, Interpolation};
pub use distribution::{largest_remainder_counts, ProbabilityTable, SampleCount, SampleDistribution};
pub use gibbs::{gibbs_dense, gibbs_distribution, gibbs_shots, GIBBS_QUBIT_LIMIT};
pub use ising::{ising_energy, parameter_count, IsingAnsatz};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default inverse temperature of the exact Gibbs backend, in ansatz units.
pub const DEFAULT_GIBBS_BETA: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "backend", rename_all = "snake_case")]
pub enum Backend {
    ExactGibbs { beta: f64 },
    /// Independent shots drawn from the exact Gibbs distribution.
    GibbsShots { beta: f64 },
    SimulatedAnnealing { schedule: AnnealSchedule },
}

impl Default for Backend {
    fn default() -> Self {
        Backend::ExactGibbs {
            beta: DEFAULT_GIBBS_BETA,
        }
    }
}

/// Output of [`sample`]: integer counts, or exact probabilities when the
/// shot count is [`SampleCount::Infinite`].
#[derive(Debug, Clone, PartialEq)]
pub enum Sampled {
    Counts(SampleDistribution),
    Exact(ProbabilityTable),
}

impl Sampled {
    pub fn n_qubits(&self) -> usize {
        match self {
            Sampled::Counts(d) => d.n_qubits(),
            Sampled::Exact(t) => t.n_qubits(),
        }
    }

    pub fn probabilities(&self) -> ProbabilityTable {
        match self {
            Sampled::Counts(d) => d.probabilities(),
            Sampled::Exact(t) => t.clone(),
        }
    }
}

/// Draw from `theta` with the chosen backend.
///
/// Exact Gibbs turns probabilities into counts by largest-remainder rounding,
/// so the result is deterministic and `seed` is unused.
pub fn sample(backend: &Backend, theta: &IsingAnsatz, shots: SampleCount, seed: u64) -> Result<Sampled> {
    match (backend, shots) {
        (Backend::ExactGibbs { beta }, SampleCount::Infinite) => {
            Ok(Sampled::Exact(gibbs_distribution(theta, *beta)?))
        }
        (Backend::ExactGibbs { beta }, SampleCount::Finite(s)) => {
            check_shots(s)?;
            let table = gibbs_distribution(theta, *beta)?;
            let counts = largest_remainder_counts(&table, s);
            Ok(Sampled::Counts(SampleDistribution::from_counts(theta.n_qubits(), counts)?))
        }
        (Backend::GibbsShots { beta }, SampleCount::Finite(s)) => {
            check_shots(s)?;
            Ok(Sampled::Counts(gibbs_shots(theta, *beta, s, seed)?))
        }
        (Backend::GibbsShots { beta }, SampleCount::Infinite) => {
            Ok(Sampled::Exact(gibbs_distribution(theta, *beta)?))
        }
        (Backend::SimulatedAnnealing { schedule }, SampleCount::Finite(s)) => {
            check_shots(s)?;
            Ok(Sampled::Counts(simulated_anneal(theta, s, schedule, seed)?))
        }
        (Backend::SimulatedAnnealing { .. }, SampleCount::Infinite) => Err(Error::Config(
            "simulated annealing needs a finite shot count".into(),
        )),
    }
}

fn check_shots(s: u64) -> Result<()> {
    if s == 0 {
        return Err(Error::Config("shot count must be at least 1".into()));
    }
    Ok(())
}

/// Per-trial seed from a master seed (splitmix64 finalizer).
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gibbs_uniform_rounds_exactly() {
        let t = IsingAnsatz::zeros(2);
        let out = sample(&Backend::ExactGibbs { beta: 1.0 }, &t, SampleCount::Finite(1000), 0).unwrap();
        let Sampled::Counts(d) = out else { panic!() };
        assert!((0..4).all(|m| d.count(m) == 250));
    }

    #[test]
    fn gibbs_infinite_is_normalized() {
        let t = IsingAnsatz::from_parameters(4, (0..11).map(|i| (i % 3) as f64 - 1.0).collect()).unwrap();
        let out = sample(&Backend::default(), &t, SampleCount::Infinite, 0).unwrap();
        let Sampled::Exact(p) = out else { panic!() };
        assert_eq!(p.len(), 16);
        assert!((p.total() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn annealing_repeats_with_same_seed() {
        let t = IsingAnsatz::from_parameters(2, vec![1.0, -1.0, 1.0, 0.0]).unwrap();
        let b = Backend::SimulatedAnnealing {
            schedule: AnnealSchedule::default(),
        };
        let a = sample(&b, &t, SampleCount::Finite(500), 7).unwrap();
        assert_eq!(a, sample(&b, &t, SampleCount::Finite(500), 7).unwrap());
        assert!(sample(&b, &t, SampleCount::Infinite, 7).is_err());
    }

    #[test]
    fn derived_seeds_differ() {
        let seeds: std::collections::HashSet<u64> = (0..1000).map(|i| derive_seed(42, i)).collect();
        assert_eq!(seeds.len(), 1000);
        assert_ne!(derive_seed(1, 0), derive_seed(2, 0));
    }
}

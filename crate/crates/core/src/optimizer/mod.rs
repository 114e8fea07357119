//! Digitized variational search over Ising ansatz.
//!
//! Every trial samples an ansatz, builds the signed trial state with the best
//! sign pattern, and scores it against the Hamiltonian. The lowest score over
//! a digitized parameter grid is the VarQA estimate, which [`fine_tune`] can
//! refine with continuous angles.

mod digitizer;
mod ensemble;
mod evaluate;
mod excited;
mod fine_tune;
mod search;

pub use digitizer::{enumerate_digitizer, DigitizerKind, DigitizerSpec, SearchMode, ENUMERATION_BUDGET};
pub use ensemble::alpha_varqa;
pub use evaluate::{evaluate_trial, trial_probabilities, SamplerConfig, TrialEvaluation};
pub use excited::{excited_state_search, h2_triplet_k, ExcitedResult};
pub use fine_tune::{fine_tune, Coordinates, FineTuneOptions, FineTuneResult};
pub use search::{varqa_search, VarqaResult, ENERGY_TIE_TOLERANCE};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::{exact_diagonalize, PauliHamiltonian};
    use crate::sampler::{Backend, IsingAnsatz, SampleCount};
    use crate::trial_state::expected_energy;

    fn diagonal_h() -> PauliHamiltonian {
        PauliHamiltonian::from_text("# qubits: 2\n0.3 ZI\n-0.8 IZ\n0.25 ZZ\n0.1 II\n").unwrap()
    }

    fn d1_2q() -> DigitizerSpec {
        DigitizerSpec::new(DigitizerKind::D1, 4, SearchMode::Exhaustive).unwrap()
    }

    #[test]
    fn diagonal_hamiltonian_reaches_min_diagonal() {
        let h = diagonal_h();
        let cfg = SamplerConfig {
            backend: Backend::ExactGibbs { beta: 10.0 },
            ..Default::default()
        };
        let r = varqa_search(&h, &d1_2q(), &cfg, 5, true).unwrap();
        let ed = exact_diagonalize(&h).unwrap().ground_energy();
        assert!((r.best_energy - ed).abs() < 1e-12);
        assert_eq!(r.trials_evaluated, 16);
        let recomputed = expected_energy(&r.best_state, &h).unwrap();
        assert!((recomputed - r.best_energy).abs() < 1e-12);
        let trace = r.energy_trace.unwrap();
        assert!(trace.windows(2).all(|w| w[1].1 < w[0].1 && w[1].0 > w[0].0));
    }

    #[test]
    fn search_ties_resolve_to_smallest_theta() {
        // Every ansatz gives the same point-free uniform energy on the identity.
        let h = PauliHamiltonian::from_text("# qubits: 2\n1 II\n").unwrap();
        let r = varqa_search(&h, &d1_2q(), &SamplerConfig::default(), 0, false).unwrap();
        assert_eq!(r.best_index, 0);
        assert_eq!(r.best_theta.parameters(), &[-1.0; 4]);
    }

    #[test]
    fn fine_tune_leaves_a_local_optimum_alone() {
        let h = diagonal_h();
        let cfg = SamplerConfig {
            backend: Backend::ExactGibbs { beta: 2.0 },
            shots: SampleCount::Finite(1000),
            ..Default::default()
        };
        // Strong fields pin the sampled point mass on the diagonal minimum.
        let theta = IsingAnsatz::from_parameters(2, vec![40.0, -40.0, 0.0, 0.0]).unwrap();
        let r = fine_tune(&theta, &h, &cfg, &FineTuneOptions::default()).unwrap();
        assert_eq!(r.theta, theta);
        assert_eq!(r.history.len(), 1);
    }

    #[test]
    fn fine_tune_never_increases_energy() {
        let h = PauliHamiltonian::from_text("# qubits: 2\n0.4 XX\n-0.3 ZI\n0.2 IZ\n0.5 YY\n").unwrap();
        let cfg = SamplerConfig {
            backend: Backend::ExactGibbs { beta: 1.0 },
            shots: SampleCount::Infinite,
            ..Default::default()
        };
        let theta = IsingAnsatz::from_parameters(2, vec![1.0, -1.0, 1.0, 0.0]).unwrap();
        let r = fine_tune(&theta, &h, &cfg, &FineTuneOptions::default()).unwrap();
        assert!(r.energy <= r.initial_energy);
        assert!(r.history.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn alpha_one_matches_single_trial() {
        let h = PauliHamiltonian::from_text("# qubits: 2\n0.4 XX\n-0.3 ZI\n0.2 IZ\n").unwrap();
        let cfg = SamplerConfig::default();
        let theta = IsingAnsatz::from_parameters(2, vec![1.0, -1.0, 0.0, 1.0]).unwrap();
        let a = alpha_varqa(std::slice::from_ref(&theta), &h, &cfg, 9).unwrap();
        let b = evaluate_trial(&h, &theta, &cfg, crate::sampler::derive_seed(9, 0)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn alpha_rejects_mixed_widths() {
        let h = diagonal_h();
        let t = [IsingAnsatz::zeros(2), IsingAnsatz::zeros(3)];
        assert!(matches!(
            alpha_varqa(&t, &h, &SamplerConfig::default(), 0),
            Err(crate::Error::Shape { .. })
        ));
    }

    #[test]
    fn triplet_k_rule() {
        assert_eq!(h2_triplet_k(0.3), 5);
        assert_eq!(h2_triplet_k(0.475), 3);
        assert_eq!(h2_triplet_k(0.74), 3);
        assert_eq!(h2_triplet_k(0.75), 1);
    }
}

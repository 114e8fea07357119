use std::cmp::Ordering;
use std::fmt::Write as _;

use rayon::prelude::*;

use super::digitizer::DigitizerSpec;
use super::evaluate::{evaluate_trial, SamplerConfig};
use crate::bits;
use crate::error::{Error, Result};
use crate::hamiltonian::Observable;
use crate::sampler::{derive_seed, IsingAnsatz};
use crate::trial_state::{SignPattern, TrialState};
use crate::units::hartree_to_kcal;

/// Energies closer than this are tied and resolved by parameter order.
pub const ENERGY_TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct VarqaResult {
    pub best_theta: IsingAnsatz,
    pub best_signs: SignPattern,
    pub best_state: TrialState,
    pub best_energy: f64,
    pub best_index: u64,
    pub trials_evaluated: u64,
    pub failed_trials: u64,
    /// `(trial index, best energy so far)` at every improvement.
    pub energy_trace: Option<Vec<(u64, f64)>>,
}

impl VarqaResult {
    /// Line-oriented summary; `reference` adds the error against an exact energy.
    pub fn report(&self, reference: Option<f64>) -> String {
        let m = self.best_state.n_qubits();
        let mut out = String::new();
        let _ = writeln!(out, "energy_hartree {:.12}", self.best_energy);
        let _ = writeln!(out, "energy_kcal_mol {:.6}", hartree_to_kcal(self.best_energy));
        if let Some(e) = reference {
            let _ = writeln!(out, "reference_hartree {e:.12}");
            let _ = writeln!(out, "error_kcal_mol {:.6}", hartree_to_kcal(self.best_energy - e));
        }
        let theta: Vec<String> = self.best_theta.parameters().iter().map(|p| format!("{p}")).collect();
        let _ = writeln!(out, "theta {}", theta.join(" "));
        let _ = writeln!(out, "signs {}", self.best_signs);
        let _ = writeln!(out, "best_trial {}", self.best_index);
        let _ = writeln!(out, "trials {} failed {}", self.trials_evaluated, self.failed_trials);
        let _ = writeln!(out, "support {}", self.best_state.len());
        for &(s, a) in self.best_state.support() {
            let _ = writeln!(out, "  {} {:+.10}", bits::format_bits(s, m), a);
        }
        out
    }
}

/// Order on `(energy, theta)` used to pick the optimum.
pub(crate) fn compare_trials(e1: f64, t1: &IsingAnsatz, e2: f64, t2: &IsingAnsatz) -> Ordering {
    if (e1 - e2).abs() > ENERGY_TIE_TOLERANCE {
        return e1.total_cmp(&e2);
    }
    t1.parameters()
        .iter()
        .zip(t2.parameters())
        .map(|(a, b)| a.total_cmp(b))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Evaluate every trial of `spec` and keep the lowest energy.
///
/// Trial `i` samples with seed `derive_seed(master_seed, i)`. Energies are
/// collected in trial order and scanned serially, so the result does not
/// depend on the thread count. Failed trials are logged and skipped.
pub fn varqa_search<H: Observable + ?Sized>(
    h: &H,
    spec: &DigitizerSpec,
    config: &SamplerConfig,
    master_seed: u64,
    record_trace: bool,
) -> Result<VarqaResult> {
    if spec.n_qubits() != h.n_qubits() {
        return Err(Error::Shape {
            expected: h.n_qubits(),
            found: spec.n_qubits(),
        });
    }
    let trials = spec.trial_count();
    let energies: Vec<Option<f64>> = (0..trials)
        .into_par_iter()
        .map(|i| match evaluate_trial(h, &spec.ansatz(i), config, derive_seed(master_seed, i)) {
            Ok(t) => Some(t.energy),
            Err(e) => {
                log::warn!("trial {i} failed: {e}");
                None
            }
        })
        .collect();

    let mut best: Option<(u64, f64, IsingAnsatz)> = None;
    let mut trace = record_trace.then(Vec::new);
    let mut failed = 0u64;
    for (i, e) in energies.iter().enumerate() {
        let Some(e) = *e else {
            failed += 1;
            continue;
        };
        let i = i as u64;
        let replace = match &best {
            None => true,
            Some((_, be, bt)) if (e - be).abs() <= ENERGY_TIE_TOLERANCE => {
                compare_trials(e, &spec.ansatz(i), *be, bt).is_lt()
            }
            Some((_, be, _)) => e < *be,
        };
        if replace {
            let improved = best.as_ref().is_none_or(|b| e < b.1);
            best = Some((i, e, spec.ansatz(i)));
            if improved {
                if let Some(t) = trace.as_mut() {
                    t.push((i, e));
                }
            }
        }
    }
    let Some((index, _, theta)) = best else {
        return Err(Error::Config(format!("all {trials} trials failed")));
    };
    let winner = evaluate_trial(h, &theta, config, derive_seed(master_seed, index))?;
    Ok(VarqaResult {
        best_theta: winner.theta,
        best_signs: winner.signs,
        best_state: winner.state,
        best_energy: winner.energy,
        best_index: index,
        trials_evaluated: trials,
        failed_trials: failed,
        energy_trace: trace,
    })
}

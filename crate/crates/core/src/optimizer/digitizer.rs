use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sampler::{derive_seed, IsingAnsatz};

/// Largest exhaustive enumeration accepted, `2^22` ansatz.
pub const ENUMERATION_BUDGET: u128 = 1 << 22;

/// Integer grid each ansatz parameter is restricted to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DigitizerKind {
    /// `{-1, 1}`
    D1,
    /// `{-1, 0, 1}`
    D2,
}

impl DigitizerKind {
    pub fn values(&self) -> &'static [f64] {
        match self {
            DigitizerKind::D1 => &[-1.0, 1.0],
            DigitizerKind::D2 => &[-1.0, 0.0, 1.0],
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            DigitizerKind::D1 => "d1",
            DigitizerKind::D2 => "d2",
        }
    }
}

impl std::str::FromStr for DigitizerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "d1" => Ok(DigitizerKind::D1),
            "d2" => Ok(DigitizerKind::D2),
            _ => Err(Error::Config(format!("unknown digitizer '{s}' (expected d1 or d2)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    /// `trials` i.i.d. uniform draws; duplicates allowed.
    Random { trials: u64, seed: u64 },
}

/// A digitized search space over the `nu` parameters of an `M`-qubit ansatz.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DigitizerSpec {
    kind: DigitizerKind,
    nu: usize,
    n_qubits: usize,
    mode: SearchMode,
}

impl DigitizerSpec {
    pub fn new(kind: DigitizerKind, nu: usize, mode: SearchMode) -> Result<Self> {
        let n_qubits = IsingAnsatz::qubits_for_parameter_count(nu)
            .ok_or_else(|| Error::InvalidAnsatz(format!("nu = {nu} is not M(M+1)/2 + 1")))?;
        match mode {
            SearchMode::Exhaustive => {
                let size = (kind.values().len() as u128).checked_pow(nu as u32);
                match size {
                    Some(s) if s <= ENUMERATION_BUDGET => {}
                    _ => {
                        return Err(Error::BudgetExceeded {
                            size: size.unwrap_or(u128::MAX),
                            budget: ENUMERATION_BUDGET,
                        })
                    }
                }
            }
            SearchMode::Random { trials: 0, .. } => {
                return Err(Error::Config("random search needs at least one trial".into()));
            }
            SearchMode::Random { .. } => {}
        }
        Ok(DigitizerSpec {
            kind,
            nu,
            n_qubits,
            mode,
        })
    }

    /// Spec sized for an `M`-qubit Hamiltonian.
    pub fn for_qubits(kind: DigitizerKind, n_qubits: usize, mode: SearchMode) -> Result<Self> {
        Self::new(kind, crate::sampler::parameter_count(n_qubits), mode)
    }

    pub fn kind(&self) -> DigitizerKind {
        self.kind
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn mode(&self) -> SearchMode {
        self.mode
    }

    pub fn trial_count(&self) -> u64 {
        match self.mode {
            SearchMode::Exhaustive => (self.kind.values().len() as u64).pow(self.nu as u32),
            SearchMode::Random { trials, .. } => trials,
        }
    }

    /// Trial `index` of the stream.
    ///
    /// Exhaustive order is an odometer over the parameter order of
    /// [`IsingAnsatz`] with `theta_0` fastest and values ascending, so index
    /// order is lexicographic order of the parameter vectors. Random trial
    /// `index` depends only on `(seed, index)`.
    pub fn ansatz(&self, index: u64) -> IsingAnsatz {
        let values = self.kind.values();
        let base = values.len() as u64;
        let params: Vec<f64> = match self.mode {
            SearchMode::Exhaustive => {
                let mut digits = vec![0.0; self.nu];
                let mut rest = index;
                for d in digits.iter_mut().rev() {
                    *d = values[(rest % base) as usize];
                    rest /= base;
                }
                digits
            }
            SearchMode::Random { seed, .. } => {
                let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, index));
                (0..self.nu)
                    .map(|_| values[rng.random_range(0..values.len())])
                    .collect()
            }
        };
        IsingAnsatz::from_parameters(self.n_qubits, params).expect("digitized parameters are valid")
    }
}

/// The ordered stream of digitized ansatz.
pub fn enumerate_digitizer(spec: &DigitizerSpec) -> impl Iterator<Item = IsingAnsatz> + '_ {
    (0..spec.trial_count()).map(move |i| spec.ansatz(i))
}

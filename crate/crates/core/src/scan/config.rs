use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::convert::Format;
use crate::error::{Error, Result};
use crate::hamiltonian::{SpinOrdering, DEFAULT_SHIFT_HARTREE};
use crate::optimizer::{DigitizerKind, DigitizerSpec, SamplerConfig, SearchMode};
use crate::sampler::{AnnealSchedule, Backend, SampleCount, DEFAULT_GIBBS_BETA};
use crate::trial_state::SignOptions;

/// A scan read from TOML. Relative source and output paths resolve against
/// the config file's directory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanConfig {
    #[serde(default)]
    pub sources: Vec<Source>,
    #[serde(default)]
    pub digitizer: DigitizerSettings,
    #[serde(default)]
    pub sampler: SamplerSettings,
    #[serde(default)]
    pub excited: Option<ExcitedSettings>,
    #[serde(default)]
    pub fine_tune: Option<FineTuneSettings>,
    #[serde(default)]
    pub ordering: SpinOrdering,
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub report: Option<PathBuf>,
    #[serde(default)]
    pub seed: u64,
    /// Write wall times to the CSV; disable for byte-reproducible output.
    #[serde(default = "yes")]
    pub timings: bool,
}

fn yes() -> bool {
    true
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            sources: Vec::new(),
            digitizer: DigitizerSettings::default(),
            sampler: SamplerSettings::default(),
            excited: None,
            fine_tune: None,
            ordering: SpinOrdering::default(),
            output: None,
            report: None,
            seed: 0,
            timings: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Source {
    pub label: String,
    pub path: PathBuf,
    /// Inferred from the file name when absent.
    #[serde(default)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeName {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DigitizerSettings {
    pub kind: DigitizerKind,
    pub mode: ModeName,
    /// Random mode only.
    #[serde(default = "default_trials")]
    pub trials: u64,
    #[serde(default)]
    pub seed: u64,
}

fn default_trials() -> u64 {
    100_000
}

impl Default for DigitizerSettings {
    fn default() -> Self {
        DigitizerSettings {
            kind: DigitizerKind::D2,
            mode: ModeName::Exhaustive,
            trials: default_trials(),
            seed: 0,
        }
    }
}

impl DigitizerSettings {
    pub fn mode(&self) -> SearchMode {
        match self.mode {
            ModeName::Exhaustive => SearchMode::Exhaustive,
            ModeName::Random => SearchMode::Random {
                trials: self.trials,
                seed: self.seed,
            },
        }
    }

    pub fn to_spec(&self, n_qubits: usize) -> Result<DigitizerSpec> {
        DigitizerSpec::for_qubits(self.kind, n_qubits, self.mode())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BackendName {
    Gibbs,
    GibbsShots,
    Sa,
}

impl std::str::FromStr for BackendName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "gibbs" | "exact_gibbs" => Ok(BackendName::Gibbs),
            "gibbs_shots" => Ok(BackendName::GibbsShots),
            "sa" | "simulated_annealing" => Ok(BackendName::Sa),
            _ => Err(Error::Config(format!("unknown backend '{s}' (expected gibbs, gibbs_shots or sa)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SamplerSettings {
    pub backend: BackendName,
    /// Gibbs inverse temperature.
    #[serde(default = "default_beta")]
    pub beta: f64,
    #[serde(default = "default_shots")]
    pub shots: u64,
    /// Use exact probabilities instead of `shots` (Gibbs backends only).
    #[serde(default)]
    pub exact: bool,
    #[serde(default)]
    pub support_floor: f64,
    #[serde(default)]
    pub schedule: Option<AnnealSchedule>,
}

fn default_beta() -> f64 {
    DEFAULT_GIBBS_BETA
}

fn default_shots() -> u64 {
    1000
}

impl Default for SamplerSettings {
    fn default() -> Self {
        SamplerSettings {
            backend: BackendName::Gibbs,
            beta: DEFAULT_GIBBS_BETA,
            shots: default_shots(),
            exact: false,
            support_floor: 0.0,
            schedule: None,
        }
    }
}

impl SamplerSettings {
    pub fn schedule(&self) -> AnnealSchedule {
        self.schedule.unwrap_or_default()
    }

    pub fn to_config(&self) -> SamplerConfig {
        let backend = match self.backend {
            BackendName::Gibbs => Backend::ExactGibbs { beta: self.beta },
            BackendName::GibbsShots => Backend::GibbsShots { beta: self.beta },
            BackendName::Sa => Backend::SimulatedAnnealing {
                schedule: self.schedule(),
            },
        };
        SamplerConfig {
            backend,
            shots: if self.exact {
                SampleCount::Infinite
            } else {
                SampleCount::Finite(self.shots)
            },
            support_floor: self.support_floor,
            signs: SignOptions::default(),
        }
    }
}

/// `k` applies to labels (distances) strictly below `below`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KRule {
    pub below: f64,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExcitedSettings {
    #[serde(default = "default_alpha")]
    pub alpha_shift: f64,
    #[serde(default)]
    pub rules: Vec<KRule>,
    /// `k` for labels beyond every rule.
    pub otherwise: usize,
}

fn default_alpha() -> f64 {
    DEFAULT_SHIFT_HARTREE
}

impl ExcitedSettings {
    /// The H2 triplet table: 5 below 0.475, 3 below 0.75, else 1.
    pub fn h2_triplet() -> Self {
        ExcitedSettings {
            alpha_shift: DEFAULT_SHIFT_HARTREE,
            rules: vec![KRule { below: 0.475, k: 5 }, KRule { below: 0.75, k: 3 }],
            otherwise: 1,
        }
    }

    /// A fixed `k` for every label.
    pub fn constant(k: usize, alpha_shift: f64) -> Self {
        ExcitedSettings {
            alpha_shift,
            rules: Vec::new(),
            otherwise: k,
        }
    }

    pub fn k_for(&self, distance: f64) -> usize {
        self.rules
            .iter()
            .find(|r| distance < r.below)
            .map_or(self.otherwise, |r| r.k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FineTuneSettings {
    #[serde(default = "yes")]
    pub enabled: bool,
    /// Parameter indices to tune; all when absent.
    #[serde(default)]
    pub coordinates: Option<Vec<usize>>,
}

impl ScanConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// Read a config file, resolving relative paths against its directory.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::from(e).in_file(path))?;
        let mut config = Self::from_toml(&text).map_err(|e| e.in_file(path))?;
        let base = path.parent().unwrap_or(Path::new(""));
        let resolve = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        config.sources.iter_mut().for_each(|s| resolve(&mut s.path));
        config.output.as_mut().map(resolve);
        config.report.as_mut().map(resolve);
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        let mut labels = std::collections::HashSet::new();
        for s in &self.sources {
            if !labels.insert(s.label.as_str()) {
                return Err(Error::Config(format!("duplicate label '{}'", s.label)));
            }
        }
        if let Some(ex) = &self.excited {
            if ex.rules.windows(2).any(|w| w[1].below <= w[0].below) {
                return Err(Error::Config("k-rule thresholds must be strictly increasing".into()));
            }
            if ex.alpha_shift.is_nan() || ex.alpha_shift <= 0.0 {
                return Err(Error::Config("alpha shift must be positive".into()));
            }
        }
        if self.sampler.backend == BackendName::Sa {
            self.sampler.schedule().validate()?;
            if self.sampler.exact {
                return Err(Error::Config("simulated annealing needs finite shots".into()));
            }
        }
        if !self.sampler.exact && self.sampler.shots == 0 {
            return Err(Error::Config("shots must be at least 1".into()));
        }
        if !(self.sampler.beta.is_finite() && self.sampler.beta >= 0.0) {
            return Err(Error::Config(format!("invalid beta {}", self.sampler.beta)));
        }
        Ok(())
    }
}

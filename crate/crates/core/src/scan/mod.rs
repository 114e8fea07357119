//! Batch scans over many Hamiltonians, with CSV and report output.

mod config;
mod convert;

pub use config::{
    BackendName, DigitizerSettings, ExcitedSettings, FineTuneSettings, KRule, ModeName, SamplerSettings, ScanConfig,
    Source,
};
pub use convert::{convert, convert_text, load_hamiltonian, read_hamiltonian, Format};

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hamiltonian::{exact_diagonalize, Observable, exact_diagonalize_with, EdOptions, PauliHamiltonian, DENSE_QUBIT_LIMIT};
use crate::optimizer::{
    evaluate_trial, excited_state_search, fine_tune, varqa_search, Coordinates, FineTuneOptions, SamplerConfig,
    VarqaResult,
};
use crate::sampler::derive_seed;
use crate::units::hartree_to_kcal;

pub const CSV_HEADER: [&str; 8] = [
    "label",
    "varqa_hartree",
    "ed_hartree",
    "error_kcal_mol",
    "trials",
    "support",
    "seconds",
    "error",
];

/// One scanned Hamiltonian.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub label: String,
    pub varqa_energy: f64,
    pub ed_energy: f64,
    pub error_kcal_mol: f64,
    pub trials: u64,
    pub support: usize,
    pub seconds: f64,
    pub result: Option<VarqaResult>,
    /// Set when the row failed; the numeric fields are then NaN or zero.
    pub failure: Option<String>,
}

impl ScanRow {
    fn failed(label: &str, e: &Error, seconds: f64) -> Self {
        ScanRow {
            label: label.to_string(),
            varqa_energy: f64::NAN,
            ed_energy: f64::NAN,
            error_kcal_mol: f64::NAN,
            trials: 0,
            support: 0,
            seconds,
            result: None,
            failure: Some(e.to_string()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScanOutput {
    pub rows: Vec<ScanRow>,
    pub csv: String,
    pub report: String,
}

impl ScanOutput {
    pub fn failed_rows(&self) -> usize {
        self.rows.iter().filter(|r| r.failure.is_some()).count()
    }
}

/// Run every source of `config`, writing the CSV (and report) when paths
/// are configured. Rows keep config order; a row error is recorded in the
/// row, a file error aborts the scan.
pub fn run_scan(config: &ScanConfig) -> Result<ScanOutput> {
    config.validate()?;
    let hamiltonians = config
        .sources
        .iter()
        .map(|s| load_hamiltonian(&s.path, s.format.unwrap_or_else(|| Format::from_path(&s.path)), config.ordering))
        .collect::<Result<Vec<_>>>()?;

    let rows: Vec<ScanRow> = config
        .sources
        .par_iter()
        .zip(hamiltonians.par_iter())
        .enumerate()
        .map(|(i, (source, h))| {
            let start = Instant::now();
            let seed = derive_seed(config.seed, i as u64);
            match scan_row(config, &source.label, h, seed) {
                Ok(mut row) => {
                    row.seconds = start.elapsed().as_secs_f64();
                    row
                }
                Err(e) => {
                    log::error!("row '{}' failed: {e}", source.label);
                    ScanRow::failed(&source.label, &e, start.elapsed().as_secs_f64())
                }
            }
        })
        .collect();

    let csv = render_csv(&rows, config.timings)?;
    let report = render_report(&rows);
    if let Some(path) = &config.output {
        write_file(path, &csv)?;
    }
    if let Some(path) = &config.report {
        write_file(path, &report)?;
    }
    Ok(ScanOutput { rows, csv, report })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::from(e).in_file(path))
}

fn scan_row(config: &ScanConfig, label: &str, h: &PauliHamiltonian, seed: u64) -> Result<ScanRow> {
    let sampler = config.sampler.to_config();
    let spec = config.digitizer.to_spec(h.n_qubits())?;
    let (h_search, reference, mut result) = match &config.excited {
        Some(ex) => {
            let k = if ex.rules.is_empty() {
                ex.otherwise
            } else {
                let distance: f64 = label
                    .parse()
                    .map_err(|_| Error::Config(format!("distance-dependent k needs numeric labels, got '{label}'")))?;
                ex.k_for(distance)
            };
            let found = excited_state_search(h, k, ex.alpha_shift, &spec, &sampler, seed)?;
            (Some(found.hamiltonian), found.target_energy, found.result)
        }
        None => {
            let ed = ground_energy(h)?;
            (None, ed, varqa_search(h, &spec, &sampler, seed, false)?)
        }
    };

    if let Some(ft) = &config.fine_tune {
        if ft.enabled {
            let options = FineTuneOptions {
                coordinates: ft.coordinates.clone().map_or(Coordinates::All, Coordinates::Subset),
                seed: derive_seed(seed, result.best_index),
                ..FineTuneOptions::default()
            };
            let tuned = match &h_search {
                Some(d) => refine(d, &result, &sampler, &options)?,
                None => refine(h, &result, &sampler, &options)?,
            };
            if let Some(t) = tuned {
                result = t;
            }
        }
    }

    Ok(ScanRow {
        label: label.to_string(),
        varqa_energy: result.best_energy,
        ed_energy: reference,
        error_kcal_mol: hartree_to_kcal(result.best_energy - reference),
        trials: result.trials_evaluated,
        support: result.best_state.len(),
        seconds: 0.0,
        result: Some(result),
        failure: None,
    })
}

fn refine<H: Observable + ?Sized>(
    h: &H,
    result: &VarqaResult,
    sampler: &SamplerConfig,
    options: &FineTuneOptions,
) -> Result<Option<VarqaResult>> {
    let tuned = fine_tune(&result.best_theta, h, sampler, options)?;
    if tuned.energy >= result.best_energy {
        return Ok(None);
    }
    let t = evaluate_trial(h, &tuned.theta, sampler, options.seed)?;
    Ok(Some(VarqaResult {
        best_theta: t.theta,
        best_signs: t.signs,
        best_state: t.state,
        best_energy: t.energy,
        ..result.clone()
    }))
}

/// Exact ground energy; wide registers are restricted to half filling.
fn ground_energy(h: &PauliHamiltonian) -> Result<f64> {
    let m = h.n_qubits();
    let spectrum = if m <= DENSE_QUBIT_LIMIT {
        exact_diagonalize(h)?
    } else {
        exact_diagonalize_with(
            h,
            &EdOptions {
                lowest: Some(1),
                particles: Some(m / 2),
            },
        )?
    };
    Ok(spectrum.ground_energy())
}

fn render_csv(rows: &[ScanRow], timings: bool) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(std::io::Error::other(e));
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in rows {
        let seconds = if timings { format!("{:.3}", r.seconds) } else { String::new() };
        let record = match &r.failure {
            None => [
                r.label.clone(),
                format!("{:.12}", r.varqa_energy),
                format!("{:.12}", r.ed_energy),
                format!("{:.6}", r.error_kcal_mol),
                r.trials.to_string(),
                r.support.to_string(),
                seconds,
                String::new(),
            ],
            Some(msg) => [
                r.label.clone(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                seconds,
                msg.clone(),
            ],
        };
        w.write_record(&record).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn render_report(rows: &[ScanRow]) -> String {
    let mut out = String::new();
    for r in rows {
        let _ = writeln!(out, "[{}]", r.label);
        match (&r.result, &r.failure) {
            (Some(res), _) => out.push_str(&res.report(Some(r.ed_energy))),
            (None, Some(msg)) => {
                let _ = writeln!(out, "failed {msg}");
            }
            (None, None) => {}
        }
        out.push('\n');
    }
    out
}

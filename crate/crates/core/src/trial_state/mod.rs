//! Signed-amplitude trial states built from sampled bit strings.
//!
//! A distribution `p(m)` and a sign choice `eps_m` give the state
//! `sum_m eps_m sqrt(p(m)) |m>`. Its energy only needs matrix elements between
//! support states, so no dense vectors are formed.

mod energy;
mod signs;

pub use energy::{expected_energy, transition_element, SupportCouplings};
pub use signs::{optimize_signs, optimize_signs_with, SignOptions, SignSearch, DEFAULT_EXHAUSTIVE_LIMIT};

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use crate::bits;
use crate::error::{Error, Result};
use crate::sampler::ProbabilityTable;

/// Tolerance on `sum a^2 = 1`.
pub const NORM_TOLERANCE: f64 = 1e-10;

/// Normalized real superposition over a sparse set of basis states.
///
/// Support states are kept in ascending order. The amplitude of largest
/// magnitude (smallest state on ties) is always positive.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialState {
    n_qubits: usize,
    support: Vec<(u64, f64)>,
}

impl TrialState {
    /// Normalizes and canonicalizes the sign; zero amplitudes are dropped.
    pub fn new(n_qubits: usize, amplitudes: impl IntoIterator<Item = (u64, f64)>) -> Result<Self> {
        let valid = bits::full_mask(n_qubits);
        let mut map = BTreeMap::new();
        for (m, a) in amplitudes {
            if m & !valid != 0 {
                return Err(Error::InvalidState(format!(
                    "state {m} does not fit in {n_qubits} qubits"
                )));
            }
            if !a.is_finite() {
                return Err(Error::InvalidState(format!("non-finite amplitude on state {m}")));
            }
            if map.insert(m, a).is_some() {
                return Err(Error::InvalidState(format!(
                    "duplicate state {}",
                    bits::format_bits(m, n_qubits)
                )));
            }
        }
        let mut support: Vec<(u64, f64)> = map.into_iter().filter(|(_, a)| *a != 0.0).collect();
        if support.is_empty() {
            return Err(Error::EmptyDistribution);
        }
        let norm = support.iter().map(|(_, a)| a * a).sum::<f64>().sqrt();
        let lead = support
            .iter()
            .fold(support[0], |best, &e| if e.1.abs() > best.1.abs() { e } else { best });
        let scale = lead.1.signum() / norm;
        for e in &mut support {
            e.1 *= scale;
        }
        Ok(TrialState { n_qubits, support })
    }

    pub fn basis_state(n_qubits: usize, state: u64) -> Result<Self> {
        Self::new(n_qubits, [(state, 1.0)])
    }

    /// Sparse copy of a dense vector, dropping entries with `|v| <= cutoff`.
    pub fn from_dense(n_qubits: usize, vector: &[f64], cutoff: f64) -> Result<Self> {
        if vector.len() != 1usize << n_qubits {
            return Err(Error::Shape {
                expected: 1 << n_qubits,
                found: vector.len(),
            });
        }
        Self::new(
            n_qubits,
            vector
                .iter()
                .enumerate()
                .filter(|(_, v)| v.abs() > cutoff)
                .map(|(m, &v)| (m as u64, v)),
        )
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// `(state, amplitude)` in ascending state order.
    pub fn support(&self) -> &[(u64, f64)] {
        &self.support
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn states(&self) -> impl Iterator<Item = u64> + '_ {
        self.support.iter().map(|e| e.0)
    }

    pub fn amplitude(&self, state: u64) -> f64 {
        self.support
            .binary_search_by_key(&state, |e| e.0)
            .map_or(0.0, |i| self.support[i].1)
    }

    pub fn signs(&self) -> SignPattern {
        SignPattern {
            entries: self.support.iter().map(|&(m, a)| (m, a < 0.0)).collect(),
        }
    }

    /// `<v|psi>` against a dense vector of length `2^M`.
    pub fn overlap_dense(&self, vector: &[f64]) -> f64 {
        self.support
            .iter()
            .map(|&(m, a)| a * vector.get(m as usize).copied().unwrap_or(0.0))
            .sum()
    }

    pub fn to_dense(&self) -> Vec<f64> {
        let mut v = vec![0.0; 1usize << self.n_qubits];
        for &(m, a) in &self.support {
            v[m as usize] = a;
        }
        v
    }

    /// One `bits amplitude` line per support state, 17 significant digits.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for &(m, a) in &self.support {
            let _ = writeln!(out, "{} {:.16e}", bits::format_bits(m, self.n_qubits), a);
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut width = None;
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let lineno = idx + 1;
            let mut tok = line.split_whitespace();
            let (Some(b), Some(a), None) = (tok.next(), tok.next(), tok.next()) else {
                return Err(Error::parse(lineno, format!("expected 'bits amplitude', got '{line}'")));
            };
            let (m, len) = bits::parse_bits(b).map_err(|_| Error::parse(lineno, format!("invalid bit string '{b}'")))?;
            if *width.get_or_insert(len) != len {
                return Err(Error::parse(lineno, "bit strings of different lengths"));
            }
            let a: f64 = a
                .parse()
                .map_err(|_| Error::parse(lineno, format!("invalid amplitude '{a}'")))?;
            entries.push((m, a));
        }
        let m = width.ok_or(Error::EmptyDistribution)?;
        Self::new(m, entries)
    }
}

impl fmt::Display for TrialState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Sign `eps_m = +-1` for each state of a support.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignPattern {
    /// `(state, negative)` in ascending state order.
    entries: Vec<(u64, bool)>,
}

impl SignPattern {
    pub fn all_positive(states: impl IntoIterator<Item = u64>) -> Self {
        Self::from_flags(states.into_iter().map(|m| (m, false)))
    }

    /// Signs given as `+1` / `-1`.
    pub fn from_signs(signs: impl IntoIterator<Item = (u64, i8)>) -> Result<Self> {
        let mut flags = Vec::new();
        for (m, s) in signs {
            match s {
                1 => flags.push((m, false)),
                -1 => flags.push((m, true)),
                other => return Err(Error::InvalidState(format!("sign {other} is not +-1"))),
            }
        }
        Ok(Self::from_flags(flags))
    }

    pub(crate) fn from_flags(flags: impl IntoIterator<Item = (u64, bool)>) -> Self {
        let map: BTreeMap<u64, bool> = flags.into_iter().collect();
        SignPattern {
            entries: map.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sign(&self, state: u64) -> Option<i8> {
        self.entries
            .binary_search_by_key(&state, |e| e.0)
            .ok()
            .map(|i| if self.entries[i].1 { -1 } else { 1 })
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, i8)> + '_ {
        self.entries.iter().map(|&(m, neg)| (m, if neg { -1 } else { 1 }))
    }

    pub fn negated(&self) -> Self {
        SignPattern {
            entries: self.entries.iter().map(|&(m, n)| (m, !n)).collect(),
        }
    }
}

impl fmt::Display for SignPattern {
    /// `+`/`-` per state in ascending state order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(_, neg) in &self.entries {
            f.write_char(if neg { '-' } else { '+' })?;
        }
        Ok(())
    }
}

/// `sum_m eps_m sqrt(p(m)) |m>` with `p` renormalized to its total.
pub fn build_trial_state(probs: &ProbabilityTable, signs: &SignPattern) -> Result<TrialState> {
    if probs.is_empty() {
        return Err(Error::EmptyDistribution);
    }
    if probs.len() != signs.len()
        || probs
            .entries()
            .iter()
            .zip(&signs.entries)
            .any(|(p, s)| p.0 != s.0)
    {
        return Err(Error::SignMismatch);
    }
    let total = probs.total();
    TrialState::new(
        probs.n_qubits(),
        probs
            .entries()
            .iter()
            .zip(&signs.entries)
            .map(|(&(m, p), &(_, neg))| {
                let a = (p / total).sqrt();
                (m, if neg { -a } else { a })
            }),
    )
}
